"""
Breaking predicates: when a small vertex set of O(G) splits the picture of a
host vertex or host edge.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

import networkx as nx

from components.maps.map_core import to_networkx
from components.operations.apply import ApplicationResult, vertex_shadow

logger = logging.getLogger(__name__)


def _components(r: ApplicationResult, x: FrozenSet[int]) -> Dict[int, int]:
    """Component label of every vertex of O(G) outside ``x``."""
    g = to_networkx(r.result)
    g.remove_nodes_from(x)
    label = {}
    for i, comp in enumerate(nx.connected_components(g)):
        for v in comp:
            label[v] = i
    return label


def _check_cut(x: Iterable[int]) -> FrozenSet[int]:
    x = frozenset(x)
    if len(x) > 2:
        raise ValueError(f"breaking sets have at most two vertices, got {len(x)}")
    return x


def _vertex_broken(shadow: FrozenSet[int], x: FrozenSet[int], label: Dict[int, int]) -> bool:
    rest = shadow - x
    if not rest:
        return True
    return len({label[v] for v in rest}) > 1


def _edge_broken(s_v: FrozenSet[int], s_w: FrozenSet[int], x: FrozenSet[int],
                 label: Dict[int, int]) -> bool:
    rest_v, rest_w = s_v - x, s_w - x
    if not rest_v or not rest_w:
        return True
    return not ({label[a] for a in rest_v} & {label[b] for b in rest_w})


def breaks_vertex(r: ApplicationResult, x: Iterable[int], v: int) -> bool:
    """
    True iff ``x`` covers the whole shadow of host vertex ``v`` or the rest of
    that shadow lies in more than one component of O(G) - x.
    """
    x = _check_cut(x)
    return _vertex_broken(vertex_shadow(r, v), x, _components(r, x))


def breaks_edge(r: ApplicationResult, x: Iterable[int], e: int) -> bool:
    """
    True iff no path of O(G) - x joins the shadows of the two ends of host
    edge ``e``. A shadow lying entirely in ``x`` also breaks the edge.
    """
    x = _check_cut(x)
    v, w = r.host.edge_ends(e)
    return _edge_broken(vertex_shadow(r, v), vertex_shadow(r, w), x, _components(r, x))


@dataclass(frozen=True)
class BreakReport:
    cut: FrozenSet[int]
    broken_vertices: Tuple[int, ...]
    broken_edges: Tuple[int, ...]
    # host vertex -> components of O(G) - cut its shadow meets
    coverage: Dict[int, FrozenSet[int]]
    component_count: int

    @property
    def separates(self) -> bool:
        return self.component_count > 1

    def breaks_nothing(self) -> bool:
        return not self.broken_vertices and not self.broken_edges


def break_report(r: ApplicationResult, x: Iterable[int]) -> BreakReport:
    x = _check_cut(x)
    label = _components(r, x)
    host = r.host
    broken_vertices = tuple(v for v in range(host.vertex_count)
                            if _vertex_broken(vertex_shadow(r, v), x, label))
    broken_edges = []
    for e in range(host.edge_count):
        v, w = host.edge_ends(e)
        if _edge_broken(vertex_shadow(r, v), vertex_shadow(r, w), x, label):
            broken_edges.append(e)
    coverage = {v: frozenset(label[a] for a in vertex_shadow(r, v) - x) for v in range(host.vertex_count)}
    report = BreakReport(x, broken_vertices, tuple(broken_edges), coverage, len(set(label.values())))
    logger.debug(f"Cut {sorted(x)}: broken vertices {broken_vertices}, broken edges {tuple(broken_edges)}")
    return report


def break_reports(r: ApplicationResult, size: int = 2) -> Iterator[BreakReport]:
    """Reports for every vertex set of O(G) with ``size`` elements."""
    for x in itertools.combinations(range(r.result.vertex_count), size):
        yield break_report(r, x)


def broken_by_any(r: ApplicationResult, size: int = 2) -> List[BreakReport]:
    return [rep for rep in break_reports(r, size) if not rep.breaks_nothing()]
