"""
Hosts that show where 3-connectivity is lost: the toroidal cube graph that
every edge-breaking operation breaks, a host whose dual is simple but not
3-connected, and a multigraph that Kis breaks.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Sequence

import networkx as nx

from components.maps.map_core import (
    EmbeddedMap,
    dual,
    from_faces,
    genus,
    is_k_connected,
    is_simple,
    to_networkx,
    with_name,
)
from components.maps.standard_maps import torus_grid
from components.operations.apply import ApplicationResult, apply_lopsp
from components.operations.catalog import get_operation, operation_names
from components.operations.classify import OperationTag, classify
from components.operations.lopsp_model import LopspOperation
from components.verification.corpus import rotation_systems

logger = logging.getLogger(__name__)

# Q3 on the torus: two quadrilaterals and two octagons covering all vertices
TORUS_Q3_FACES = (
    (0, 1, 3, 2),
    (4, 5, 7, 6),
    (1, 0, 4, 6, 2, 3, 7, 5),
    (4, 0, 2, 6, 7, 3, 1, 5),
)


def torus_q3() -> EmbeddedMap:
    return from_faces(TORUS_Q3_FACES, name="torus_q3")


def counterexample_torus() -> EmbeddedMap:
    return torus_q3()


def octagon_vertices(m: EmbeddedMap) -> List[FrozenSet[int]]:
    return [frozenset(m.face_vertices(f.index)) for f in m.faces() if len(f) == 8]


def edge_breaking_operations() -> List[LopspOperation]:
    names = [n for n in operation_names() if classify(get_operation(n)).is_edge_breaking]
    return [get_operation(n) for n in names]


def breaks_every_edge_breaking_operation(host: EmbeddedMap,
                                         ops: Optional[Sequence[LopspOperation]] = None) -> bool:
    for o in ops or edge_breaking_operations():
        if is_k_connected(apply_lopsp(o, host).result, 3):
            return False
    return True


def _q3_rotation_systems() -> Iterator[EmbeddedMap]:
    g = nx.convert_node_labels_to_integers(nx.hypercube_graph(3), ordering='sorted')
    return rotation_systems(g, "q3")


def search_torus_counterexample(ops: Optional[Sequence[LopspOperation]] = None) -> Optional[EmbeddedMap]:
    """
    Walk through all rotation systems of the cube graph and return the first
    toroidal one with face lengths (4, 4, 8, 8) that no edge-breaking
    operation keeps 3-connected.
    """
    ops = list(ops or edge_breaking_operations())
    for m in _q3_rotation_systems():
        if genus(m) != 1 or sorted(len(f) for f in m.faces()) != [4, 4, 8, 8]:
            continue
        if breaks_every_edge_breaking_operation(m, ops):
            logger.info(f"Found torus counterexample {m.name}")
            return with_name(m, "torus_q3_searched")
    logger.warning("No toroidal cube embedding breaks every edge-breaking operation")
    return None


def dual_counterexample() -> EmbeddedMap:
    """A simple 3-connected toroidal map whose dual is simple but not 3-connected."""
    return with_name(apply_lopsp(get_operation('ambo'), torus_q3()).result, "ambo(torus_q3)")


@dataclass(frozen=True)
class MultigraphDemo:
    host: EmbeddedMap
    application: ApplicationResult
    cut: FrozenSet[int]

    @property
    def host_is_3_connected(self) -> bool:
        return is_k_connected(self.host, 3)

    @property
    def result_is_3_connected(self) -> bool:
        return is_k_connected(self.application.result, 3)


def kis_multigraph_demo(n: int = 3) -> MultigraphDemo:
    """
    Kis applied to a loopless 3-connected multigraph on the torus with a
    digon face. The digon's centre is only joined to the two digon corners,
    which form a 2-cut of the result.
    """
    host = torus_grid(n, doubled_edge=True)
    r = apply_lopsp(get_operation('kis'), host)
    cut = frozenset(minimum_cut(r.result))
    logger.info(f"Kis on {host.name}: 2-cut {sorted(cut)}")
    return MultigraphDemo(host, r, cut)


def minimum_cut(m: EmbeddedMap) -> List[int]:
    """A smallest vertex cut of the underlying simple graph; empty for complete graphs."""
    g = to_networkx(m)
    if g.number_of_edges() == g.number_of_nodes() * (g.number_of_nodes() - 1) // 2:
        return []
    return sorted(nx.minimum_node_cut(g))


def describe_counterexample(o: LopspOperation, host: Optional[EmbeddedMap] = None) -> dict:
    """Facts about ``o`` applied to the torus counterexample, for reports and the CLI demo."""
    host = host or torus_q3()
    r = apply_lopsp(o, host)
    result = r.result
    connected3 = is_k_connected(result, 3)
    cut = [] if connected3 else minimum_cut(result)
    return {
        'op': o.name,
        'class': classify(o).tag.value,
        'host': host.name,
        'host_3_connected': is_k_connected(host, 3),
        'host_genus': genus(host),
        'result_counts': result.counts(),
        'result_simple': is_simple(result),
        'result_3_connected': connected3,
        'minimum_cut': cut,
        'dual_simple': is_simple(dual(host)),
    }


def is_breaking_class(tag: OperationTag) -> bool:
    return tag in (OperationTag.DUAL, OperationTag.EDGE_BREAKING_1, OperationTag.EDGE_BREAKING_2)
