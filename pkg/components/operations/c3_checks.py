"""
Checks related to the c3 property: a necessary condition computed on two
glued patch copies, the triviality test for 4-cycles and an empirical probe.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from components.maps.map_core import EmbeddedMap, is_polyhedral
from components.maps.barycentric import EDGE
from components.maps.standard_maps import cube, dodecahedron, tetrahedron
from components.operations.apply import apply_lopsp
from components.operations.lopsp_model import LopspOperation, minimal_cut_paths
from components.operations.patches import ONE_SIDE, TWO_SIDE, double_chamber_patch, glue_patches

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class C3Verdict:
    """
    Outcome of the necessary check. A failure proves the operation is not c3;
    a pass proves nothing.
    """
    passed: bool
    gluing: Optional[str] = None
    cycle_vertices: Tuple[int, ...] = ()
    cycle_edges: Tuple[int, ...] = ()
    cut_path: Optional[Tuple[int, ...]] = None

    @property
    def cycle_length(self) -> int:
        return len(self.cycle_edges)

    def describe(self) -> str:
        if self.passed:
            return "c3-check=pass"
        return (f"c3-check=fail gluing={self.gluing} "
                f"cycle={'-'.join(map(str, self.cycle_vertices))}")


def _sides(m: EmbeddedMap, cycle_edges: FrozenSet[int]) -> List[FrozenSet[int]]:
    """Face sets of the regions left after cutting along ``cycle_edges``."""
    g = nx.Graph()
    g.add_nodes_from(range(m.face_count))
    for e in range(m.edge_count):
        if e not in cycle_edges:
            g.add_edge(m.face_of(2 * e), m.face_of(2 * e + 1))
    return [frozenset(c) for c in nx.connected_components(g)]


def is_trivial_4cycle(m: EmbeddedMap, cycle_edges: Sequence[int], vtype: Sequence[int],
                      outer_face: Optional[int] = None) -> bool:
    """
    True iff a side of the cycle holds nothing but one edge, or one type-1
    vertex with its four edges.

    Sides containing ``outer_face`` are not inspected.
    """
    cycle = frozenset(cycle_edges)
    on_cycle = {v for e in cycle for v in m.edge_ends(e)}
    for side in _sides(m, cycle):
        if outer_face is not None and outer_face in side:
            continue
        edges = [e for e in range(m.edge_count)
                 if e not in cycle and m.face_of(2 * e) in side and m.face_of(2 * e + 1) in side]
        vertices = [v for v in range(m.vertex_count)
                    if v not in on_cycle and all(m.face_of(d) in side for d in m.rotation(v))]
        if len(edges) == 1 and not vertices:
            return True
        if len(vertices) == 1 and vtype[vertices[0]] == EDGE and len(edges) == 4:
            return True
    return False


def _parallel_classes(m: EmbeddedMap) -> Dict[FrozenSet[int], List[int]]:
    classes: Dict[FrozenSet[int], List[int]] = defaultdict(list)
    for e in range(m.edge_count):
        classes[frozenset(m.edge_ends(e))].append(e)
    return classes


def short_cycles(m: EmbeddedMap):
    """
    Yield every cycle of length 1, 2 or 4 as ``(vertices, edges)``.

    Length-4 cycles are only listed once the map has no loops or parallel
    edges, since a shorter cycle already decides the check.
    """
    classes = _parallel_classes(m)
    short = False
    for ends, edges in sorted(classes.items(), key=lambda kv: kv[1][0]):
        if len(ends) == 1:
            short = True
            yield tuple(ends), (edges[0],)
        elif len(edges) > 1:
            short = True
            yield tuple(sorted(ends)), (edges[0], edges[1])
    if short:
        return

    edge_of = {ends: edges[0] for ends, edges in classes.items()}
    neighbours = {v: sorted(set(m.neighbours(v))) for v in range(m.vertex_count)}
    seen = set()
    for a in range(m.vertex_count):
        nb = neighbours[a]
        for i, b in enumerate(nb):
            for d in nb[i + 1:]:
                for c in set(neighbours[b]) & set(neighbours[d]):
                    if c == a:
                        continue
                    edges = tuple(edge_of[frozenset(pair)] for pair in ((a, b), (b, c), (c, d), (d, a)))
                    key = frozenset(edges)
                    if key in seen:
                        continue
                    seen.add(key)
                    yield (a, b, c, d), edges


def c3_necessary_check(o: LopspOperation) -> C3Verdict:
    """
    Look for a 2-cycle or a non-trivial 4-cycle in two patch copies sharing
    exactly one side, for every minimal cut-path.

    Both the P-diamond (shared 2-side) and a shared 1-side are tried; the
    other 1-side pairing is the mirror image of the latter.
    """
    for path in minimal_cut_paths(o):
        patch = double_chamber_patch(o, path)
        for kind in (TWO_SIDE, ONE_SIDE):
            glued = glue_patches(patch, kind)
            gm = glued.map
            for vertices, edges in short_cycles(gm):
                if len(edges) == 4 and is_trivial_4cycle(gm, edges, glued.vtype, glued.outer_face):
                    continue
                logger.info(f"{o.name} fails the c3 check: {len(edges)}-cycle {vertices} in {kind} gluing")
                return C3Verdict(False, kind, tuple(vertices), tuple(edges), path.vertices)
    return C3Verdict(True)


def c3_probe(o: LopspOperation, hosts: Optional[Sequence[EmbeddedMap]] = None) -> Dict[str, bool]:
    """
    Apply ``o`` to a few polyhedral hosts and report which results are
    polyhedral. This is evidence only: c3 quantifies over every polyhedral
    host.
    """
    hosts = hosts or (tetrahedron(), cube(), dodecahedron())
    verdicts = {}
    for host in hosts:
        verdicts[host.name] = is_polyhedral(apply_lopsp(o, host).result)
    return verdicts
