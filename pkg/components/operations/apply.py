"""
Application of a lopsp-operation to a map.

Every dart ``a`` of the host ``G`` names one double chamber ``D(a)``: its
0-points are the tail and head of ``a``, its 1-point is the edge of ``a`` and
its 2-point is the face on the left of ``a``. One copy of the double chamber
patch is glued into each of them. The sides of ``D(a)`` are shared with the
neighbouring double chambers through keys naming the host dart the side
belongs to:

* ``('H', b, i)`` for the copy of P(v0, v1) joining the tail of ``b`` to its
  edge point (left copy in ``D(b)``, right copy in ``D(b ^ 1)``),
* ``('A', b, i)`` for the copy of P(v0, v2) joining the tail of ``b`` to the
  face point of ``b`` (left copy in ``D(b)``, right copy in ``D(x)`` with
  ``phi(x) = b``).
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from components.errors import UnknownVertex
from components.maps.barycentric import PrimalTables, TypedMap, extract_primal_tables, n0
from components.maps.map_core import Assembly, EmbeddedMap, SubgraphMask, assemble_map
from components.operations.lopsp_model import CutPath, LopspOperation
from components.operations.patches import LEFT, DoubleChamberPatch, double_chamber_patch

logger = logging.getLogger(__name__)

Origin = Tuple[int, int]


@dataclass(frozen=True)
class ApplicationResult:
    """
    O(G) together with B_{O(G)}, the projection onto the operation and the shadows.

    ``pi_vertex[x]`` and ``pi_edge[e]`` give the operation vertex and edge that a
    vertex or edge of ``b_result`` is a copy of. ``vertex_origins[x]`` lists the
    (host dart, patch vertex) pairs glued into ``x``.
    """
    op: LopspOperation
    host: EmbeddedMap
    patch: DoubleChamberPatch
    assembly: Assembly
    b_result: TypedMap
    tables: PrimalTables
    pi_vertex: Tuple[int, ...]
    pi_edge: Tuple[int, ...]
    vertex_origins: Tuple[Tuple[Origin, ...], ...]
    vertex_shadows: Tuple[FrozenSet[int], ...]
    face_shadows: Tuple[FrozenSet[int], ...]

    @property
    def result(self) -> EmbeddedMap:
        return self.tables.map

    @property
    def path(self) -> CutPath:
        return self.patch.path

    def b_vertex(self, key: Hashable) -> int:
        return self.assembly.vertex_index()[key]

    def point_of_vertex(self, v: int) -> int:
        """The B_{O(G)} vertex standing for host vertex ``v``."""
        return self.b_vertex(('V', v))

    def point_of_edge(self, e: int) -> int:
        return self.b_vertex(('E', e))

    def point_of_face(self, f: int) -> int:
        return self.b_vertex(('F', f))


def _vertex_key(g: EmbeddedMap, patch: DoubleChamberPatch, a: int, x: int) -> Hashable:
    if x == patch.v1:
        return 'E', a >> 1
    if x == patch.v2:
        return 'F', g.face_of(a)
    if not patch.is_boundary_vertex(x):
        return 'I', a, x
    side, i = patch.side_of_vertex(x)
    if i == patch.j:
        return 'V', g.dart_owner[a] if side == LEFT else g.head(a)
    if i < patch.j:
        return 'H', a if side == LEFT else a ^ 1, i
    return 'A', a if side == LEFT else g.phi(a), i


def _edge_key(g: EmbeddedMap, patch: DoubleChamberPatch, a: int, e: int) -> Hashable:
    if not patch.is_boundary_edge(e):
        return 'I', a, e
    side, q = patch.side_of_edge(e)
    if patch.segment_of_path_edge(q) == 1:
        return 'H', a if side == LEFT else a ^ 1, q
    return 'A', a if side == LEFT else g.phi(a), q


def apply_lopsp(o: LopspOperation, g: EmbeddedMap, p: Optional[CutPath] = None,
                patch: Optional[DoubleChamberPatch] = None) -> ApplicationResult:
    """
    Apply ``o`` to ``g``.

    Args:
        o: A valid lopsp-operation
        g: Host map of any genus
        p: Cut-path to use; the minimal one by default
        patch: A patch already built for ``o``, which then overrides ``p``

    Returns:
        ApplicationResult with O(G), B_{O(G)}, projections and shadows
    """
    if patch is None:
        patch = double_chamber_patch(o, p)
    pm = patch.map
    inner = patch.inner_faces()

    polygons = []
    for a in g.darts():
        for face in inner:
            polygons.append([(_vertex_key(g, patch, a, pm.dart_owner[d]), _edge_key(g, patch, a, d >> 1))
                             for d in face.darts])

    order = ([('V', v) for v in range(g.vertex_count)]
             + [('E', e) for e in range(g.edge_count)]
             + [('F', f) for f in range(g.face_count)])
    name = f"{o.name}({g.name})" if o.name and g.name else None
    assembly = assemble_map(polygons, name=f"B({name})" if name else None, vertex_order=order)
    bm = assembly.map

    index = assembly.vertex_index()
    origins: List[List[Origin]] = [[] for _ in range(bm.vertex_count)]
    pi_vertex = [-1] * bm.vertex_count
    for a in g.darts():
        for x in range(pm.vertex_count):
            v = index[_vertex_key(g, patch, a, x)]
            origins[v].append((a, x))
            pi_vertex[v] = patch.pi_vertex(x)
    eindex = {k: i for i, k in enumerate(assembly.edge_keys)}
    pi_edge = [-1] * bm.edge_count
    for a in g.darts():
        for e in range(pm.edge_count):
            pi_edge[eindex[_edge_key(g, patch, a, e)]] = patch.pi_edge(e)

    vtype = tuple(o.t(pv) for pv in pi_vertex)
    provenance = tuple(
        {'V': ('vertex', key[1]), 'E': ('edge', key[1]), 'F': ('face', key[1])}.get(key[0])
        for key in assembly.vertex_keys)
    b_result = TypedMap(bm, vtype, provenance)
    tables = extract_primal_tables(b_result, name)

    def shadow(key):
        return frozenset(tables.vertex_of[x] for x in n0(b_result, index[key]))

    vertex_shadows = tuple(shadow(('V', v)) for v in range(g.vertex_count))
    face_shadows = tuple(shadow(('F', f)) for f in range(g.face_count))

    logger.info(f"Applied {o.name} to {g.name}: {tables.map.counts()} from {g.counts()}")
    return ApplicationResult(o, g, patch, assembly, b_result, tables, tuple(pi_vertex), tuple(pi_edge),
                             tuple(tuple(x) for x in origins), vertex_shadows, face_shadows)


def vertex_shadow(r: ApplicationResult, v: int) -> FrozenSet[int]:
    """
    S_O(v): the vertices of O(G) in the 0-neighbourhood of ``v``.

    Raises:
        UnknownVertex: ``v`` is not a vertex of the host
    """
    if not 0 <= v < r.host.vertex_count:
        raise UnknownVertex(f"host has no vertex {v}")
    return r.vertex_shadows[v]


def face_shadow(r: ApplicationResult, f: int) -> FrozenSet[int]:
    if not 0 <= f < r.host.face_count:
        raise UnknownVertex(f"host has no face {f}")
    return r.face_shadows[f]


def edge_point_shadow(r: ApplicationResult, e: int) -> FrozenSet[int]:
    """0-neighbourhood of the 1-point of host edge ``e``."""
    x = r.point_of_edge(e)
    return frozenset(r.tables.vertex_of[y] for y in n0(r.b_result, x))


def pi_inverse(r: ApplicationResult, h: SubgraphMask) -> SubgraphMask:
    """Every vertex and edge of B_{O(G)} whose projection lies in ``h``."""
    vertices = frozenset(x for x, pv in enumerate(r.pi_vertex) if pv in h.vertices)
    edges = frozenset(e for e, pe in enumerate(r.pi_edge) if pe in h.edges)
    return SubgraphMask(vertices, edges)


def side_index(r: ApplicationResult) -> Dict[int, Tuple[Origin, ...]]:
    """B_{O(G)} vertices lying on patch boundaries, with their origins."""
    return {x: orig for x, orig in enumerate(r.vertex_origins)
            if any(r.patch.is_boundary_vertex(px) for _, px in orig)}
