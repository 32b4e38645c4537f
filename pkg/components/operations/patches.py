"""
Double chamber patches and the glued pairs of patches built from them.

A patch is cut out of the operation along a cut-path with ``internal_component``.
Its boundary has ``2l`` positions for a cut-path with ``l`` edges: position
``i`` for ``0 < i < l`` is the right copy of path vertex ``i``, position
``2l - i`` is its left copy, position 0 is v1 and position ``l`` is v2.
Boundary edge ``t`` joins positions ``t`` and ``t + 1``.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Hashable, List, Optional, Tuple

from networkx.utils import UnionFind

from components.errors import InternalInvariantViolation
from components.maps.barycentric import TypedMap
from components.maps.map_core import (
    Assembly,
    EmbeddedMap,
    InternalComponent,
    SubgraphMask,
    assemble_map,
    internal_component,
)
from components.operations.lopsp_model import CutPath, LopspOperation, check_cut_path, find_cut_path

logger = logging.getLogger(__name__)

LEFT, RIGHT = 'L', 'R'
TWO_SIDE, ONE_SIDE = 'two-side', 'one-side'


@dataclass(frozen=True)
class DoubleChamberPatch:
    op: LopspOperation
    path: CutPath
    ic: InternalComponent

    @property
    def map(self) -> EmbeddedMap:
        return self.ic.map

    @property
    def length(self) -> int:
        return self.path.length

    @property
    def j(self) -> int:
        """Index of v0 on the cut-path."""
        return self.path.v0_index

    @property
    def boundary_size(self) -> int:
        return 2 * self.length

    @property
    def v1(self) -> int:
        return 0

    @property
    def v2(self) -> int:
        return self.length

    @property
    def v0_right(self) -> int:
        return self.j

    @property
    def v0_left(self) -> int:
        return 2 * self.length - self.j

    @cached_property
    def vtype(self) -> Tuple[int, ...]:
        return tuple(self.op.t(v) for v in self.ic.vertex_origin)

    def pi_vertex(self, x: int) -> int:
        return self.ic.vertex_origin[x]

    def pi_dart(self, d: int) -> int:
        return self.ic.dart_origin[d]

    def pi_edge(self, e: int) -> int:
        return self.ic.dart_origin[2 * e] >> 1

    def is_boundary_vertex(self, x: int) -> bool:
        return x < self.boundary_size

    def is_boundary_edge(self, e: int) -> bool:
        return e < self.boundary_size

    def position(self, side: str, p: int) -> int:
        """Boundary vertex of path vertex ``p`` on the given side."""
        if side == RIGHT:
            return p
        return (2 * self.length - p) % (2 * self.length)

    def path_edge(self, side: str, q: int) -> int:
        """Boundary edge copying path edge ``q`` (from path vertex ``q`` to ``q + 1``)."""
        return q if side == RIGHT else 2 * self.length - 1 - q

    def side_of_edge(self, t: int) -> Tuple[str, int]:
        """Side and path-edge index of boundary edge ``t``."""
        if t < self.length:
            return RIGHT, t
        return LEFT, 2 * self.length - 1 - t

    def side_of_vertex(self, x: int) -> Tuple[Optional[str], int]:
        """Side and path index of boundary vertex ``x``; the side is None for v1 and v2."""
        if x == 0 or x == self.length:
            return None, x
        if x < self.length:
            return RIGHT, x
        return LEFT, 2 * self.length - x

    def segment_of_path_edge(self, q: int) -> int:
        """1 when path edge ``q`` lies on P(v0, v1), else 2."""
        return 1 if q < self.j else 2

    def inner_faces(self):
        return self.ic.inner_faces()

    @property
    def chamber_count(self) -> int:
        return len(self.inner_faces())

    def typed(self) -> TypedMap:
        return TypedMap(self.map, self.vtype)


def double_chamber_patch(o: LopspOperation, p: Optional[CutPath] = None) -> DoubleChamberPatch:
    """
    Cut ``o`` open along ``p`` into its double chamber patch.

    Raises:
        InvalidCutPath: ``p`` is not a cut-path of ``o``
    """
    if p is None:
        p = find_cut_path(o)
    check_cut_path(o, p)
    m = o.base
    walk = list(p.darts) + [d ^ 1 for d in reversed(p.darts)]
    ic = internal_component(m, SubgraphMask.from_darts(m, p.darts), walk)
    patch = DoubleChamberPatch(o, p, ic)
    if patch.chamber_count != m.face_count:
        raise InternalInvariantViolation(
            f"patch of {o.name} has {patch.chamber_count} chambers, expected {m.face_count}")
    logger.debug(f"Patch of {o.name}: {ic.map.vertex_count} vertices, boundary {patch.boundary_size}")
    return patch


@dataclass(frozen=True)
class GluedPatches:
    """Two patch copies ``A`` and ``B`` glued along one side."""
    patch: DoubleChamberPatch
    kind: str
    assembly: Assembly
    vertex_of: Dict[Tuple[str, int], int]
    edge_of: Dict[Tuple[str, int], int]
    vtype: Tuple[int, ...]

    @property
    def map(self) -> EmbeddedMap:
        return self.assembly.map

    def vertex(self, copy: str, x: int) -> int:
        return self.vertex_of[(copy, x)]

    def edge(self, copy: str, e: int) -> int:
        return self.edge_of[(copy, e)]

    def typed(self) -> TypedMap:
        return TypedMap(self.map, self.vtype)

    @property
    def outer_face(self) -> int:
        return self.map.face_of(self.assembly.polygon_darts[0][0])

    def origin(self, v: int) -> List[Tuple[str, int]]:
        return sorted(k for k, w in self.vertex_of.items() if w == v)


def glue_patches(patch: DoubleChamberPatch, kind: str) -> GluedPatches:
    """
    Glue two copies of ``patch``.

    ``two-side`` shares both copies of P(v0, v1), which puts v1 inside.
    ``one-side`` shares the left copy of P(v0, v2) in ``A`` with the right copy
    in ``B``.
    """
    pm = patch.map
    ell, j = patch.length, patch.j
    vertices = UnionFind([(c, x) for c in 'AB' for x in range(pm.vertex_count)])
    edges = UnionFind([(c, e) for c in 'AB' for e in range(pm.edge_count)])

    def join(p, q):
        vertices.union(('A', patch.position(LEFT, p)), ('B', patch.position(RIGHT, p)))
        if q is not None:
            edges.union(('A', patch.path_edge(LEFT, q)), ('B', patch.path_edge(RIGHT, q)))

    if kind == TWO_SIDE:
        for p in range(j + 1):
            q = p if p < j else None
            join(p, q)
            vertices.union(('A', patch.position(RIGHT, p)), ('B', patch.position(LEFT, p)))
            if q is not None:
                edges.union(('A', patch.path_edge(RIGHT, q)), ('B', patch.path_edge(LEFT, q)))
    elif kind == ONE_SIDE:
        for p in range(j, ell + 1):
            join(p, p if p < ell else None)
    else:
        raise ValueError(f"unknown gluing '{kind}'")

    polygons = []
    uses: Counter = Counter()
    for c in 'AB':
        for face in patch.inner_faces():
            poly = [(vertices[(c, pm.dart_owner[d])], edges[(c, d >> 1)]) for d in face.darts]
            uses.update(ekey for _, ekey in poly)
            polygons.append(poly)

    outer_from: Dict[Hashable, Tuple[Hashable, Hashable]] = {}
    for poly in polygons:
        for i, (u, ekey) in enumerate(poly):
            if uses[ekey] == 1:
                v = poly[(i + 1) % len(poly)][0]
                if v in outer_from:
                    raise InternalInvariantViolation("glued patches do not form a disk")
                outer_from[v] = (ekey, u)
    start = next(iter(outer_from))
    outer = []
    v = start
    while True:
        ekey, u = outer_from[v]
        outer.append((v, ekey))
        v = u
        if v == start:
            break
    if len(outer) != len(outer_from):
        raise InternalInvariantViolation("outer boundary of glued patches is not a single cycle")

    assembly = assemble_map([outer] + polygons,
                            name=f"{kind}({patch.op.name})" if patch.op.name else None)
    index = assembly.vertex_index()
    eindex = {k: i for i, k in enumerate(assembly.edge_keys)}
    vertex_of = {(c, x): index[vertices[(c, x)]] for c in 'AB' for x in range(pm.vertex_count)}
    edge_of = {(c, e): eindex[edges[(c, e)]] for c in 'AB' for e in range(pm.edge_count)}
    vtype = [0] * assembly.map.vertex_count
    for (c, x), v in vertex_of.items():
        vtype[v] = patch.vtype[x]
    return GluedPatches(patch, kind, assembly, vertex_of, edge_of, tuple(vtype))


@dataclass(frozen=True)
class OpDiamond:
    """The P-diamond: two patches sharing both copies of P(v0, v1)."""
    glued: GluedPatches

    @property
    def patch(self) -> DoubleChamberPatch:
        return self.glued.patch

    @property
    def map(self) -> EmbeddedMap:
        return self.glued.map

    @property
    def one_point(self) -> int:
        return self.glued.vertex('A', self.patch.v1)

    @property
    def two_points(self) -> Tuple[int, int]:
        return self.glued.vertex('A', self.patch.v2), self.glued.vertex('B', self.patch.v2)

    @property
    def zero_points(self) -> Tuple[int, int]:
        """``A``'s left copy of v0 and its right copy."""
        return self.glued.vertex('A', self.patch.v0_left), self.glued.vertex('A', self.patch.v0_right)


def op_diamond(o: LopspOperation, p: Optional[CutPath] = None) -> OpDiamond:
    return OpDiamond(glue_patches(double_chamber_patch(o, p), TWO_SIDE))
