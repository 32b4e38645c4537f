"""
Classification of lopsp-operations: identity, Dual, edge-breaking of type 1
or 2, edge-preserving. Also the companion of an edge-breaking operation and
the edge-path search in the diamond.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from components.errors import DualHasNoCompanion, InternalInvariantViolation, NotEdgeBreaking
from components.maps.barycentric import EDGE, FACE, VERTEX, TypedMap, n0
from components.maps.map_core import assemble_map
from components.operations.lopsp_model import CutPath, LopspOperation, find_cut_path, validate_lopsp
from components.operations.patches import DoubleChamberPatch, OpDiamond, op_diamond

logger = logging.getLogger(__name__)


class OperationTag(str, Enum):
    IDENTITY = 'Identity'
    DUAL = 'Dual'
    EDGE_BREAKING_1 = 'EdgeBreakingType1'
    EDGE_BREAKING_2 = 'EdgeBreakingType2'
    EDGE_PRESERVING = 'EdgePreserving'


@dataclass(frozen=True)
class OperationClass:
    tag: OperationTag
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_edge_breaking(self) -> bool:
        """Dual counts as edge-breaking of type 1."""
        return self.tag in (OperationTag.DUAL, OperationTag.EDGE_BREAKING_1, OperationTag.EDGE_BREAKING_2)

    @property
    def edge_breaking_type(self) -> Optional[int]:
        if self.tag == OperationTag.EDGE_BREAKING_2:
            return 2
        if self.tag in (OperationTag.DUAL, OperationTag.EDGE_BREAKING_1):
            return 1
        return None

    @property
    def is_edge_preserving(self) -> bool:
        return not self.is_edge_breaking

    def describe(self) -> str:
        evidence = ' '.join(f"{k}={v}" for k, v in sorted(self.evidence.items())) or '-'
        return f"class={self.tag.value} evidence={evidence}"


def _edges_between(o: LopspOperation, u: int, w: int) -> List[int]:
    return sorted(d >> 1 for d in o.base.rotation(u) if o.base.head(d) == w)


def classify(o: LopspOperation) -> OperationClass:
    """
    Classify ``o``.

    A v0-v2 edge means identity or Dual, decided by the type of v0. Otherwise
    ``o`` is edge-breaking of type t(v1) when v1 and v2 are adjacent and v2
    has type 0, and edge-preserving in every other case.
    """
    v0v2 = _edges_between(o, o.v0, o.v2)
    if v0v2:
        tag = OperationTag.IDENTITY if o.t(o.v0) == VERTEX else OperationTag.DUAL
        return OperationClass(tag, {'v0v2_edge': v0v2[0]})
    v1v2 = _edges_between(o, o.v1, o.v2)
    if v1v2 and o.t(o.v2) == VERTEX:
        tag = OperationTag.EDGE_BREAKING_1 if o.t(o.v1) == EDGE else OperationTag.EDGE_BREAKING_2
        return OperationClass(tag, {'v1v2_edge': v1v2[0]})
    return OperationClass(OperationTag.EDGE_PRESERVING)


def _rebuild(o: LopspOperation, polygons, v1: int, name: str) -> LopspOperation:
    kept = sorted({vkey for poly in polygons for vkey, _ in poly if isinstance(vkey, int)})
    assembly = assemble_map(polygons, name=name, vertex_order=kept)
    index = assembly.vertex_index()
    vtype = []
    for key in assembly.vertex_keys:
        vtype.append(o.t(key) if isinstance(key, int) else EDGE)
    typed = TypedMap(assembly.map, tuple(vtype))
    return validate_lopsp(typed, index[o.v0], index[v1], index[o.v2], name)


def companion(o: LopspOperation, name: Optional[str] = None) -> LopspOperation:
    """
    The edge-breaking operation of the other type.

    Type 2 to type 1: the v1-v2 edge is doubled and a new degree-2 type-1
    vertex, the new v1, is put between the two copies. Type 1 to type 2 undoes
    this: v1 is removed and its two remaining edges merge into one, whose
    type-2 end becomes v1.

    Raises:
        NotEdgeBreaking: ``o`` is edge-preserving or the identity
        DualHasNoCompanion: ``o`` is Dual
    """
    cls = classify(o)
    if cls.tag == OperationTag.DUAL:
        raise DualHasNoCompanion(f"{o.name} is Dual")
    if not cls.is_edge_breaking:
        raise NotEdgeBreaking(f"{o.name} is {cls.tag.value}")
    m = o.base
    name = name or f"companion({o.name})"

    if cls.tag == OperationTag.EDGE_BREAKING_2:
        eps = cls.evidence['v1v2_edge']
        forward = 2 * eps if m.dart_owner[2 * eps] == o.v1 else 2 * eps + 1
        polygons = []
        for face in m.faces():
            poly = []
            for d in face.darts:
                if d >> 1 == eps:
                    poly.append((m.dart_owner[d], ('copy', d == forward)))
                else:
                    poly.append((m.dart_owner[d], ('edge', d >> 1)))
            polygons.append(poly)
        x = ('new', 'v1')
        # digon between the copies, split through x
        polygons.append([(o.v2, ('copy', True)), (o.v1, ('spoke', 1)), (x, ('spoke', 2))])
        polygons.append([(o.v1, ('copy', False)), (o.v2, ('spoke', 2)), (x, ('spoke', 1))])
        result = _rebuild(o, polygons, x, name)
    else:
        around = m.rotation(o.v1)
        others = [m.head(d) for d in around if m.head(d) != o.v2]
        if len(around) != 2 or len(others) != 1:
            raise InternalInvariantViolation(f"v1 of {o.name} is not a degree-2 vertex next to v2")
        y = others[0]
        if y == o.v0:
            raise DualHasNoCompanion(f"{o.name} has v1 between v0 and v2")
        v1_faces = {m.face_of(d) for d in around}
        # the edge opposite v1 in each of its two triangles
        opposite = []
        for f in sorted(v1_faces):
            darts = m.faces()[f].darts
            opposite += [d >> 1 for d in darts if o.v1 not in (m.dart_owner[d], m.head(d))]
        if len(opposite) != 2 or opposite[0] == opposite[1]:
            raise InternalInvariantViolation(f"v1 of {o.name} is not enclosed by two triangles")
        keep, merge = opposite
        polygons = []
        for face in m.faces():
            if face.index in v1_faces:
                continue
            polygons.append([(m.dart_owner[d], ('edge', keep if d >> 1 == merge else d >> 1))
                             for d in face.darts])
        result = _rebuild(o, polygons, y, name)
    logger.debug(f"Companion of {o.name}: {result}")
    return result


@dataclass(frozen=True)
class ShadowWalk:
    """
    A walk of type-2 edges in a patch; ``darts[i]`` joins ``vertices[i]`` and
    ``vertices[i + 1]``.

    The end flags tell whether each end reaches the 0-neighbourhood of its copy
    of v0, either directly or, from a 1-point end, through the next vertex.
    """
    vertices: Tuple[int, ...]
    darts: Tuple[int, ...]
    starts_in_left_shadow: bool
    ends_in_right_shadow: bool

    @property
    def reaches_both_shadows(self) -> bool:
        return self.starts_in_left_shadow and self.ends_in_right_shadow


def _ring(patch: DoubleChamberPatch, i: int) -> List[int]:
    """Patch darts at boundary vertex ``i`` from the one toward ``i - 1`` to the one toward ``i + 1``."""
    pm = patch.map
    size = patch.boundary_size
    d = 2 * ((i - 1) % size) + 1
    last = 2 * (i % size)
    ring = [d]
    while d != last:
        d = pm.sigma[d]
        ring.append(d)
    return ring


def _link(pm, da: int, db: int) -> int:
    """Dart from the head of ``da`` to the head of ``db``, closing their triangle."""
    if pm.sigma[da] == db:
        return pm.phi(db) ^ 1
    if pm.sigma[db] == da:
        return pm.phi(da)
    raise InternalInvariantViolation(f"darts {da} and {db} are not consecutive")


def _reaches(typed: TypedMap, ends: Sequence[int], point: int) -> bool:
    shadow = n0(typed, point)
    head = ends[:2] if typed.vtype[ends[0]] == EDGE else ends[:1]
    return any(v in shadow for v in head)


def shadow_connecting_walk(patch: DoubleChamberPatch, side: str = 'left') -> ShadowWalk:
    """
    The walk from the left copy of v0 through v1 to the right copy, along both
    copies of P(v0, v1).

    The two copies of v0 are dropped when they have type 2. Every other type-2
    vertex of the path is replaced by the walk along its neighbours inside the
    patch, in rotation order.
    """
    size, j = patch.boundary_size, patch.j
    positions = [(size - j + k) % size for k in range(2 * j + 1)]
    if side == 'right':
        positions = list(reversed(positions))
    elif side != 'left':
        raise ValueError(f"unknown side '{side}'")
    if patch.vtype[positions[0]] == FACE:
        positions = positions[1:-1]
    pm = patch.map

    vertices: List[int] = []
    darts: List[int] = []
    for c in positions:
        if patch.vtype[c] != FACE:
            if vertices and vertices[-1] == c:
                continue
            if vertices:
                prev = vertices[-1]
                link = [d for d in pm.rotation(prev) if pm.head(d) == c and (d >> 1) < size]
                darts.append(link[0])
            vertices.append(c)
            continue
        ring = _ring(patch, c)
        if side == 'right':
            ring.reverse()
        nbrs = [pm.head(d) for d in ring]
        if not vertices or vertices[-1] != nbrs[0]:
            raise InternalInvariantViolation("shadow walk lost contact with the boundary")
        for t in range(1, len(ring)):
            darts.append(_link(pm, ring[t - 1], ring[t]))
            vertices.append(nbrs[t])

    typed = patch.typed()
    left, right = patch.v0_left, patch.v0_right
    if side == 'right':
        left, right = right, left
    return ShadowWalk(tuple(vertices), tuple(darts),
                      _reaches(typed, vertices, left), _reaches(typed, vertices[::-1], right))


@dataclass(frozen=True)
class EdgePath:
    """A path of type-2 edges in the diamond between the shadows of its two 0-points."""
    diamond: OpDiamond
    vertices: Tuple[int, ...]
    avoids_two_points: bool

    def __len__(self) -> int:
        return len(self.vertices) - 1


def find_edge_path(o: LopspOperation, p: Optional[CutPath] = None,
                   avoid_2points: bool = True,
                   diamond: Optional[OpDiamond] = None) -> Optional[EdgePath]:
    """
    Search the P-diamond for an edge-path.

    Only vertices of the shadow-connecting walks of both patch copies are
    used. With ``avoid_2points`` the two 2-points of the diamond are excluded.

    Returns:
        The shortest such path, or None
    """
    if diamond is None:
        diamond = op_diamond(o, p)
    glued = diamond.glued
    walk = shadow_connecting_walk(diamond.patch)
    allowed = {glued.vertex(c, x) for c in 'AB' for x in walk.vertices}
    if avoid_2points:
        allowed -= set(diamond.two_points)

    typed = glued.typed()
    x, y = diamond.zero_points
    start = sorted(n0(typed, x) & allowed)
    target = n0(typed, y) & allowed
    dm = glued.map

    parent = {s: None for s in start}
    queue = deque(start)
    while queue:
        v = queue.popleft()
        if v in target:
            path = [v]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return EdgePath(diamond, tuple(reversed(path)), avoid_2points)
        for d in dm.rotation(v):
            w = dm.head(d)
            if w in allowed and w not in parent and typed.dart_type(d) == FACE:
                parent[w] = v
                queue.append(w)
    return None


def has_restricted_edge_path(o: LopspOperation, p: Optional[CutPath] = None) -> bool:
    return find_edge_path(o, p or find_cut_path(o), avoid_2points=True) is not None
