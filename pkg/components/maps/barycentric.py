"""
Barycentric subdivision, the double-chamber graph, chambers, diamonds and
0-neighbourhoods, plus the inverse step that reads a map back off a
chamber-structured typed map.

Vertex types: 0 for vertices, 1 for edges, 2 for faces of the host. An edge
of a typed map has the type missing from its endpoints.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from components.errors import NotBarycentric, NotChamberStructured, WrongType
from components.maps.map_core import EmbeddedMap, delete_edges

logger = logging.getLogger(__name__)

VERTEX, EDGE, FACE = 0, 1, 2
PROVENANCE_KINDS = ('vertex', 'edge', 'face')


@dataclass(frozen=True)
class TypedMap:
    """An EmbeddedMap whose vertices carry a type in {0, 1, 2}.

    ``provenance[x]`` is ``(kind, index)`` naming the host element a typed
    vertex stands for, or None where there is none.
    """
    base: EmbeddedMap
    vtype: Tuple[int, ...]
    provenance: Optional[Tuple[Optional[Tuple[str, int]], ...]] = None

    def __post_init__(self):
        if len(self.vtype) != self.base.vertex_count:
            raise WrongType(f"{len(self.vtype)} types for {self.base.vertex_count} vertices")
        for t in self.vtype:
            if t not in (0, 1, 2):
                raise WrongType(f"vertex type {t} is not 0, 1 or 2")

    @property
    def name(self) -> Optional[str]:
        return self.base.name

    def vertex_type(self, v: int) -> int:
        return self.vtype[v]

    def edge_type(self, e: int) -> int:
        u, v = self.base.edge_ends(e)
        return 3 - self.vtype[u] - self.vtype[v]

    def dart_type(self, d: int) -> int:
        return self.edge_type(d >> 1)

    def vertices_of_type(self, t: int) -> List[int]:
        return [v for v, tv in enumerate(self.vtype) if tv == t]

    def same_type_edges(self) -> List[int]:
        return [e for e in range(self.base.edge_count)
                if self.vtype[self.base.edge_ends(e)[0]] == self.vtype[self.base.edge_ends(e)[1]]]

    def swapped(self, a: int = 0, b: int = 2) -> 'TypedMap':
        """Exchange two vertex types."""
        swap = {a: b, b: a}
        return TypedMap(self.base, tuple(swap.get(t, t) for t in self.vtype), self.provenance)


@dataclass(frozen=True)
class Chamber:
    darts: Tuple[int, int, int]
    vertices: Tuple[int, int, int]
    types: Tuple[int, int, int]

    def i_vertex(self, i: int) -> int:
        return self.vertices[self.types.index(i)]

    def i_edge(self, i: int) -> int:
        """The edge of type ``i``, opposite the type-``i`` vertex."""
        pos = self.types.index(i)
        return self.darts[(pos + 1) % 3] >> 1


@dataclass(frozen=True)
class DoubleChamber:
    """A face of the double-chamber graph: corners of types 0, 1, 0, 2."""
    face: int
    darts: Tuple[int, ...]
    zero_points: Tuple[int, int]
    one_point: int
    two_point: int
    one_sides: Tuple[int, int]
    two_side: Tuple[int, int]


@dataclass(frozen=True)
class Diamond:
    one_point: int
    chambers: Tuple[DoubleChamber, DoubleChamber]

    @property
    def two_points(self) -> Tuple[int, int]:
        return self.chambers[0].two_point, self.chambers[1].two_point

    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.chambers[0].zero_points + self.chambers[1].zero_points
                         + (self.one_point,) + self.two_points)


def barycentric_subdivision(m: EmbeddedMap) -> TypedMap:
    """
    Barycentric subdivision of ``m``.

    For every dart ``a`` of ``m`` three edges are created: ``H_a`` (id ``a``)
    from the vertex of ``a`` to its edge point, ``S_a`` (id ``2|E| + a``) from
    the edge point to the face point of ``a`` and ``A_a`` (id ``4|E| + a``) from
    the vertex of ``a`` to the face point. Chambers run vertex, edge point,
    face point in the host orientation.
    """
    n, ne = m.vertex_count, m.edge_count
    nd = 2 * ne

    def edge_point(a):
        return n + (a >> 1)

    def face_point(a):
        return n + ne + m.face_of(a)

    def h(a, at_edge=False):
        return 2 * a + (1 if at_edge else 0)

    def s(a, at_face=False):
        return 2 * (nd + a) + (1 if at_face else 0)

    def a_(a, at_face=False):
        return 2 * (2 * nd + a) + (1 if at_face else 0)

    size = 6 * nd
    sigma = [0] * size
    owner = [0] * size
    phi_inv = [0] * nd
    for a in range(nd):
        phi_inv[m.phi(a)] = a

    for a in range(nd):
        v = m.dart_owner[a]
        # around the host vertex
        owner[h(a)] = v
        owner[a_(a)] = v
        sigma[h(a)] = a_(m.sigma[a])
        sigma[a_(a)] = h(a)
        # around the edge point
        owner[h(a, True)] = edge_point(a)
        owner[s(a)] = edge_point(a)
        sigma[h(a, True)] = s(a)
        sigma[s(a)] = h(a ^ 1, True)
        # around the face point
        owner[s(a, True)] = face_point(a)
        owner[a_(a, True)] = face_point(a)
        sigma[a_(m.phi(a), True)] = s(a, True)
        sigma[s(a, True)] = a_(a, True)

    base = EmbeddedMap(sigma, owner, n + ne + m.face_count,
                       f"B({m.name})" if m.name else None)
    vtype = (VERTEX,) * n + (EDGE,) * ne + (FACE,) * m.face_count
    provenance = (tuple(('vertex', v) for v in range(n))
                  + tuple(('edge', e) for e in range(ne))
                  + tuple(('face', f) for f in range(m.face_count)))
    logger.debug(f"Barycentric subdivision of {m}: {base.vertex_count} vertices, {base.face_count} chambers")
    return TypedMap(base, vtype, provenance)


def chambers(b: TypedMap) -> List[Chamber]:
    out = []
    for face in b.base.faces():
        if len(face) != 3:
            raise NotChamberStructured(f"face {face.index} has length {len(face)}")
        verts = tuple(b.base.dart_owner[d] for d in face.darts)
        types = tuple(b.vtype[v] for v in verts)
        if sorted(types) != [0, 1, 2]:
            raise NotChamberStructured(f"face {face.index} has vertex types {types}")
        out.append(Chamber(tuple(face.darts), verts, types))
    return out


def _check_barycentric(b: TypedMap) -> None:
    try:
        chambers(b)
    except NotChamberStructured as e:
        raise NotBarycentric(str(e))
    for v in b.vertices_of_type(EDGE):
        if b.base.degree(v) != 4:
            raise NotBarycentric(f"edge point {v} has degree {b.base.degree(v)}")


def double_chamber_graph(b: TypedMap) -> TypedMap:
    """Remove the type-0 edges of a barycentric subdivision."""
    _check_barycentric(b)
    removed = [e for e in range(b.base.edge_count) if b.edge_type(e) == 0]
    base, _ = delete_edges(b.base, removed, f"D({b.name})" if b.name else None)
    return TypedMap(base, b.vtype, b.provenance)


def double_chambers(d: TypedMap) -> List[DoubleChamber]:
    out = []
    m = d.base
    for face in m.faces():
        darts = face.darts
        verts = [m.dart_owner[x] for x in darts]
        types = [d.vtype[v] for v in verts]
        if sorted(types) != [0, 0, 1, 2]:
            raise NotBarycentric(f"face {face.index} is not a double chamber (types {types})")
        one = verts[types.index(1)]
        two = verts[types.index(2)]
        zeros = tuple(v for v, t in zip(verts, types) if t == 0)
        one_sides = tuple(x >> 1 for x in darts if d.dart_type(x) == 1)
        two_side = tuple(x >> 1 for x in darts if d.dart_type(x) == 2)
        out.append(DoubleChamber(face.index, tuple(darts), zeros, one, two, one_sides, two_side))
    return out


def diamond_around(d: TypedMap, e: int) -> Diamond:
    """The two double chambers around the edge point ``e``."""
    if d.vtype[e] != EDGE:
        raise WrongType(f"vertex {e} has type {d.vtype[e]}, expected 1")
    by_face = {dc.face: dc for dc in double_chambers(d)}
    faces = [d.base.face_of(x) for x in d.base.rotation(e)]
    if len(faces) != 2:
        raise NotBarycentric(f"edge point {e} has degree {len(faces)} in the double-chamber graph")
    return Diamond(e, (by_face[faces[0]], by_face[faces[1]]))


def n0(t: TypedMap, v: int) -> FrozenSet[int]:
    """Type-0 vertices equal or adjacent to ``v``."""
    if t.vtype[v] == VERTEX:
        return frozenset((v,))
    return frozenset(w for w in t.base.neighbours(v) if t.vtype[w] == VERTEX)


@dataclass(frozen=True)
class PrimalTables:
    map: EmbeddedMap
    vertex_of: Dict[int, int]
    edge_of: Dict[int, int]
    dart_of: Dict[int, int]


def extract_primal_tables(b: TypedMap, name: Optional[str] = None) -> PrimalTables:
    """
    Read the map whose barycentric subdivision is ``b``.

    Returns:
        The primal map and the tables from typed vertices (type 0 and 1) and
        from B-darts leaving type-0 vertices toward edge points
    """
    m = b.base
    chambers(b)
    zero = b.vertices_of_type(VERTEX)
    ones = b.vertices_of_type(EDGE)
    vertex_of = {v: i for i, v in enumerate(zero)}
    edge_of = {x: i for i, x in enumerate(ones)}
    dart_of: Dict[int, int] = {}
    for x in ones:
        if m.degree(x) != 4:
            raise NotChamberStructured(f"type-1 vertex {x} has degree {m.degree(x)}")
        toward_zero = [d for d in m.rotation(x) if b.vtype[m.head(d)] == VERTEX]
        if len(toward_zero) != 2:
            raise NotChamberStructured(f"type-1 vertex {x} has {len(toward_zero)} type-0 neighbours")
        for side, d in enumerate(toward_zero):
            dart_of[d ^ 1] = 2 * edge_of[x] + side

    rotations = []
    for v in zero:
        rotations.append([dart_of[d] for d in m.rotation(v) if b.vtype[m.head(d)] == EDGE])
    size = 2 * len(ones)
    sigma = [0] * size
    owner = [0] * size
    for i, rot in enumerate(rotations):
        for j, d in enumerate(rot):
            sigma[d] = rot[(j + 1) % len(rot)]
            owner[d] = i
    primal = EmbeddedMap(sigma, owner, len(zero), name)
    return PrimalTables(primal, vertex_of, edge_of, dart_of)


def extract_primal(b: TypedMap, name: Optional[str] = None) -> EmbeddedMap:
    return extract_primal_tables(b, name).map


def typed_labels(t: TypedMap) -> Sequence[int]:
    """Vertex labels for canonical forms of typed maps."""
    return t.vtype
