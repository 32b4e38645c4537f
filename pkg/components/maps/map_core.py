"""
Combinatorial maps: darts, rotation systems, faces, genus, duality,
connectivity, polyhedrality, bridges, internal components and isomorphism.

Edge ``e`` owns the darts ``2e`` and ``2e + 1``; the reverse of dart ``d`` is
``d ^ 1``. ``sigma[d]`` is the next dart around the vertex ``d`` leaves, in the
drawing-clockwise sense, and the face successor of ``d`` is ``sigma[d ^ 1]``.
"""
import itertools
import logging
from array import array
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from components.errors import (
    DanglingDart,
    DisconnectedGraph,
    DuplicateDart,
    EmptyEdgeSet,
    FaceNotSimple,
    MapError,
    NonOrientableInconsistency,
    RotationNotCyclic,
    SubgraphNotConnected,
)

logger = logging.getLogger(__name__)


def inv(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True)
class FaceWalk:
    """A facial walk: the cyclic dart sequence of one face."""
    index: int
    darts: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def __iter__(self):
        return iter(self.darts)


class EmbeddedMap:
    """
    A connected multigraph together with a rotation system.

    Instances are immutable; faces are computed once at construction.
    """

    __slots__ = ('vertex_count', 'sigma', 'dart_owner', 'name',
                 '_face_of', '_faces', '_rotations')

    def __init__(self, sigma: Sequence[int], dart_owner: Sequence[int],
                 vertex_count: Optional[int] = None, name: Optional[str] = None):
        sigma = tuple(sigma)
        dart_owner = tuple(dart_owner)
        n = len(sigma)
        if n == 0:
            raise EmptyEdgeSet("a map needs at least one edge")
        if n % 2:
            raise DanglingDart(f"dart {n - 1} has no partner")
        if len(dart_owner) != n:
            raise DanglingDart(f"{len(dart_owner)} dart owners given for {n} darts")
        seen = [False] * n
        for d in sigma:
            if not 0 <= d < n:
                raise DanglingDart(f"dart {d} is outside 0..{n - 1}")
            if seen[d]:
                raise DuplicateDart(f"dart {d} appears twice in the rotation")
            seen[d] = True

        if vertex_count is None:
            vertex_count = max(dart_owner) + 1

        # Rotation cycles, one per vertex
        rotations: List[Optional[Tuple[int, ...]]] = [None] * vertex_count
        visited = [False] * n
        for start in range(n):
            if visited[start]:
                continue
            v = dart_owner[start]
            if not 0 <= v < vertex_count:
                raise DanglingDart(f"dart {start} belongs to unknown vertex {v}")
            if rotations[v] is not None:
                raise RotationNotCyclic(f"darts of vertex {v} form more than one cycle")
            cycle = []
            d = start
            while not visited[d]:
                if dart_owner[d] != v:
                    raise RotationNotCyclic(f"sigma moves dart {d} away from vertex {v}")
                visited[d] = True
                cycle.append(d)
                d = sigma[d]
            rotations[v] = tuple(cycle)
        for v, rot in enumerate(rotations):
            if rot is None:
                raise DisconnectedGraph(f"vertex {v} has no incident edge")

        self.vertex_count = vertex_count
        self.sigma = sigma
        self.dart_owner = dart_owner
        self.name = name
        self._rotations = tuple(rotations)

        if not self._is_connected():
            raise DisconnectedGraph("the underlying multigraph is not connected")

        # Face orbits, ordered by lowest dart
        face_of = [-1] * n
        face_list = []
        for start in range(n):
            if face_of[start] >= 0:
                continue
            walk = []
            d = start
            while face_of[d] < 0:
                face_of[d] = len(face_list)
                walk.append(d)
                d = sigma[d ^ 1]
            face_list.append(FaceWalk(len(face_list), tuple(walk)))
        self._face_of = tuple(face_of)
        self._faces = tuple(face_list)

    def _is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for d in self._rotations[v]:
                w = self.dart_owner[d ^ 1]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    # Basic accessors

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def edge_count(self) -> int:
        return len(self.sigma) // 2

    @property
    def face_count(self) -> int:
        return len(self._faces)

    def darts(self) -> range:
        return range(len(self.sigma))

    def head(self, d: int) -> int:
        return self.dart_owner[d ^ 1]

    def phi(self, d: int) -> int:
        """Face successor of ``d``."""
        return self.sigma[d ^ 1]

    def rotation(self, v: int) -> Tuple[int, ...]:
        return self._rotations[v]

    def degree(self, v: int) -> int:
        return len(self._rotations[v])

    def neighbours(self, v: int) -> List[int]:
        return [self.dart_owner[d ^ 1] for d in self._rotations[v]]

    def edge_ends(self, e: int) -> Tuple[int, int]:
        return self.dart_owner[2 * e], self.dart_owner[2 * e + 1]

    def face_of(self, d: int) -> int:
        return self._face_of[d]

    def faces(self) -> Tuple[FaceWalk, ...]:
        return self._faces

    def face_vertices(self, f: int) -> List[int]:
        return [self.dart_owner[d] for d in self._faces[f].darts]

    def face_vector(self) -> Tuple[int, ...]:
        return tuple(sorted(len(f) for f in self._faces))

    def counts(self) -> Tuple[int, int, int]:
        return self.vertex_count, self.edge_count, self.face_count

    def __repr__(self) -> str:
        label = f" '{self.name}'" if self.name else ""
        return (f"EmbeddedMap{label}(V={self.vertex_count}, E={self.edge_count}, "
                f"F={self.face_count})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, EmbeddedMap)
                and self.sigma == other.sigma
                and self.dart_owner == other.dart_owner)

    def __hash__(self) -> int:
        return hash((self.sigma, self.dart_owner))


def build_map(vertex_count: int, rotations: Sequence[Sequence[int]],
              name: Optional[str] = None) -> EmbeddedMap:
    """
    Build a map from per-vertex dart cycles.

    Args:
        vertex_count: Number of vertices
        rotations: ``rotations[v]`` lists the darts leaving ``v`` in rotation order

    Returns:
        The validated EmbeddedMap

    Raises:
        EmptyEdgeSet, DuplicateDart, DanglingDart, DisconnectedGraph
    """
    if len(rotations) != vertex_count:
        raise MapError(f"expected {vertex_count} rotation cycles, got {len(rotations)}")
    listed = [d for rot in rotations for d in rot]
    if not listed:
        raise EmptyEdgeSet("no darts listed")
    owner: Dict[int, int] = {}
    for v, rot in enumerate(rotations):
        if not rot:
            raise DisconnectedGraph(f"vertex {v} has no incident edge")
        for d in rot:
            if d < 0:
                raise DanglingDart(f"negative dart {d}")
            if d in owner:
                raise DuplicateDart(f"dart {d} listed under vertex {owner[d]} and vertex {v}")
            owner[d] = v
    n = len(owner)
    for d in owner:
        if d >= n or (d ^ 1) not in owner:
            raise DanglingDart(f"dart {d} has no partner dart {d ^ 1}")

    sigma = [0] * n
    for rot in rotations:
        for i, d in enumerate(rot):
            sigma[d] = rot[(i + 1) % len(rot)]
    return EmbeddedMap(sigma, [owner[d] for d in range(n)], vertex_count, name)


@dataclass(frozen=True)
class Assembly:
    """A map glued from polygons, with the keys each vertex and edge came from."""
    map: EmbeddedMap
    vertex_keys: Tuple[Hashable, ...]
    edge_keys: Tuple[Hashable, ...]
    polygon_darts: Tuple[Tuple[int, ...], ...]

    def vertex_index(self) -> Dict[Hashable, int]:
        return {key: i for i, key in enumerate(self.vertex_keys)}


def assemble_map(polygons: Iterable[Sequence[Tuple[Hashable, Hashable]]],
                 name: Optional[str] = None,
                 vertex_order: Optional[Sequence[Hashable]] = None) -> Assembly:
    """
    Glue oriented polygons into a map.

    Each polygon is a list of corners ``(vertex_key, edge_key)`` meaning "at this
    vertex, leave along this edge". Every edge key must be traversed exactly
    twice, in opposite directions. The first traversal becomes dart ``2e``.

    Args:
        polygons: Face boundaries, consistently oriented
        name: Optional map name
        vertex_order: Keys that should receive the first vertex ids, in order

    Returns:
        Assembly with the map and the key tables
    """
    vertex_index: Dict[Hashable, int] = {}
    vertex_keys: List[Hashable] = []
    for key in vertex_order or ():
        vertex_index[key] = len(vertex_keys)
        vertex_keys.append(key)

    def vid(key):
        if key not in vertex_index:
            vertex_index[key] = len(vertex_keys)
            vertex_keys.append(key)
        return vertex_index[key]

    edge_index: Dict[Hashable, int] = {}
    edge_keys: List[Hashable] = []
    tails: List[int] = []
    heads: List[int] = []
    uses: List[int] = []
    polygon_darts = []
    for poly in polygons:
        poly = list(poly)
        k = len(poly)
        darts = []
        for i, (vkey, ekey) in enumerate(poly):
            tail = vid(vkey)
            head = vid(poly[(i + 1) % k][0])
            if ekey not in edge_index:
                edge_index[ekey] = len(edge_keys)
                edge_keys.append(ekey)
                tails.append(tail)
                heads.append(head)
                uses.append(1)
                darts.append(2 * edge_index[ekey])
            else:
                e = edge_index[ekey]
                if uses[e] != 1:
                    raise DuplicateDart(f"edge {ekey!r} traversed more than twice")
                if tails[e] != head or heads[e] != tail:
                    raise DanglingDart(f"edge {ekey!r} traversed twice in the same direction "
                                       f"or between different vertices")
                uses[e] = 2
                darts.append(2 * e + 1)
        polygon_darts.append(tuple(darts))

    for e, count in enumerate(uses):
        if count != 2:
            raise DanglingDart(f"edge {edge_keys[e]!r} is traversed only once")

    n = 2 * len(edge_keys)
    phi = [0] * n
    for darts in polygon_darts:
        for i, d in enumerate(darts):
            phi[d] = darts[(i + 1) % len(darts)]
    sigma = [phi[d ^ 1] for d in range(n)]
    owner = [0] * n
    for e in range(len(edge_keys)):
        owner[2 * e] = tails[e]
        owner[2 * e + 1] = heads[e]
    m = EmbeddedMap(sigma, owner, len(vertex_keys), name)
    return Assembly(m, tuple(vertex_keys), tuple(edge_keys), tuple(polygon_darts))


def from_faces(faces: Iterable[Sequence[Hashable]], name: Optional[str] = None) -> EmbeddedMap:
    """Build a simple map from face boundaries given as vertex sequences.

    Vertex ids follow the sorted vertex labels.
    """
    faces = [list(f) for f in faces]
    labels = sorted({v for f in faces for v in f})
    polygons = [[(f[i], frozenset((f[i], f[(i + 1) % len(f)]))) for i in range(len(f))]
                for f in faces]
    return assemble_map(polygons, name, vertex_order=labels).map


# Derived maps

def faces(m: EmbeddedMap) -> List[FaceWalk]:
    return list(m.faces())


def genus(m: EmbeddedMap) -> int:
    euler = 2 - m.vertex_count + m.edge_count - m.face_count
    if euler < 0 or euler % 2:
        raise NonOrientableInconsistency(
            f"genus formula gives {euler}/2 for V={m.vertex_count}, E={m.edge_count}, F={m.face_count}")
    return euler // 2


def dual(m: EmbeddedMap) -> EmbeddedMap:
    """Dual map on the same darts: dart ``d`` sits at the face of ``d``.

    The dual rotation is the inverse face permutation, which matches the
    orientation produced by applying the Dual operation.
    """
    n = m.dart_count
    phi_inv = [0] * n
    for d in range(n):
        phi_inv[m.sigma[d ^ 1]] = d
    owner = [m.face_of(d) for d in range(n)]
    name = f"dual({m.name})" if m.name else None
    return EmbeddedMap(phi_inv, owner, m.face_count, name)


def with_name(m: EmbeddedMap, name: Optional[str]) -> EmbeddedMap:
    return EmbeddedMap(m.sigma, m.dart_owner, m.vertex_count, name)


def mirror(m: EmbeddedMap) -> EmbeddedMap:
    """The same graph with every rotation reversed."""
    sigma_inv = [0] * m.dart_count
    for d, s in enumerate(m.sigma):
        sigma_inv[s] = d
    return EmbeddedMap(sigma_inv, m.dart_owner, m.vertex_count, m.name)


def relabel(m: EmbeddedMap, edge_perm: Sequence[int], flips: Sequence[int],
            vertex_perm: Sequence[int]) -> EmbeddedMap:
    """Rename edges, swap the two darts of chosen edges and rename vertices."""
    def new(d):
        return 2 * edge_perm[d >> 1] + ((d & 1) ^ flips[d >> 1])

    n = m.dart_count
    sigma = [0] * n
    owner = [0] * n
    for d in range(n):
        sigma[new(d)] = new(m.sigma[d])
        owner[new(d)] = vertex_perm[m.dart_owner[d]]
    return EmbeddedMap(sigma, owner, m.vertex_count, m.name)


# Graph properties

def to_networkx(m: EmbeddedMap, multigraph: bool = False) -> Union[nx.Graph, nx.MultiGraph]:
    """Underlying graph; edge ids are kept as keys on the multigraph."""
    g = nx.MultiGraph() if multigraph else nx.Graph()
    g.add_nodes_from(range(m.vertex_count))
    for e in range(m.edge_count):
        u, v = m.edge_ends(e)
        if multigraph:
            g.add_edge(u, v, key=e)
        elif u != v:
            g.add_edge(u, v)
    return g


def is_simple(m: EmbeddedMap) -> bool:
    pairs = set()
    for e in range(m.edge_count):
        u, v = m.edge_ends(e)
        if u == v:
            return False
        key = (min(u, v), max(u, v))
        if key in pairs:
            return False
        pairs.add(key)
    return True


def is_k_connected(m: EmbeddedMap, k: int) -> bool:
    """
    True iff ``m`` has at least ``k + 1`` vertices and no vertex cut of size < k.

    Every vertex subset of size ``k - 2`` is removed and the rest is tested
    for articulation points, which covers all cuts smaller than ``k``.
    Cost is O(|V|^(k-1) * (|V| + |E|)).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if m.vertex_count < k + 1:
        return False
    g = to_networkx(m)
    if k == 1:
        return nx.is_connected(g)
    for removed in itertools.combinations(range(m.vertex_count), k - 2):
        h = g.subgraph(set(g.nodes) - set(removed))
        if not nx.is_connected(h):
            return False
        if next(nx.articulation_points(h), None) is not None:
            return False
    return True


def is_polyhedral(m: EmbeddedMap) -> bool:
    """Faces are simple cycles and any two meet in nothing, a vertex or an edge."""
    vertex_sets = []
    edge_sets = []
    for face in m.faces():
        verts = [m.dart_owner[d] for d in face.darts]
        if len(verts) < 3 or len(set(verts)) != len(verts):
            return False
        vertex_sets.append(frozenset(verts))
        edge_sets.append(frozenset(d >> 1 for d in face.darts))
    for i, j in itertools.combinations(range(len(vertex_sets)), 2):
        shared_vertices = vertex_sets[i] & vertex_sets[j]
        shared_edges = edge_sets[i] & edge_sets[j]
        if not shared_edges:
            if len(shared_vertices) > 1:
                return False
        elif len(shared_edges) == 1:
            (e,) = shared_edges
            if shared_vertices != frozenset(m.edge_ends(e)):
                return False
        else:
            return False
    return True


# Subgraphs and bridges

@dataclass(frozen=True)
class SubgraphMask:
    vertices: FrozenSet[int]
    edges: FrozenSet[int]
    induced: bool = False

    @classmethod
    def from_edges(cls, m: EmbeddedMap, edges: Iterable[int]) -> 'SubgraphMask':
        edges = frozenset(edges)
        vertices = frozenset(v for e in edges for v in m.edge_ends(e))
        return cls(vertices, edges)

    @classmethod
    def induced_by(cls, m: EmbeddedMap, vertices: Iterable[int]) -> 'SubgraphMask':
        vertices = frozenset(vertices)
        edges = frozenset(e for e in range(m.edge_count)
                          if all(v in vertices for v in m.edge_ends(e)))
        return cls(vertices, edges, True)

    @classmethod
    def from_darts(cls, m: EmbeddedMap, darts: Iterable[int]) -> 'SubgraphMask':
        return cls.from_edges(m, (d >> 1 for d in darts))

    def check(self, m: EmbeddedMap) -> None:
        for e in self.edges:
            if not set(m.edge_ends(e)) <= self.vertices:
                raise MapError(f"edge {e} has an endpoint outside the subgraph")

    def contains_dart(self, d: int) -> bool:
        return (d >> 1) in self.edges


@dataclass(frozen=True)
class Bridge:
    """A chord or a component of the complement, with its attachment angles.

    ``attachments`` holds ``(face of s, angle dart of s)`` per attaching dart.
    """
    kind: str
    vertices: FrozenSet[int]
    interior_vertices: FrozenSet[int]
    edges: FrozenSet[int]
    attachments: Tuple[Tuple[int, Optional[int]], ...]

    def faces(self) -> FrozenSet[int]:
        return frozenset(f for f, _ in self.attachments)


class _SubgraphView:
    """Rotation and faces of a subgraph induced on its own darts."""

    def __init__(self, m: EmbeddedMap, s: SubgraphMask):
        self.m = m
        self.s = s
        sdarts = [d for d in m.darts() if (d >> 1) in s.edges]
        self.sigma_s: Dict[int, int] = {}
        for d in sdarts:
            x = m.sigma[d]
            while (x >> 1) not in s.edges:
                x = m.sigma[x]
            self.sigma_s[d] = x
        self.sigma_s_inv = {b: a for a, b in self.sigma_s.items()}
        self.face_of: Dict[int, int] = {}
        self.walks: List[Tuple[int, ...]] = []
        for start in sdarts:
            if start in self.face_of:
                continue
            walk = []
            d = start
            while d not in self.face_of:
                self.face_of[d] = len(self.walks)
                walk.append(d)
                d = self.sigma_s[d ^ 1]
            self.walks.append(tuple(walk))
        if not self.walks:
            # a single vertex has one face and no angles
            self.walks.append(())

    def angle_of(self, d: int) -> Tuple[int, Optional[int]]:
        """Face and angle of ``s`` that the non-subgraph dart ``d`` lies in."""
        x = self.m.sigma[d]
        while (x >> 1) not in self.s.edges:
            if x == d:
                return 0, None
            x = self.m.sigma[x]
        return self.face_of[x], x


def _check_connected(m: EmbeddedMap, s: SubgraphMask) -> None:
    if not s.vertices:
        raise SubgraphNotConnected("empty subgraph")
    s.check(m)
    start = next(iter(s.vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for d in m.rotation(v):
            if (d >> 1) in s.edges:
                w = m.head(d)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    if seen != set(s.vertices):
        raise SubgraphNotConnected(f"subgraph splits into pieces; reached {len(seen)} of {len(s.vertices)} vertices")


def find_bridges(m: EmbeddedMap, s: SubgraphMask) -> List[Bridge]:
    """
    Bridges of the embedded subgraph ``s``.

    Returns:
        Chords and components, ordered by their smallest edge id
    """
    _check_connected(m, s)
    view = _SubgraphView(m, s)
    bridges = []

    for e in range(m.edge_count):
        if e in s.edges:
            continue
        u, v = m.edge_ends(e)
        if u in s.vertices and v in s.vertices:
            bridges.append(Bridge('chord', frozenset((u, v)), frozenset(), frozenset((e,)),
                                  (view.angle_of(2 * e), view.angle_of(2 * e + 1))))

    seen = set(s.vertices)
    for root in range(m.vertex_count):
        if root in seen:
            continue
        interior = {root}
        seen.add(root)
        queue = deque([root])
        edges = set()
        attachments = []
        while queue:
            v = queue.popleft()
            for d in m.rotation(v):
                edges.add(d >> 1)
                w = m.head(d)
                if w in s.vertices:
                    attachments.append(view.angle_of(d ^ 1))
                elif w not in seen:
                    seen.add(w)
                    interior.add(w)
                    queue.append(w)
        attached = {v for e in edges for v in m.edge_ends(e)}
        bridges.append(Bridge('component', frozenset(attached), frozenset(interior),
                              frozenset(edges), tuple(attachments)))

    bridges.sort(key=lambda b: min(b.edges))
    logger.debug(f"{len(bridges)} bridges for subgraph with {len(s.vertices)} vertices")
    return bridges


@dataclass(frozen=True)
class InternalComponent:
    """
    The map obtained by cutting along a facial walk of a subgraph.

    Boundary vertex ``i`` corresponds to the ``i``-th dart of ``walk``; boundary
    edge ``i`` owns darts ``2i`` (forward along the walk) and ``2i + 1``.
    Faces containing even boundary darts lie inside the component.
    """
    map: EmbeddedMap
    walk: Tuple[int, ...]
    vertex_origin: Tuple[int, ...]
    dart_origin: Tuple[int, ...]

    @property
    def boundary_length(self) -> int:
        return len(self.walk)

    def boundary_dart(self, i: int) -> int:
        return 2 * (i % len(self.walk))

    def inner_faces(self) -> List[FaceWalk]:
        outer = self.map.face_of(1)
        return [f for f in self.map.faces() if f.index != outer]


def internal_component(m: EmbeddedMap, s: SubgraphMask,
                       f: Union[int, FaceWalk, Sequence[int]]) -> InternalComponent:
    """
    Cut ``m`` along the face ``f`` of ``s`` and keep the side of that face.

    Args:
        m: Host map
        s: Connected embedded subgraph
        f: Face of ``s`` as an index into its faces, or as its dart walk

    Raises:
        FaceNotSimple: a bridge in ``f`` also attaches to another face of ``s``
    """
    _check_connected(m, s)
    view = _SubgraphView(m, s)
    if isinstance(f, int):
        walk = view.walks[f]
        face_index = f
    else:
        walk = tuple(f.darts if isinstance(f, FaceWalk) else f)
        face_index = view.face_of.get(walk[0]) if walk else None
    if not walk:
        raise MapError("cannot cut along an empty facial walk")

    bridges = [b for b in find_bridges(m, s) if face_index in b.faces()]
    for b in bridges:
        if len(b.faces()) > 1:
            raise FaceNotSimple(f"a {b.kind} bridge attaches to faces {sorted(b.faces())}")

    k = len(walk)
    owner_ic = {}
    interior = sorted(v for b in bridges for v in b.interior_vertices)
    new_vertex = {v: k + i for i, v in enumerate(interior)}
    bridge_edges = sorted(e for b in bridges for e in b.edges)
    new_edge = {e: k + j for j, e in enumerate(bridge_edges)}

    def ic_dart(md):
        return 2 * new_edge[md >> 1] + (md & 1)

    n = 2 * (k + len(bridge_edges))
    sigma = [-1] * n
    owner = [-1] * n
    origin = [-1] * n

    for i, w in enumerate(walk):
        origin[2 * i] = w
        origin[2 * i + 1] = w ^ 1
        incoming = 2 * ((i - 1) % k) + 1
        u = view.sigma_s_inv[w]
        between = []
        x = m.sigma[u]
        while x != w:
            between.append(x)
            x = m.sigma[x]
        cycle = [incoming] + [ic_dart(x) for x in between] + [2 * i]
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            sigma[a] = b
            owner[a] = i
        for x in between:
            owner_ic[x] = i

    for e in bridge_edges:
        for md in (2 * e, 2 * e + 1):
            d = ic_dart(md)
            origin[d] = md
            v = m.dart_owner[md]
            if v in new_vertex:
                owner[d] = new_vertex[v]
                sigma[d] = ic_dart(m.sigma[md])
            elif md not in owner_ic:
                raise FaceNotSimple(f"bridge dart {md} is not in an angle of the cut face")

    vertex_origin = [m.dart_owner[w] for w in walk] + interior
    ic = EmbeddedMap(sigma, owner, k + len(interior), f"IC({m.name})" if m.name else None)
    return InternalComponent(ic, tuple(walk), tuple(vertex_origin), tuple(origin))


# Isomorphism

def _code_from(m: EmbeddedMap, root: int, labels: Optional[Sequence[int]]) -> List[int]:
    n = m.dart_count
    lab = [-1] * n
    lab[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        for x in (m.sigma[d], d ^ 1):
            if lab[x] < 0:
                lab[x] = len(order)
                order.append(x)
        i += 1
    code = []
    for d in order:
        code.append(lab[m.sigma[d]])
        code.append(lab[d ^ 1])
        if labels is not None:
            code.append(labels[m.dart_owner[d]])
    return code


def canonical_form(m: EmbeddedMap, vertex_labels: Optional[Sequence[int]] = None) -> bytes:
    """
    Orientation-preserving canonical code.

    Darts are numbered by a breadth-first walk along sigma and the edge
    involution from a root dart; the lexicographically smallest code over all
    admissible roots wins. Optional integer vertex labels are part of the code.
    """
    def key(d):
        v = m.dart_owner[d]
        label = vertex_labels[v] if vertex_labels is not None else 0
        return (m.degree(v), len(m.faces()[m.face_of(d)]), label)

    best_key = min(key(d) for d in m.darts())
    best = None
    for d in m.darts():
        if key(d) != best_key:
            continue
        code = _code_from(m, d, vertex_labels)
        if best is None or code < best:
            best = code
    header = [m.vertex_count, m.edge_count, 1 if vertex_labels is not None else 0]
    return array('q', header + best).tobytes()


def is_isomorphic(a: EmbeddedMap, b: EmbeddedMap,
                  labels_a: Optional[Sequence[int]] = None,
                  labels_b: Optional[Sequence[int]] = None) -> bool:
    if a.counts() != b.counts() or a.face_vector() != b.face_vector():
        return False
    return canonical_form(a, labels_a) == canonical_form(b, labels_b)


def delete_edges(m: EmbeddedMap, removed: Iterable[int],
                 name: Optional[str] = None) -> Tuple[EmbeddedMap, Dict[int, int]]:
    """
    Remove edges, keeping vertex ids; remaining edges are renumbered in order.

    Returns:
        The smaller map and the old-edge to new-edge table
    """
    removed = set(removed)
    kept = [e for e in range(m.edge_count) if e not in removed]
    new_edge = {e: i for i, e in enumerate(kept)}

    def new(d):
        return 2 * new_edge[d >> 1] + (d & 1)

    sigma = [0] * (2 * len(kept))
    owner = [0] * (2 * len(kept))
    for e in kept:
        for d in (2 * e, 2 * e + 1):
            x = m.sigma[d]
            while (x >> 1) in removed:
                x = m.sigma[x]
            sigma[new(d)] = new(x)
            owner[new(d)] = m.dart_owner[d]
    return EmbeddedMap(sigma, owner, m.vertex_count, name), new_edge
