"""
The lopsp-operation type, its validity checker and cut-path search.
"""
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from components.errors import (
    InternalInvariantViolation,
    InvalidCutPath,
    InvalidLopspOperation,
    LopspClauseViolation,
    NonTriangularFace,
    NotPlane,
    NotTwoConnected,
    SameTypeAdjacency,
    SpecialVertexDegree,
    SpecialVertexType,
    SpecialVerticesNotDistinct,
    TypeOneDegree,
)
from components.maps.barycentric import TypedMap
from components.maps.map_core import EmbeddedMap, canonical_form, genus, is_k_connected
from config.settings import CUT_PATH_SEARCH_LIMIT, DEFAULT_CUT_PATH

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LopspOperation:
    typed: TypedMap
    v0: int
    v1: int
    v2: int
    name: Optional[str] = None

    @property
    def base(self) -> EmbeddedMap:
        return self.typed.base

    def t(self, v: int) -> int:
        return self.typed.vtype[v]

    @property
    def specials(self) -> Tuple[int, int, int]:
        return self.v0, self.v1, self.v2

    def labels(self) -> List[int]:
        """Vertex labels combining type and special role, for canonical forms."""
        role = {self.v0: 1, self.v1: 2, self.v2: 3}
        return [4 * t + role.get(v, 0) for v, t in enumerate(self.typed.vtype)]

    def canonical_form(self) -> bytes:
        return canonical_form(self.base, self.labels())

    def __repr__(self) -> str:
        return (f"LopspOperation('{self.name}', V={self.base.vertex_count}, "
                f"E={self.base.edge_count}, F={self.base.face_count})")


def lopsp_violations(candidate: TypedMap, v0: int, v1: int, v2: int) -> List[LopspClauseViolation]:
    """Every clause of the lopsp definition that ``candidate`` breaks."""
    m = candidate.base
    t = candidate.vtype
    issues: List[LopspClauseViolation] = []

    specials = (v0, v1, v2)
    if len(set(specials)) != 3 or any(not 0 <= v < m.vertex_count for v in specials):
        issues.append(SpecialVerticesNotDistinct(f"v0, v1, v2 = {specials}"))
        return issues

    g = genus(m)
    if g != 0:
        issues.append(NotPlane(f"genus is {g}"))
    if not is_k_connected(m, 2):
        issues.append(NotTwoConnected("the operation has a cut vertex or fewer than three vertices"))
    bad_faces = [f.index for f in m.faces() if len(f) != 3]
    if bad_faces:
        issues.append(NonTriangularFace(f"faces {bad_faces} are not triangles"))
    same = candidate.same_type_edges()
    if same:
        issues.append(SameTypeAdjacency(f"edges {same} join vertices of equal type"))
    if t[v0] == 1 or t[v2] == 1:
        issues.append(SpecialVertexType(f"t(v0) = {t[v0]}, t(v2) = {t[v2]}"))
    if t[v1] == 1 and m.degree(v1) != 2:
        issues.append(SpecialVertexDegree(f"v1 has type 1 and degree {m.degree(v1)}"))
    wrong = [v for v in range(m.vertex_count)
             if t[v] == 1 and v != v1 and m.degree(v) != 4]
    if wrong:
        issues.append(TypeOneDegree(f"type-1 vertices {wrong} do not have degree 4"))
    return issues


def validate_lopsp(candidate: TypedMap, v0: int, v1: int, v2: int,
                   name: Optional[str] = None) -> LopspOperation:
    """
    Check the lopsp definition clause by clause.

    Raises:
        InvalidLopspOperation: carrying every violated clause
    """
    issues = lopsp_violations(candidate, v0, v1, v2)
    if issues:
        logger.debug(f"Rejected operation {name}: {[i.clause for i in issues]}")
        raise InvalidLopspOperation(issues)
    return LopspOperation(candidate, v0, v1, v2, name or candidate.name)


def inflation_factor(o: LopspOperation) -> Fraction:
    """Edges of O(G) per edge of G."""
    return Fraction(o.base.face_count, 2)


@dataclass(frozen=True)
class CutPath:
    """A simple path v1 ... v0 ... v2; ``darts[i]`` runs from ``vertices[i]`` to ``vertices[i + 1]``."""
    vertices: Tuple[int, ...]
    darts: Tuple[int, ...]
    v0_index: int

    @property
    def length(self) -> int:
        return len(self.darts)

    def p01(self) -> Tuple[int, ...]:
        """P(v0, v1) from v0 to v1."""
        return tuple(reversed(self.vertices[:self.v0_index + 1]))

    def p02(self) -> Tuple[int, ...]:
        """P(v0, v2) from v0 to v2."""
        return self.vertices[self.v0_index:]

    def sort_key(self):
        return (len(self.darts), self.darts)


def check_cut_path(o: LopspOperation, p: CutPath) -> None:
    m = o.base
    if len(p.vertices) != len(p.darts) + 1 or len(set(p.vertices)) != len(p.vertices):
        raise InvalidCutPath("a cut-path must be a simple path")
    if p.vertices[0] != o.v1 or p.vertices[-1] != o.v2 or p.vertices[p.v0_index] != o.v0:
        raise InvalidCutPath("a cut-path runs from v1 through v0 to v2")
    for i, d in enumerate(p.darts):
        if m.dart_owner[d] != p.vertices[i] or m.head(d) != p.vertices[i + 1]:
            raise InvalidCutPath(f"dart {d} does not join path vertices {i} and {i + 1}")


def _combine(p1: Sequence[int], p2: Sequence[int], m: EmbeddedMap) -> CutPath:
    """Build a cut-path from dart paths v0->v1 and v0->v2."""
    darts = [d ^ 1 for d in reversed(p1)] + list(p2)
    vertices = [m.dart_owner[darts[0]]] + [m.head(d) for d in darts]
    return CutPath(tuple(vertices), tuple(darts), len(p1))


def _simple_dart_paths(m: EmbeddedMap, source: int, target: int, blocked: set,
                       max_length: int, budget: List[int]) -> Iterator[List[int]]:
    stack = [(source, [], {source})]
    while stack:
        v, path, used = stack.pop()
        budget[0] -= 1
        if budget[0] < 0:
            raise InternalInvariantViolation("cut-path search exceeded its step limit")
        if v == target:
            yield path
            continue
        if len(path) >= max_length:
            continue
        for d in reversed(m.rotation(v)):
            w = m.head(d)
            if w in used or w in blocked:
                continue
            stack.append((w, path + [d], used | {w}))


def enumerate_cut_paths(o: LopspOperation, max_length: int,
                        step_limit: int = CUT_PATH_SEARCH_LIMIT) -> List[CutPath]:
    """All cut-paths with at most ``max_length`` edges."""
    m = o.base
    budget = [step_limit]
    found = []
    for p1 in _simple_dart_paths(m, o.v0, o.v1, {o.v2}, max_length - 1, budget):
        on_p1 = {m.head(d) for d in p1}
        for p2 in _simple_dart_paths(m, o.v0, o.v2, on_p1, max_length - len(p1), budget):
            found.append(_combine(p1, p2, m))
    found.sort(key=CutPath.sort_key)
    return found


def _bfs_dart_path(m: EmbeddedMap, source: int, target: int, blocked: set) -> Optional[List[int]]:
    parent = {source: None}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        if v == target:
            path = []
            while parent[v] is not None:
                d = parent[v]
                path.append(d)
                v = m.dart_owner[d]
            return list(reversed(path))
        for d in sorted(m.rotation(v)):
            w = m.head(d)
            if w not in parent and w not in blocked:
                parent[w] = d
                queue.append(w)
    return None


def _first_cut_path(o: LopspOperation) -> Optional[CutPath]:
    m = o.base
    p1 = _bfs_dart_path(m, o.v0, o.v1, {o.v2})
    if p1 is None:
        return None
    p2 = _bfs_dart_path(m, o.v0, o.v2, {m.head(d) for d in p1})
    if p2 is None:
        return None
    return _combine(p1, p2, m)


def minimal_cut_paths(o: LopspOperation) -> List[CutPath]:
    """Every cut-path of minimum length, in tie-break order."""
    first = _first_cut_path(o)
    bound = first.length if first else o.base.vertex_count - 1
    paths = enumerate_cut_paths(o, bound)
    if not paths:
        raise InternalInvariantViolation(f"operation {o.name} has no cut-path")
    shortest = paths[0].length
    return [p for p in paths if p.length == shortest]


def find_cut_path(o: LopspOperation, strategy: str = DEFAULT_CUT_PATH) -> CutPath:
    """
    Find a cut-path.

    Args:
        o: A valid operation
        strategy: ``minimal`` for a shortest path with the smallest dart
            sequence, ``first`` for two breadth-first searches from v0

    Raises:
        InternalInvariantViolation: no cut-path exists, so ``o`` is not valid
    """
    if strategy == 'first':
        path = _first_cut_path(o)
        if path is not None:
            return path
        logger.warning(f"Breadth-first cut-path search failed for {o.name}; searching exhaustively")
        return minimal_cut_paths(o)[0]
    if strategy != 'minimal':
        raise ValueError(f"unknown cut-path strategy '{strategy}'")
    return minimal_cut_paths(o)[0]
