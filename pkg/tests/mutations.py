"""Single-clause breakages of catalog operations."""
from typing import Callable, Dict, List, Optional, Tuple

from components.maps.barycentric import EDGE, TypedMap
from components.maps.map_core import EmbeddedMap, delete_edges
from components.operations.lopsp_model import LopspOperation, find_cut_path

Specials = Tuple[int, int, int]
Mutant = Tuple[TypedMap, Specials]


def _retyped(o: LopspOperation, changes: Dict[int, int]) -> TypedMap:
    vtype = list(o.typed.vtype)
    for v, t in changes.items():
        vtype[v] = t
    return TypedMap(o.base, tuple(vtype))


def _insert_after(sigma: List[int], at: int, new: int) -> None:
    sigma[new] = sigma[at]
    sigma[at] = new


def _grown(m: EmbeddedMap, extra: int) -> Tuple[List[int], List[int]]:
    return list(m.sigma) + [0] * extra, list(m.dart_owner) + [0] * extra


def _with_handle(o: LopspOperation) -> Mutant:
    """An edge between corners of two different faces, which raises the genus."""
    m = o.base
    a = 0
    face_a = m.face_of(a ^ 1)
    b = next(d for d in m.darts() if m.face_of(d ^ 1) != face_a)
    sigma, owner = _grown(m, 2)
    x, y = m.dart_count, m.dart_count + 1
    _insert_after(sigma, a, x)
    _insert_after(sigma, b, y)
    owner[x], owner[y] = m.dart_owner[a], m.dart_owner[b]
    return TypedMap(EmbeddedMap(sigma, owner, m.vertex_count), o.typed.vtype), o.specials


def _with_pendant(o: LopspOperation) -> Mutant:
    m = o.base
    u = m.dart_owner[0]
    sigma, owner = _grown(m, 2)
    x, y = m.dart_count, m.dart_count + 1
    _insert_after(sigma, 0, x)
    sigma[y] = y
    owner[x], owner[y] = u, m.vertex_count
    vtype = o.typed.vtype + ((o.t(u) + 1) % 3,)
    return TypedMap(EmbeddedMap(sigma, owner, m.vertex_count + 1), vtype), o.specials


def _without_an_edge(o: LopspOperation) -> Mutant:
    m = o.base
    e = next(e for e in range(m.edge_count) if m.face_of(2 * e) != m.face_of(2 * e + 1))
    smaller, _ = delete_edges(m, [e])
    return TypedMap(smaller, o.typed.vtype), o.specials


def _same_type_edge(o: LopspOperation) -> Mutant:
    u, w = o.base.edge_ends(0)
    return _retyped(o, {w: o.t(u)}), o.specials


def _type1_v0(o: LopspOperation) -> Mutant:
    return _retyped(o, {o.v0: EDGE}), o.specials


def _wrong_v1_degree(o: LopspOperation) -> Optional[Mutant]:
    m = o.base
    candidates = [x for x in range(m.vertex_count) if x not in (o.v0, o.v2) and m.degree(x) != 2]
    if not candidates:
        return None
    typed = [x for x in candidates if o.t(x) == EDGE]
    x = (typed or candidates)[0]
    return _retyped(o, {x: EDGE}), (o.v0, x, o.v2)


def _wrong_type1_degree(o: LopspOperation) -> Optional[Mutant]:
    m = o.base
    x = next((x for x in range(m.vertex_count) if x != o.v1 and m.degree(x) != 4), None)
    if x is None:
        return None
    return _retyped(o, {x: EDGE}), o.specials


MUTATIONS: Dict[str, Callable[[LopspOperation], Optional[Mutant]]] = {
    'distinct special vertices': lambda o: (o.typed, (o.v0, o.v0, o.v2)),
    'genus': _with_handle,
    '2-connectivity': _with_pendant,
    'triangle faces': _without_an_edge,
    'type adjacency': _same_type_edge,
    'special vertex type': _type1_v0,
    'v1 degree': _wrong_v1_degree,
    'type-1 degree': _wrong_type1_degree,
}


def clause_mutation(o: LopspOperation, clause: str) -> Optional[Mutant]:
    """A typed map and specials breaking ``clause``, or None when ``o`` has no room for it."""
    return MUTATIONS[clause](o)


def with_parallel_edge(o: LopspOperation) -> LopspOperation:
    """
    Double an edge off the cut-path and put a new vertex between the copies,
    so every face stays a triangle.
    """
    m = o.base
    on_path = {d >> 1 for d in find_cut_path(o).darts}
    e = next(e for e in range(m.edge_count) if e not in on_path and len(set(m.edge_ends(e))) == 2)
    a = 2 * e
    u, w = m.dart_owner[a], m.dart_owner[a ^ 1]
    before = next(d for d in m.rotation(w) if m.sigma[d] == a ^ 1)
    z = m.vertex_count
    sigma, owner = _grown(m, 6)
    x, y, p, q, r, s = range(m.dart_count, m.dart_count + 6)
    # u: a, p, x; w: y, r, a^1; z: q, s
    _insert_after(sigma, a, x)
    _insert_after(sigma, a, p)
    sigma[before] = y
    sigma[y] = r
    sigma[r] = a ^ 1
    sigma[q], sigma[s] = s, q
    for d, v in ((x, u), (y, w), (p, u), (q, z), (r, w), (s, z)):
        owner[d] = v
    vtype = o.typed.vtype + (3 - o.t(u) - o.t(w),)
    typed = TypedMap(EmbeddedMap(sigma, owner, z + 1), vtype)
    return LopspOperation(typed, o.v0, o.v1, o.v2, f"{o.name}+parallel")
