"""
Named maps used as hosts, fixtures and corpus seeds.
"""
import logging
from typing import Dict, Hashable, Optional, Sequence

import networkx as nx

from components.maps.map_core import EmbeddedMap, assemble_map, build_map, dual, from_faces, with_name

logger = logging.getLogger(__name__)


def pyramid(n: int) -> EmbeddedMap:
    """Pyramid over an n-gon: base vertices 0..n-1, apex n."""
    base = list(range(n - 1, -1, -1))
    sides = [[i, (i + 1) % n, n] for i in range(n)]
    return from_faces([base] + sides, name=f"pyramid{n}")


def prism(n: int) -> EmbeddedMap:
    """Prism over an n-gon: bottom 0..n-1, top n..2n-1."""
    bottom = list(range(n - 1, -1, -1))
    top = list(range(n, 2 * n))
    sides = [[i, (i + 1) % n, n + (i + 1) % n, n + i] for i in range(n)]
    return from_faces([bottom, top] + sides, name=f"prism{n}")


def bipyramid(n: int) -> EmbeddedMap:
    north, south = n, n + 1
    upper = [[i, (i + 1) % n, north] for i in range(n)]
    lower = [[(i + 1) % n, i, south] for i in range(n)]
    return from_faces(upper + lower, name=f"bipyramid{n}")


def tetrahedron() -> EmbeddedMap:
    return with_name(pyramid(3), "tetrahedron")


def cube() -> EmbeddedMap:
    return with_name(prism(4), "cube")


def octahedron() -> EmbeddedMap:
    return with_name(bipyramid(4), "octahedron")


def wheel(n: int) -> EmbeddedMap:
    return with_name(pyramid(n), f"wheel{n}")


def icosahedron() -> EmbeddedMap:
    # antiprism on a_i = i, b_i = 5 + i with caps north 10 and south 11
    a = [i for i in range(5)]
    b = [5 + i for i in range(5)]
    north, south = 10, 11
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append([a[i], a[j], b[i]])
        faces.append([b[i], a[j], b[j]])
        faces.append([a[j], a[i], south])
        faces.append([b[i], b[j], north])
    return from_faces(faces, name="icosahedron")


def dodecahedron() -> EmbeddedMap:
    return with_name(dual(icosahedron()), "dodecahedron")


def single_loop() -> EmbeddedMap:
    return build_map(1, [[0, 1]], name="loop")


def single_edge() -> EmbeddedMap:
    return build_map(2, [[0], [1]], name="edge")


def star(leaves: int) -> EmbeddedMap:
    """The tree K_{1,leaves}; the centre is vertex 0."""
    centre = [2 * i for i in range(leaves)]
    return build_map(leaves + 1, [centre] + [[2 * i + 1] for i in range(leaves)],
                     name=f"star{leaves}")


def torus_grid(n: int, doubled_edge: bool = False) -> EmbeddedMap:
    """
    The n x n quadrangulation of the torus; vertex (i, j) gets id n*i + j.

    With ``doubled_edge`` the edge from (0, 0) to (1, 0) is doubled and the two
    copies bound a digon face.
    """
    def h(i, j):
        return 'h', i % n, j % n

    def v(i, j):
        return 'v', i % n, j % n

    def at(i, j):
        return i % n, j % n

    squares = []
    for i in range(n):
        for j in range(n):
            bottom = ('h2',) if doubled_edge and (i, j) == (0, 0) else h(i, j)
            squares.append([(at(i, j), bottom), (at(i + 1, j), v(i + 1, j)),
                            (at(i + 1, j + 1), h(i, j + 1)), (at(i, j + 1), v(i, j))])
    if doubled_edge:
        squares.append([(at(0, 0), h(0, 0)), (at(1, 0), ('h2',))])
    order = [(i, j) for i in range(n) for j in range(n)]
    name = f"torus_grid{n}" + ("+digon" if doubled_edge else "")
    return assemble_map(squares, name=name, vertex_order=order).map


def from_neighbour_rotations(rotations: Dict[Hashable, Sequence[Hashable]],
                             name: Optional[str] = None) -> EmbeddedMap:
    """
    Build a map on a simple graph from cyclic neighbour orders.

    Args:
        rotations: For every vertex label, its neighbours in rotation order

    Returns:
        EmbeddedMap whose vertex ids follow the sorted labels; dart ``2e`` of
        edge ``e`` leaves the endpoint with the smaller id
    """
    labels = sorted(rotations)
    vid = {v: i for i, v in enumerate(labels)}
    pairs = sorted({(min(vid[u], vid[w]), max(vid[u], vid[w]))
                    for u, nbrs in rotations.items() for w in nbrs})
    edge_of = {pair: e for e, pair in enumerate(pairs)}

    def dart(u, w):
        a, b = vid[u], vid[w]
        e = edge_of[(min(a, b), max(a, b))]
        return 2 * e if a < b else 2 * e + 1

    cycles = [[dart(v, w) for w in rotations[v]] for v in labels]
    return build_map(len(labels), cycles, name=name)


def from_planar_graph(g: nx.Graph, name: Optional[str] = None) -> EmbeddedMap:
    """Plane map of a planar networkx graph, using its clockwise embedding."""
    planar, embedding = nx.check_planarity(g)
    if not planar:
        raise ValueError(f"graph {name or g} is not planar")
    rotations = {v: list(embedding.neighbors_cw_order(v)) for v in g.nodes}
    return from_neighbour_rotations(rotations, name=name)


def platonic_solids():
    return [tetrahedron(), cube(), octahedron(), dodecahedron(), icosahedron()]


NAMED_MAPS = {
    'tetrahedron': tetrahedron,
    'cube': cube,
    'octahedron': octahedron,
    'dodecahedron': dodecahedron,
    'icosahedron': icosahedron,
    'loop': single_loop,
    'edge': single_edge,
}
