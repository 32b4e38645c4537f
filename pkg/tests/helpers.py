import itertools
from collections import defaultdict
from typing import Dict, Iterator, List

import networkx as nx

from components.maps.map_core import EmbeddedMap, genus, is_isomorphic, to_networkx
from components.maps.standard_maps import from_neighbour_rotations


def node_connectivity(m: EmbeddedMap) -> int:
    return nx.node_connectivity(to_networkx(m))


def check_isomorphic(a: EmbeddedMap, b: EmbeddedMap) -> None:
    assert a.counts() == b.counts()
    assert is_isomorphic(a, b)


def check_euler(m: EmbeddedMap, expected_genus: int) -> None:
    v, e, f = m.counts()
    assert v - e + f == 2 - 2 * expected_genus
    assert genus(m) == expected_genus


def check_rotation_consistent(m: EmbeddedMap) -> None:
    """Every dart sits in exactly one rotation and one face walk."""
    rotated = sorted(d for v in range(m.vertex_count) for d in m.rotation(v))
    walked = sorted(d for f in m.faces() for d in f.darts)
    assert rotated == list(m.darts())
    assert walked == list(m.darts())


def connected_graphs(max_nodes: int) -> Iterator[nx.Graph]:
    """
    Every connected simple graph with an edge and at most ``max_nodes``
    vertices, once per isomorphism class. The atlas stops at seven vertices;
    eight-vertex graphs are grown from it by adding a vertex.
    """
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_edges() and nx.is_connected(g)]
    yield from (g for g in atlas if g.number_of_nodes() <= max_nodes)
    if max_nodes < 8:
        return
    seen: Dict[str, List[nx.Graph]] = defaultdict(list)
    for g in atlas:
        if g.number_of_nodes() != 7:
            continue
        for r in range(1, 8):
            for nbrs in itertools.combinations(range(7), r):
                h = g.copy()
                h.add_edges_from((7, v) for v in nbrs)
                bucket = seen[nx.weisfeiler_lehman_graph_hash(h)]
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                yield h


def map_of(g: nx.Graph) -> EmbeddedMap:
    return from_neighbour_rotations({v: sorted(g.neighbors(v)) for v in g.nodes})
