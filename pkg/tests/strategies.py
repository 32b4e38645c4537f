from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite

import networkx as nx

from components.maps.map_core import EmbeddedMap, relabel
from components.maps.standard_maps import from_neighbour_rotations

SMALL_GRAPHS = {
    'k4': nx.complete_graph(4),
    'k5': nx.complete_graph(5),
    'k33': nx.complete_bipartite_graph(3, 3),
    'prism3': nx.circular_ladder_graph(3),
    'wheel5': nx.wheel_graph(5),
    'q3': nx.convert_node_labels_to_integers(nx.hypercube_graph(3), ordering='sorted'),
    'c5': nx.cycle_graph(5),
    'path4': nx.path_graph(4),
}


@composite
def graph_names(draw: DrawFn) -> str:
    return draw(st.sampled_from(sorted(SMALL_GRAPHS)))


@composite
def rotation_maps(draw: DrawFn) -> EmbeddedMap:
    """A random rotation system on one of the small graphs."""
    name = draw(graph_names())
    g = SMALL_GRAPHS[name]
    rotations = {v: draw(st.permutations(sorted(g.neighbors(v)))) for v in sorted(g.nodes)}
    return from_neighbour_rotations(rotations, name=name)


@composite
def relabelings(draw: DrawFn, m: EmbeddedMap) -> EmbeddedMap:
    edge_perm = draw(st.permutations(range(m.edge_count)))
    flips = draw(st.lists(st.integers(0, 1), min_size=m.edge_count, max_size=m.edge_count))
    vertex_perm = draw(st.permutations(range(m.vertex_count)))
    return relabel(m, edge_perm, flips, vertex_perm)
