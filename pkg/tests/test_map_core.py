import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from components.errors import DanglingDart, DisconnectedGraph, DuplicateDart, EmptyEdgeSet, RotationNotCyclic
from components.maps.map_core import (
    EmbeddedMap,
    SubgraphMask,
    build_map,
    canonical_form,
    delete_edges,
    dual,
    find_bridges,
    from_faces,
    genus,
    internal_component,
    is_isomorphic,
    is_k_connected,
    is_polyhedral,
    is_simple,
    mirror,
)
from components.maps.standard_maps import (
    bipyramid,
    cube,
    dodecahedron,
    icosahedron,
    octahedron,
    platonic_solids,
    prism,
    single_edge,
    single_loop,
    star,
    tetrahedron,
    torus_grid,
)
from tests.helpers import (
    check_euler,
    check_isomorphic,
    check_rotation_consistent,
    connected_graphs,
    map_of,
    node_connectivity,
)
from tests.strategies import relabelings, rotation_maps


class TestConstruction:
    @pytest.mark.parametrize("factory, counts", [
        (tetrahedron, (4, 6, 4)),
        (cube, (8, 12, 6)),
        (octahedron, (6, 12, 8)),
        (dodecahedron, (20, 30, 12)),
        (icosahedron, (12, 30, 20)),
    ])
    def test_platonic_counts(self, factory, counts):
        m = factory()
        assert m.counts() == counts
        check_euler(m, 0)
        check_rotation_consistent(m)

    def test_degrees_and_face_lengths(self):
        m = cube()
        assert all(m.degree(v) == 3 for v in range(8))
        assert m.face_vector() == (4,) * 6

    def test_small_maps(self):
        assert single_loop().counts() == (1, 1, 2)
        assert single_edge().counts() == (2, 1, 1)
        assert star(6).counts() == (7, 6, 1)
        assert genus(star(6)) == 0

    def test_torus_grid(self):
        check_euler(torus_grid(3), 1)
        doubled = torus_grid(3, doubled_edge=True)
        assert doubled.counts() == (9, 19, 10)
        assert 2 in doubled.face_vector()
        check_euler(doubled, 1)

    def test_duplicate_dart(self):
        with pytest.raises(DuplicateDart):
            build_map(2, [[0, 1], [1]])

    def test_dangling_dart(self):
        with pytest.raises(DanglingDart):
            build_map(2, [[0], [2]])

    def test_empty_edge_set(self):
        with pytest.raises(EmptyEdgeSet):
            build_map(1, [[]])

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            build_map(4, [[0], [1], [2], [3]])
        with pytest.raises(DisconnectedGraph):
            build_map(3, [[0], [1], []])

    def test_sigma_must_stay_at_its_vertex(self):
        with pytest.raises(RotationNotCyclic):
            EmbeddedMap([1, 0], [0, 1])

    def test_equality_ignores_name(self):
        a = build_map(2, [[0], [1]], name="a")
        b = build_map(2, [[0], [1]], name="b")
        assert a == b
        assert hash(a) == hash(b)


class TestDerivedMaps:
    def test_dual_of_cube_is_octahedron(self):
        check_isomorphic(dual(cube()), octahedron())

    @pytest.mark.parametrize("m", platonic_solids() + [torus_grid(3), prism(5)], ids=lambda m: m.name)
    def test_dual_is_an_involution(self, m):
        check_isomorphic(dual(dual(m)), m)

    def test_dual_swaps_counts(self):
        v, e, f = icosahedron().counts()
        assert dual(icosahedron()).counts() == (f, e, v)

    def test_mirror_twice(self):
        m = bipyramid(5)
        assert mirror(mirror(m)) == m
        assert genus(mirror(m)) == 0

    def test_delete_edge_merges_faces(self):
        m, table = delete_edges(tetrahedron(), [0])
        assert m.counts() == (4, 5, 3)
        assert 0 not in table
        check_euler(m, 0)

    def test_from_faces_orders_vertices_by_label(self):
        m = from_faces([[3, 1, 2], [1, 3, 2]])
        assert m.counts() == (3, 3, 2)
        assert m.vertex_count == 3


class TestGraphProperties:
    def test_simplicity(self):
        assert is_simple(cube())
        assert not is_simple(single_loop())
        assert not is_simple(torus_grid(3, doubled_edge=True))

    @pytest.mark.parametrize("m, k", [
        (tetrahedron(), 3), (cube(), 3), (octahedron(), 4), (icosahedron(), 5), (dodecahedron(), 3),
    ], ids=lambda x: getattr(x, 'name', str(x)))
    def test_connectivity_of_solids(self, m, k):
        assert is_k_connected(m, k)
        assert not is_k_connected(m, k + 1)

    def test_small_graphs_are_not_highly_connected(self):
        assert not is_k_connected(tetrahedron(), 4)
        assert is_k_connected(single_edge(), 1)
        assert not is_k_connected(star(3), 2)

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            is_k_connected(cube(), 0)

    def test_polyhedrality(self):
        assert all(is_polyhedral(m) for m in platonic_solids())
        assert not is_polyhedral(single_loop())
        assert not is_polyhedral(torus_grid(3, doubled_edge=True))

    @settings(max_examples=60, deadline=None)
    @given(rotation_maps(), st.integers(1, 4))
    def test_connectivity_matches_networkx(self, m, k):
        expected = m.vertex_count >= k + 1 and node_connectivity(m) >= k
        assert is_k_connected(m, k) == expected

    @pytest.mark.slow
    def test_connectivity_matches_menger_on_every_graph_up_to_8_vertices(self):
        count = 0
        for g in connected_graphs(8):
            m = map_of(g)
            kappa = nx.node_connectivity(g)
            assert is_k_connected(m, kappa), sorted(g.edges)
            assert not is_k_connected(m, kappa + 1), sorted(g.edges)
            count += 1
        assert count == 12112

    @settings(max_examples=60, deadline=None)
    @given(rotation_maps())
    def test_euler_characteristic_is_even(self, m):
        check_rotation_consistent(m)
        assert genus(m) >= 0
        assert genus(dual(m)) == genus(m)


class TestBridges:
    def test_face_of_cube_has_one_bridge(self):
        m = cube()
        face = m.faces()[0]
        s = SubgraphMask.from_darts(m, face.darts)
        bridges = find_bridges(m, s)
        assert len(bridges) == 1
        (b,) = bridges
        assert b.kind == 'component'
        assert len(b.interior_vertices) == 4
        assert len(b.edges) == 8

    def test_apex_is_a_single_bridge(self):
        m = tetrahedron()
        # the apex and its three spokes form one bridge of a triangle
        face = m.faces()[0]
        s = SubgraphMask.from_darts(m, face.darts)
        bridges = find_bridges(m, s)
        assert len(bridges) == 1
        assert bridges[0].interior_vertices and len(bridges[0].edges) == 3

    def test_poles_are_separate_bridges(self):
        m = octahedron()
        s = SubgraphMask.from_edges(m, [e for e in range(m.edge_count)
                                        if 5 not in m.edge_ends(e) and 4 not in m.edge_ends(e)])
        kinds = sorted(b.kind for b in find_bridges(m, s))
        assert kinds.count('component') == 2

    def test_internal_component_of_a_face(self):
        m = cube()
        face = m.faces()[0]
        ic = internal_component(m, SubgraphMask.from_darts(m, face.darts), face.darts)
        assert ic.map.counts() == (4, 4, 2)
        assert ic.boundary_length == 4
        assert len(ic.inner_faces()) == 1


class TestIsomorphism:
    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_relabeling_keeps_canonical_form(self, data):
        m = data.draw(rotation_maps())
        other = data.draw(relabelings(m))
        assert canonical_form(other) == canonical_form(m)
        assert is_isomorphic(other, m)

    def test_distinct_maps(self):
        assert not is_isomorphic(cube(), octahedron())
        assert not is_isomorphic(prism(5), bipyramid(5))
