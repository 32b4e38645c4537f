import pytest
from hypothesis import given, settings

from components.errors import NotBarycentric, WrongType
from components.maps.barycentric import (
    EDGE,
    FACE,
    VERTEX,
    TypedMap,
    barycentric_subdivision,
    chambers,
    diamond_around,
    double_chamber_graph,
    double_chambers,
    extract_primal,
    n0,
)
from components.maps.map_core import genus
from components.maps.standard_maps import cube, platonic_solids, single_loop, torus_grid
from components.verification.counterexamples import torus_q3
from tests.strategies import rotation_maps


@pytest.mark.parametrize("m", platonic_solids() + [torus_grid(3), torus_q3(), single_loop()],
                         ids=lambda m: m.name)
def test_subdivision_counts(m):
    v, e, f = m.counts()
    b = barycentric_subdivision(m)
    assert b.base.counts() == (v + e + f, 6 * e, 4 * e)
    assert genus(b.base) == genus(m)
    assert len(b.vertices_of_type(VERTEX)) == v
    assert len(b.vertices_of_type(EDGE)) == e
    assert len(b.vertices_of_type(FACE)) == f


@pytest.mark.parametrize("m", platonic_solids() + [torus_grid(3), torus_q3()], ids=lambda m: m.name)
def test_extract_primal_inverts_subdivision(m):
    assert extract_primal(barycentric_subdivision(m)) == m


@settings(max_examples=50, deadline=None)
@given(rotation_maps())
def test_extract_primal_inverts_subdivision_of_random_maps(m):
    b = barycentric_subdivision(m)
    assert extract_primal(b) == m
    assert genus(b.base) == genus(m)


def test_chambers_have_one_vertex_of_each_type():
    b = barycentric_subdivision(cube())
    cs = chambers(b)
    assert len(cs) == 48
    assert all(sorted(c.types) == [0, 1, 2] for c in cs)
    # the edge of type i is opposite the vertex of type i
    for c in cs:
        for i in range(3):
            ends = set(b.base.edge_ends(c.i_edge(i)))
            assert c.i_vertex(i) not in ends


def test_edges_have_the_missing_type():
    b = barycentric_subdivision(cube())
    assert not b.same_type_edges()
    for e in range(b.base.edge_count):
        u, w = b.base.edge_ends(e)
        assert {b.vtype[u], b.vtype[w], b.edge_type(e)} == {0, 1, 2}


def test_double_chamber_graph():
    m = cube()
    d = double_chamber_graph(barycentric_subdivision(m))
    assert d.base.edge_count == 4 * m.edge_count
    dcs = double_chambers(d)
    assert len(dcs) == 2 * m.edge_count
    for dc in dcs:
        assert len(dc.darts) == 4
        assert d.vtype[dc.one_point] == EDGE
        assert d.vtype[dc.two_point] == FACE


def test_diamond_around_an_edge_point():
    m = cube()
    d = double_chamber_graph(barycentric_subdivision(m))
    e = m.vertex_count
    diamond = diamond_around(d, e)
    assert diamond.one_point == e
    assert set(diamond.two_points) == {m.vertex_count + m.edge_count + m.face_of(0),
                                       m.vertex_count + m.edge_count + m.face_of(1)}
    with pytest.raises(WrongType):
        diamond_around(d, 0)


def test_zero_neighbourhoods():
    m = cube()
    b = barycentric_subdivision(m)
    assert n0(b, 3) == frozenset((3,))
    assert n0(b, m.vertex_count) == frozenset(m.edge_ends(0))
    face_point = m.vertex_count + m.edge_count
    assert n0(b, face_point) == frozenset(m.face_vertices(0))


def test_typed_map_rejects_bad_types():
    m = cube()
    with pytest.raises(WrongType):
        TypedMap(m, (0,) * 7)
    with pytest.raises(WrongType):
        TypedMap(m, (3,) * 8)


def test_double_chambers_need_a_subdivision():
    with pytest.raises(NotBarycentric):
        double_chamber_graph(TypedMap(cube(), (0, 1) * 4))


def test_swapped_types():
    b = barycentric_subdivision(cube())
    s = b.swapped()
    assert s.vertices_of_type(VERTEX) == b.vertices_of_type(FACE)
