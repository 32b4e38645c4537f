from fractions import Fraction

import pytest

from components.errors import InvalidCutPath, InvalidLopspOperation, LopspClauseViolation
from components.maps.barycentric import TypedMap, barycentric_subdivision, double_chamber_graph
from components.maps.standard_maps import cube
from components.operations.catalog import CATALOG, get_operation
from components.operations.lopsp_model import (
    CutPath,
    check_cut_path,
    enumerate_cut_paths,
    find_cut_path,
    inflation_factor,
    lopsp_violations,
    minimal_cut_paths,
    validate_lopsp,
)
from tests.mutations import MUTATIONS, clause_mutation


class TestValidation:
    def test_catalog_operations_are_valid(self, catalog_op):
        assert not lopsp_violations(catalog_op.typed, *catalog_op.specials)

    def test_specials_must_be_distinct(self):
        o = get_operation('identity')
        with pytest.raises(InvalidLopspOperation) as info:
            validate_lopsp(o.typed, o.v0, o.v0, o.v2)
        assert info.value.clauses() == ['distinct special vertices']

    def test_swapped_specials(self):
        o = get_operation('identity')
        with pytest.raises(InvalidLopspOperation) as info:
            validate_lopsp(o.typed, o.v1, o.v0, o.v2)
        assert 'special vertex type' in info.value.clauses()
        assert 'type-1 degree' in info.value.clauses()

    def test_equal_types_are_rejected(self):
        o = get_operation('identity')
        with pytest.raises(InvalidLopspOperation) as info:
            validate_lopsp(TypedMap(o.base, (0, 0, 0)), *o.specials)
        assert 'type adjacency' in info.value.clauses()

    def test_faces_must_be_triangles(self):
        d = double_chamber_graph(barycentric_subdivision(cube()))
        with pytest.raises(InvalidLopspOperation) as info:
            validate_lopsp(d, 0, 8, 20)
        assert 'triangle faces' in info.value.clauses()

    def test_valid_operation_keeps_its_name(self):
        o = get_operation('kis')
        again = validate_lopsp(o.typed, *o.specials, name='kis again')
        assert again.name == 'kis again'
        assert again.canonical_form() == o.canonical_form()

    def test_every_clause_has_a_mutation(self):
        assert {cls.clause for cls in LopspClauseViolation.__subclasses__()} == set(MUTATIONS)

    @pytest.mark.parametrize("clause", sorted(MUTATIONS))
    def test_single_clause_mutation_is_rejected(self, catalog_op, clause):
        mutant = clause_mutation(catalog_op, clause)
        if mutant is None:
            pytest.skip(f"{catalog_op.name} has no vertex to break '{clause}' with")
        typed, specials = mutant
        with pytest.raises(InvalidLopspOperation) as info:
            validate_lopsp(typed, *specials)
        assert clause in info.value.clauses()


class TestCutPaths:
    def test_cut_path_runs_v1_v0_v2(self, catalog_op):
        p = find_cut_path(catalog_op)
        assert p.vertices[0] == catalog_op.v1
        assert p.vertices[p.v0_index] == catalog_op.v0
        assert p.vertices[-1] == catalog_op.v2
        check_cut_path(catalog_op, p)

    def test_first_strategy_gives_a_valid_path(self, catalog_op):
        check_cut_path(catalog_op, find_cut_path(catalog_op, 'first'))

    def test_minimal_paths_share_a_length(self, catalog_op):
        paths = minimal_cut_paths(catalog_op)
        assert len({p.length for p in paths}) == 1
        assert paths[0] == find_cut_path(catalog_op, 'minimal')
        assert paths == sorted(paths, key=CutPath.sort_key)

    def test_identity_path(self):
        o = get_operation('identity')
        p = find_cut_path(o)
        assert p.length == 2
        assert p.p01() == (o.v0, o.v1)
        assert p.p02() == (o.v0, o.v2)

    def test_enumeration_is_bounded(self):
        o = get_operation('chamfer')
        shortest = minimal_cut_paths(o)[0].length
        assert enumerate_cut_paths(o, shortest - 1) == []
        longer = enumerate_cut_paths(o, shortest + 2)
        assert all(p.length <= shortest + 2 for p in longer)
        for p in longer:
            check_cut_path(o, p)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            find_cut_path(get_operation('kis'), 'longest')

    def test_broken_path_is_rejected(self):
        o = get_operation('kis')
        p = find_cut_path(o)
        reversed_path = CutPath(tuple(reversed(p.vertices)), tuple(d ^ 1 for d in reversed(p.darts)),
                                p.length - p.v0_index)
        with pytest.raises(InvalidCutPath):
            check_cut_path(o, reversed_path)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_inflation_factor_counts_edges(name):
    o = get_operation(name)
    assert inflation_factor(o) * 12 == CATALOG[name].cube_counts[1]
    assert isinstance(inflation_factor(o), Fraction)
