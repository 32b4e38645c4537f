import pytest

from components.errors import DuplicateDart, InvalidLopspOperation, RotsysSyntaxError
from components.maps.barycentric import TypedMap, barycentric_subdivision
from components.maps.map_core import EmbeddedMap, genus, is_simple
from components.maps.standard_maps import cube, tetrahedron
from components.io_cli.rotsys import HEADER, load_map, load_rotsys, parse_rotsys, print_rotsys, save_rotsys
from components.operations.catalog import get_operation
from components.operations.lopsp_model import LopspOperation
from tests.helpers import check_euler, check_isomorphic


class TestFixtures:
    def test_tetrahedron(self, fixtures_dir):
        m = load_rotsys(fixtures_dir / 'tetrahedron.rotsys')
        assert isinstance(m, EmbeddedMap)
        assert m.name == 'tetrahedron'
        check_euler(m, 0)
        check_isomorphic(m, tetrahedron())

    def test_cube(self, fixtures_dir):
        m = load_rotsys(fixtures_dir / 'cube.rotsys')
        assert m.face_vector() == (4,) * 6
        check_isomorphic(m, cube())

    def test_theta_is_a_multigraph(self, fixtures_dir):
        m = load_rotsys(fixtures_dir / 'theta.rotsys')
        assert m.counts() == (2, 3, 3)
        assert genus(m) == 0
        assert not is_simple(m)

    def test_dual_operation(self, fixtures_dir):
        o = load_rotsys(fixtures_dir / 'dual.lopsp')
        assert isinstance(o, LopspOperation)
        assert o.canonical_form() == get_operation('dual').canonical_form()
        assert (fixtures_dir / 'dual.lopsp').read_text() == print_rotsys(get_operation('dual'))

    def test_identity_operation(self, fixtures_dir):
        o = load_rotsys(fixtures_dir / 'identity.lopsp')
        assert o.canonical_form() == get_operation('identity').canonical_form()

    def test_bad_dart(self, fixtures_dir):
        with pytest.raises(RotsysSyntaxError) as info:
            load_rotsys(fixtures_dir / 'bad_dart.rotsys')
        assert info.value.line == 5
        assert info.value.column == 5
        assert str(info.value).startswith("line 5: column 5: expected a dart in 0..1")

    def test_bad_types(self, fixtures_dir):
        with pytest.raises(InvalidLopspOperation) as info:
            load_rotsys(fixtures_dir / 'bad_types.lopsp')
        assert info.value.line == 9
        assert 'special vertex type' in info.value.clauses()
        assert 'type-1 degree' in info.value.clauses()

    def test_load_map_drops_the_labels(self, fixtures_dir):
        m = load_map(fixtures_dir / 'dual.lopsp')
        assert isinstance(m, EmbeddedMap)
        assert m.counts() == (3, 3, 2)


class TestPrinting:
    @pytest.mark.parametrize("doc", [
        cube(),
        barycentric_subdivision(tetrahedron()),
        get_operation('chamfer'),
    ], ids=['map', 'typed', 'operation'])
    def test_print_parse_print(self, doc):
        text = print_rotsys(doc)
        assert text.startswith(HEADER + '\n')
        again = parse_rotsys(text)
        assert type(again) is type(doc)
        assert print_rotsys(again) == text

    def test_cycles_start_at_their_smallest_dart(self):
        text = print_rotsys(parse_rotsys("rotsys v1\nvertices 2\nedges 2\nv0: 2 0\nv1: 3 1\n"))
        assert "v0: 0 2\nv1: 1 3\n" in text

    def test_unnamed_map_has_no_name_line(self):
        text = print_rotsys(parse_rotsys("rotsys v1\nvertices 1\nedges 1\nv0: 0 1\n"))
        assert 'name' not in text

    def test_save(self, tmp_path):
        path = save_rotsys(cube(), tmp_path / 'out' / 'cube.rotsys')
        check_isomorphic(load_map(path), cube())


class TestSyntaxErrors:
    @pytest.mark.parametrize("text, line, column", [
        ("", 1, 1),
        ("rotsys v2\n", 1, 1),
        ("rotsys v1\nvertices x\n", 2, 10),
        ("rotsys v1\nvertices 1\nnodes 1\n", 3, 1),
        ("rotsys v1\nvertices 1\nedges 1\nw0: 0 1\n", 4, 1),
        ("rotsys v1\nvertices 1\nedges 1\nv1: 0 1\n", 4, 1),
        ("rotsys v1\nvertices 1\nedges 1\nv0: 0\n", 4, 1),
        ("rotsys v1\nvertices 1\nedges 1\nv0: 0 1\ntypes: 0 1\n", 5, 10),
        ("rotsys v1\nvertices 1\nedges 1\nv0: 0 1\nspecial: 0 0 0\n", 5, 1),
    ])
    def test_position(self, text, line, column):
        with pytest.raises(RotsysSyntaxError) as info:
            parse_rotsys(text)
        assert (info.value.line, info.value.column) == (line, column)

    def test_comments_and_blank_lines(self):
        m = parse_rotsys("# a loop\nrotsys v1\n\nvertices 1  # one\nedges 1\nv0: 0 1\n")
        assert m.counts() == (1, 1, 2)

    def test_validation_error_has_the_rotation_line(self):
        with pytest.raises(DuplicateDart) as info:
            parse_rotsys("rotsys v1\nvertices 2\nedges 2\nv0: 0 0\nv1: 1 2\n")
        assert info.value.line == 4

    def test_special_vertices_must_differ(self):
        with pytest.raises(InvalidLopspOperation) as info:
            parse_rotsys("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\ntypes: 0 1\nspecial: 0 1 1\n")
        assert info.value.line == 7
        assert 'distinct special vertices' in info.value.clauses()

    def test_typed_map_without_specials(self):
        doc = parse_rotsys("rotsys v1\nvertices 2\nedges 1\nv0: 0\nv1: 1\ntypes: 0 1\n")
        assert isinstance(doc, TypedMap)
