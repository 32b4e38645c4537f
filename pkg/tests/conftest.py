import pytest

pytest.register_assert_rewrite("tests.helpers")

from components.maps.standard_maps import cube, octahedron, tetrahedron, torus_grid
from components.operations.catalog import CATALOG, get_operation
from components.verification.counterexamples import torus_q3
from config.settings import FIXTURES_DIR


@pytest.fixture
def tetra():
    return tetrahedron()


@pytest.fixture
def cube_map():
    return cube()


@pytest.fixture
def octa():
    return octahedron()


@pytest.fixture
def torus():
    return torus_q3()


@pytest.fixture
def grid3():
    return torus_grid(3)


@pytest.fixture
def small_corpus():
    """Simple 3-connected hosts on the sphere and the torus."""
    return [tetrahedron(), cube(), octahedron(), torus_grid(3)]


@pytest.fixture(params=sorted(CATALOG))
def catalog_op(request):
    return get_operation(request.param)


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
