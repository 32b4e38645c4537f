"""
Named lopsp-operations.

Each operation is drawn as the barycentric subdivision of its result inside
one double chamber: a quadrilateral with the tail ``v0`` of a host dart on the
left, its head ``v0'`` on the right, the edge point ``E`` below and the face
point ``F`` above. Points on the lower right and upper right sides carry a
prime and are folded onto their unprimed partners on the left sides, which
closes the quadrilateral into the operation.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from components.errors import UnknownOperation
from components.maps.barycentric import TypedMap
from components.maps.map_core import assemble_map
from components.operations.classify import OperationTag
from components.operations.lopsp_model import LopspOperation, validate_lopsp

logger = logging.getLogger(__name__)

Point = Tuple[float, float, int]

# corners of the double chamber
V0, V0R, EP, FP = (-4.0, 0.0), (4.0, 0.0), (0.0, -4.0), (0.0, 4.0)


def _fold(label: str) -> str:
    return label.rstrip("'")


def draw_operation(name: str, points: Dict[str, Point], triangles: Sequence[Tuple[str, str, str]],
                   v0: str = 'v0', v1: str = 'E', v2: str = 'F') -> LopspOperation:
    """
    Build an operation from a straight-line drawing of its double chamber.

    Args:
        name: Operation name
        points: label -> (x, y, type); primed labels fold onto unprimed ones
        triangles: Chambers of the drawing, in any orientation
        v0, v1, v2: Labels of the special vertices

    Returns:
        The validated operation
    """
    uses: Dict[frozenset, int] = {}
    for tri in triangles:
        for i in range(3):
            key = frozenset((tri[i], tri[(i + 1) % 3]))
            uses[key] = uses.get(key, 0) + 1

    def edge_key(a, b):
        drawn = frozenset((a, b))
        if uses[drawn] == 1:
            return 'side', frozenset((_fold(a), _fold(b)))
        return 'inner', drawn

    polygons = []
    for a, b, c in triangles:
        (ax, ay, _), (bx, by, _), (cx, cy, _) = points[a], points[b], points[c]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) < 0:
            b, c = c, b
        polygons.append([(_fold(a), edge_key(a, b)), (_fold(b), edge_key(b, c)), (_fold(c), edge_key(c, a))])

    order = sorted({_fold(label) for label in points})
    assembly = assemble_map(polygons, name=name, vertex_order=order)
    vtype = tuple(points[key][2] for key in assembly.vertex_keys)
    index = assembly.vertex_index()
    return validate_lopsp(TypedMap(assembly.map, vtype), index[v0], index[v1], index[v2], name)


def _corners(t_v0: int, t_e: int, t_f: int) -> Dict[str, Point]:
    return {'v0': V0 + (t_v0,), "v0'": V0R + (t_v0,), 'E': EP + (t_e,), 'F': FP + (t_f,)}


def identity() -> LopspOperation:
    return draw_operation('identity', _corners(0, 1, 2), [('v0', 'E', 'F'), ("v0'", 'E', 'F')])


def dual() -> LopspOperation:
    return draw_operation('dual', _corners(2, 1, 0), [('v0', 'E', 'F'), ("v0'", 'E', 'F')])


def _medial(name: str, t_corner: int, t_e: int) -> LopspOperation:
    points = _corners(t_corner, t_e, t_corner)
    points.update({'m': (-2.0, 2.0, 1), "m'": (2.0, 2.0, 1)})
    return draw_operation(name, points, [('v0', 'E', 'm'), ('E', 'F', 'm'), ("v0'", 'E', "m'"), ('E', "m'", 'F')])


def ambo() -> LopspOperation:
    return _medial('ambo', 2, 0)


def join() -> LopspOperation:
    return _medial('join', 0, 2)


def kis() -> LopspOperation:
    points = _corners(0, 1, 0)
    points.update({'m': (-2.0, 2.0, 1), "m'": (2.0, 2.0, 1), 'c': (0.0, 0.0, 2)})
    ring = ['v0', 'E', "v0'", "m'", 'F', 'm']
    return draw_operation('kis', points, [('c', ring[i], ring[(i + 1) % 6]) for i in range(6)])


def _split_edge(name: str, t_corner: int, t_split: int, t_f: int) -> LopspOperation:
    points = _corners(t_corner, 1, t_f)
    points.update({'s': (-2.0, -2.0, t_split), "s'": (2.0, -2.0, t_split),
                   'm': (-2.0, 2.0, 1), "m'": (2.0, 2.0, 1)})
    return draw_operation(name, points, [
        ('v0', 's', 'm'), ('s', 'F', 'm'), ('s', 'E', 'F'),
        ('E', "s'", 'F'), ("s'", "m'", 'F'), ("s'", "v0'", "m'"),
    ])


def truncation() -> LopspOperation:
    return _split_edge('truncation', 2, 0, 2)


def needle() -> LopspOperation:
    """Kis of the dual; the type-1 partner of join."""
    return _split_edge('needle', 0, 2, 0)


def leapfrog() -> LopspOperation:
    points = _corners(2, 1, 2)
    points.update({'m': (-2.0, 2.0, 1), "m'": (2.0, 2.0, 1), 'p': (0.0, 0.0, 0)})
    ring = ['v0', 'E', "v0'", "m'", 'F', 'm']
    return draw_operation('leapfrog', points, [('p', ring[i], ring[(i + 1) % 6]) for i in range(6)])


def chamfer() -> LopspOperation:
    points = _corners(0, 2, 2)
    points.update({'r': (-3.0, 1.0, 1), "r'": (3.0, 1.0, 1),
                   'q': (-1.0, 3.0, 0), "q'": (1.0, 3.0, 0),
                   's': (0.0, 1.0, 1)})
    return draw_operation('chamfer', points, [
        ('v0', 'E', 'r'), ('E', 'q', 'r'), ('E', 's', 'q'), ('s', 'F', 'q'),
        ("v0'", 'E', "r'"), ('E', "r'", "q'"), ('E', "q'", 's'), ('s', "q'", 'F'),
    ])


def _gyro(name: str, t_corner: int) -> LopspOperation:
    points = _corners(t_corner, 1, t_corner)
    t_pent = 2 - t_corner
    points.update({'h': (-3.0, -1.0, 1), 'g': (-2.0, -2.0, t_corner),
                   "g'": (2.0, -2.0, t_corner), "h'": (3.0, -1.0, 1),
                   'w': (-2.0, 2.0, t_pent), "w'": (2.0, 2.0, t_pent),
                   'u': (1.0, 1.0, 1)})
    fan = ['v0', 'h', 'g', 'E', "g'", 'u', 'F']
    triangles = [('w', fan[i], fan[i + 1]) for i in range(len(fan) - 1)]
    triangles += [("w'", "h'", "v0'"), ("w'", "g'", "h'"), ("w'", 'u', "g'"), ("w'", 'F', 'u')]
    return draw_operation(name, points, triangles)


def gyro() -> LopspOperation:
    return _gyro('gyro', 0)


def snub() -> LopspOperation:
    return _gyro('snub', 2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], LopspOperation]
    tag: OperationTag
    cube_counts: Tuple[int, int, int]
    required: bool = True


CATALOG: Dict[str, CatalogEntry] = {entry.name: entry for entry in (
    CatalogEntry('identity', identity, OperationTag.IDENTITY, (8, 12, 6)),
    CatalogEntry('dual', dual, OperationTag.DUAL, (6, 12, 8)),
    CatalogEntry('join', join, OperationTag.EDGE_BREAKING_2, (14, 24, 12)),
    CatalogEntry('needle', needle, OperationTag.EDGE_BREAKING_1, (14, 36, 24)),
    CatalogEntry('kis', kis, OperationTag.EDGE_PRESERVING, (14, 36, 24)),
    CatalogEntry('truncation', truncation, OperationTag.EDGE_PRESERVING, (24, 36, 14)),
    CatalogEntry('ambo', ambo, OperationTag.EDGE_PRESERVING, (12, 24, 14)),
    CatalogEntry('leapfrog', leapfrog, OperationTag.EDGE_PRESERVING, (24, 36, 14)),
    CatalogEntry('chamfer', chamfer, OperationTag.EDGE_PRESERVING, (32, 48, 18)),
    CatalogEntry('gyro', gyro, OperationTag.EDGE_PRESERVING, (38, 60, 24), required=False),
    CatalogEntry('snub', snub, OperationTag.EDGE_PRESERVING, (24, 60, 38), required=False),
)}


@lru_cache(maxsize=None)
def get_operation(name: str) -> LopspOperation:
    """
    Raises:
        UnknownOperation: no catalog entry has this name
    """
    entry = CATALOG.get(name.lower())
    if entry is None:
        raise UnknownOperation(f"unknown operation '{name}'; known: {', '.join(CATALOG)}")
    return entry.build()


def operation_names(tag: Optional[OperationTag] = None) -> List[str]:
    return [name for name, entry in CATALOG.items() if tag is None or entry.tag == tag]


def catalog_operations() -> List[LopspOperation]:
    return [get_operation(name) for name in CATALOG]