"""
The ``rotsys v1`` text format for maps, typed maps and lopsp-operations.

    rotsys v1
    name cube
    vertices 8
    edges 12
    v0: 0 2 4
    ...
    types: 0 1 2 ...        # optional, makes a TypedMap
    special: 3 5 9          # optional, needs types, makes a LopspOperation

``#`` starts a comment. Dart ``2e`` and ``2e + 1`` belong to edge ``e``. The
``name`` line is optional and only printed for named maps. Printing is
canonical: vertices ascending, each cycle starting at its smallest dart.
"""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from components.errors import LopspError, RotsysSyntaxError
from components.maps.barycentric import TypedMap
from components.maps.map_core import EmbeddedMap, build_map
from components.operations.lopsp_model import LopspOperation, validate_lopsp

logger = logging.getLogger(__name__)

HEADER = 'rotsys v1'
Document = Union[EmbeddedMap, TypedMap, LopspOperation]

_TOKEN = re.compile(r'\S+')
_VERTEX_LABEL = re.compile(r'v(\d+):$')


@dataclass
class _Line:
    number: int
    tokens: List[Tuple[int, str]]

    @property
    def keyword(self) -> str:
        return self.tokens[0][1]

    def fail(self, index: int, expected: str) -> RotsysSyntaxError:
        column = self.tokens[index][0] if index < len(self.tokens) else self._end()
        return RotsysSyntaxError(self.number, column, expected)

    def _end(self) -> int:
        col, text = self.tokens[-1]
        return col + len(text)


def _lines(text: str) -> List[_Line]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split('#', 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if tokens:
            out.append(_Line(number, tokens))
    return out


def _int(line: _Line, index: int, expected: str, low: int = 0, high: Optional[int] = None) -> int:
    if index >= len(line.tokens):
        raise line.fail(index, expected)
    text = line.tokens[index][1]
    if not text.isdigit():
        raise line.fail(index, expected)
    value = int(text)
    if value < low or (high is not None and value > high):
        raise line.fail(index, expected)
    return value


def _keyword_int(line: Optional[_Line], keyword: str, last: _Line) -> int:
    if line is None or line.keyword != keyword:
        target = line or last
        raise RotsysSyntaxError(target.number, target.tokens[0][0] if line else 1, f"'{keyword} <n>'")
    value = _int(line, 1, 'a non-negative integer')
    if len(line.tokens) > 2:
        raise line.fail(2, 'end of line')
    return value


@dataclass
class _Parsed:
    name: Optional[str] = None
    vertices: int = 0
    edges: int = 0
    rotations: Dict[int, List[int]] = field(default_factory=dict)
    rotation_lines: Dict[int, int] = field(default_factory=dict)
    types: Optional[List[int]] = None
    types_line: Optional[int] = None
    special: Optional[Tuple[int, int, int]] = None
    special_line: Optional[int] = None


def _parse_sections(lines: List[_Line]) -> _Parsed:
    if not lines:
        raise RotsysSyntaxError(1, 1, f"'{HEADER}'")
    first = lines[0]
    if ' '.join(t for _, t in first.tokens) != HEADER:
        raise first.fail(0, f"'{HEADER}'")
    doc = _Parsed()
    rest = lines[1:]
    i = 0
    if i < len(rest) and rest[i].keyword == 'name':
        if len(rest[i].tokens) < 2:
            raise rest[i].fail(1, 'a name')
        doc.name = ' '.join(t for _, t in rest[i].tokens[1:])
        i += 1
    doc.vertices = _keyword_int(rest[i] if i < len(rest) else None, 'vertices', lines[-1])
    i += 1
    doc.edges = _keyword_int(rest[i] if i < len(rest) else None, 'edges', lines[-1])
    i += 1

    darts = 2 * doc.edges
    listed = 0
    for line in rest[i:]:
        label = _VERTEX_LABEL.match(line.keyword)
        if label:
            if doc.types is not None:
                raise line.fail(0, "'special:' or end of file")
            v = int(label.group(1))
            if v >= doc.vertices:
                raise line.fail(0, f"a vertex label v0..v{doc.vertices - 1}")
            if v in doc.rotations:
                raise line.fail(0, f"a vertex other than v{v}, which is already listed")
            cycle = [_int(line, k, f"a dart in 0..{darts - 1}", 0, darts - 1) for k in range(1, len(line.tokens))]
            listed += len(cycle)
            if listed > darts:
                raise line.fail(len(line.tokens) - 1, f"{darts} darts in total for {doc.edges} edges")
            doc.rotations[v] = cycle
            doc.rotation_lines[v] = line.number
        elif line.keyword == 'types:':
            if doc.types is not None:
                raise line.fail(0, "a single 'types:' line")
            if len(line.tokens) - 1 != doc.vertices:
                raise line.fail(min(len(line.tokens), doc.vertices + 1), f"{doc.vertices} vertex types")
            doc.types = [_int(line, k, 'a vertex type 0, 1 or 2', 0, 2) for k in range(1, len(line.tokens))]
            doc.types_line = line.number
        elif line.keyword == 'special:':
            if doc.types is None:
                raise line.fail(0, "'types:' before 'special:'")
            if doc.special is not None:
                raise line.fail(0, 'end of file')
            if len(line.tokens) != 4:
                raise line.fail(min(len(line.tokens), 4), 'three vertices v0 v1 v2')
            doc.special = tuple(_int(line, k, f"a vertex in 0..{doc.vertices - 1}", 0, doc.vertices - 1)
                                for k in (1, 2, 3))
            doc.special_line = line.number
        else:
            raise line.fail(0, "'v<i>:', 'types:' or 'special:'")

    if listed != darts or len(doc.rotations) != doc.vertices:
        last = lines[-1]
        raise RotsysSyntaxError(last.number, 1, f"{doc.vertices} rotation lines listing {darts} darts, "
                                                f"found {len(doc.rotations)} lines and {listed} darts")
    return doc


def _with_line(e: LopspError, line: Optional[int]) -> LopspError:
    if e.line is None:
        e.line = line
    return e


def parse_rotsys(text: str) -> Document:
    """
    Parse a ``rotsys v1`` document into the most specific type it describes.

    Raises:
        RotsysSyntaxError: with line, column and what was expected
        MapError, BarycentricError, InvalidLopspOperation: validation errors,
            with ``line`` set to the section they come from
    """
    doc = _parse_sections(_lines(text))
    first_rotation = min(doc.rotation_lines.values()) if doc.rotation_lines else None
    try:
        m = build_map(doc.vertices, [doc.rotations[v] for v in range(doc.vertices)], name=doc.name)
    except LopspError as e:
        raise _with_line(e, first_rotation)
    if doc.types is None:
        return m
    try:
        typed = TypedMap(m, tuple(doc.types))
    except LopspError as e:
        raise _with_line(e, doc.types_line)
    if doc.special is None:
        return typed
    try:
        return validate_lopsp(typed, *doc.special, name=doc.name)
    except LopspError as e:
        raise _with_line(e, doc.special_line)


def _canonical_cycle(cycle) -> List[int]:
    cycle = list(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def print_rotsys(x: Document) -> str:
    if isinstance(x, LopspOperation):
        m, types, special = x.base, x.typed.vtype, x.specials
    elif isinstance(x, TypedMap):
        m, types, special = x.base, x.vtype, None
    else:
        m, types, special = x, None, None
    lines = [HEADER]
    if m.name:
        lines.append(f"name {m.name}")
    lines.append(f"vertices {m.vertex_count}")
    lines.append(f"edges {m.edge_count}")
    for v in range(m.vertex_count):
        lines.append(f"v{v}: " + ' '.join(map(str, _canonical_cycle(m.rotation(v)))))
    if types is not None:
        lines.append("types: " + ' '.join(map(str, types)))
    if special is not None:
        lines.append("special: " + ' '.join(map(str, special)))
    return '\n'.join(lines) + '\n'


def load_rotsys(path: Union[str, Path]) -> Document:
    path = Path(path)
    logger.debug(f"Reading {path}")
    return parse_rotsys(path.read_text(encoding='utf-8'))


def save_rotsys(x: Document, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(print_rotsys(x), encoding='utf-8')
    logger.debug(f"Wrote {path}")
    return path


def load_map(path: Union[str, Path]) -> EmbeddedMap:
    """The plain map of any rotsys document."""
    doc = load_rotsys(path)
    if isinstance(doc, LopspOperation):
        return doc.base
    if isinstance(doc, TypedMap):
        return doc.base
    return doc
