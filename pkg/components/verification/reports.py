"""
Report models for the verification suites.

The JSON written by ``verify --json`` is ``VerificationReport.json()``; its
schema is ``VerificationReport.schema_json()``.
"""
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, Field, validator

from config.settings import (
    VERIFY_MAPS_PER_GRAPH,
    VERIFY_MAX_VERTICES,
    VERIFY_SAMPLES_PER_GRAPH,
    VERIFY_SEED,
    parse_genera,
)

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'


class CheckRecord(BaseModel):
    """One checked (host, op) pair."""
    check: str
    host: Optional[str] = None
    op: Optional[str] = None
    verdict: str
    witness: Dict[str, Any] = Field(default_factory=dict)

    @validator('verdict')
    def verdict_is_known(cls, v):
        if v not in (PASS, FAIL, SKIP):
            raise ValueError(f"verdict must be one of {PASS}, {FAIL}, {SKIP}")
        return v

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def key(self) -> Tuple[str, str, str]:
        return self.check, self.host or '', self.op or ''


class VerificationReport(BaseModel):
    suite: str
    seed: Optional[int] = None
    max_vertices: Optional[int] = None
    records: List[CheckRecord] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(r.failed for r in self.records)

    def failures(self) -> List[CheckRecord]:
        return [r for r in self.records if r.failed]

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.records:
            out[r.verdict] += 1
        return out

    def add(self, check: str, verdict: bool, host: Optional[str] = None, op: Optional[str] = None,
            **witness) -> CheckRecord:
        record = CheckRecord(check=check, host=host, op=op, verdict=PASS if verdict else FAIL,
                             witness=witness)
        self.records.append(record)
        return record

    def skip(self, check: str, host: Optional[str] = None, op: Optional[str] = None, **witness) -> None:
        self.records.append(CheckRecord(check=check, host=host, op=op, verdict=SKIP, witness=witness))

    def merge(self, other: 'VerificationReport') -> 'VerificationReport':
        """Combined report with records sorted by (check, host, op)."""
        records = sorted(self.records + other.records, key=CheckRecord.key)
        return VerificationReport(suite=self.suite, seed=self.seed, max_vertices=self.max_vertices,
                                  records=records)


class Table1Cell(BaseModel):
    row: str
    column: str
    expected: bool
    observed: bool
    checked_pairs: int = 0
    witness: Optional[Dict[str, Any]] = None

    @property
    def matches(self) -> bool:
        return self.expected == self.observed

    @property
    def symbol(self) -> str:
        return 'Yes' if self.observed else 'No'


class Table1Report(BaseModel):
    rows: List[str]
    columns: List[str]
    cells: List[Table1Cell] = Field(default_factory=list)

    def cell(self, row: str, column: str) -> Table1Cell:
        for c in self.cells:
            if c.row == row and c.column == column:
                return c
        raise KeyError((row, column))

    @property
    def passed(self) -> bool:
        return all(c.matches for c in self.cells)

    def grid(self) -> str:
        width = max(len(r) for r in self.rows) + 2
        lines = [' ' * width + ' | '.join(f"{c:>8}" for c in self.columns)]
        for row in self.rows:
            marks = [f"{self.cell(row, col).symbol:>8}" for col in self.columns]
            lines.append(f"{row:<{width}}" + ' | '.join(marks))
        return '\n'.join(lines)


class CorpusSpec(BaseModel):
    """Filters for corpus generation."""
    max_vertices: int = VERIFY_MAX_VERTICES
    min_vertices: int = 4
    genera: FrozenSet[int] = frozenset(parse_genera())
    require_3conn: bool = True
    require_simple: bool = True
    seed: int = VERIFY_SEED
    samples_per_graph: int = VERIFY_SAMPLES_PER_GRAPH
    # distinct embeddings kept per graph and genus
    maps_per_graph: int = VERIFY_MAPS_PER_GRAPH

    @validator('genera', pre=True)
    def genera_not_negative(cls, v):
        v = frozenset(v)
        if any(g < 0 for g in v):
            raise ValueError("genus must not be negative")
        return v

    @validator('max_vertices', 'min_vertices', 'samples_per_graph', 'maps_per_graph')
    def not_negative(cls, v):
        if v < 0:
            raise ValueError("must not be negative")
        return v
