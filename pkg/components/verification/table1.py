"""
Which classes of operations preserve 3-connectivity on which classes of hosts.

Rows restrict the host (or, for ``O(G) simple``, the result); columns group
the catalog by class. A Yes cell is confirmed by checking every pair on the
row corpus; a No cell needs a witness pair whose result is not 3-connected.
The stored counterexamples join every row whose condition they meet.
"""
import logging
from typing import Callable, Dict, List, Optional, Sequence

from components.errors import CellMismatch
from components.maps.map_core import EmbeddedMap, dual, genus, is_k_connected, is_polyhedral, is_simple
from components.operations.catalog import catalog_operations
from components.operations.classify import OperationTag, classify
from components.operations.lopsp_model import LopspOperation
from components.verification.corpus import corpus_generate
from components.verification.counterexamples import counterexample_torus, dual_counterexample, minimum_cut
from components.verification.reports import CorpusSpec, Table1Cell, Table1Report, VerificationReport
from components.verification.theorems import ApplicationCache

logger = logging.getLogger(__name__)

PLANE = 'G plane'
POLYHEDRAL = 'G polyhedral'
SIMPLE_DUAL = 'G* simple'
SIMPLE_RESULT = 'O(G) simple'
GENERAL = 'General'
ROWS = (PLANE, POLYHEDRAL, SIMPLE_DUAL, SIMPLE_RESULT, GENERAL)

DUAL_COLUMN = 'Dual'
TYPE2_COLUMN = 'Type 2'
TYPE1_COLUMN = "Type 1'"
PRESERVING_COLUMN = 'Edge-preserving'
COLUMNS = (DUAL_COLUMN, TYPE2_COLUMN, TYPE1_COLUMN, PRESERVING_COLUMN)

EXPECTED: Dict[str, Dict[str, bool]] = {
    PLANE: dict.fromkeys(COLUMNS, True),
    POLYHEDRAL: dict.fromkeys(COLUMNS, True),
    SIMPLE_DUAL: {DUAL_COLUMN: False, TYPE2_COLUMN: True, TYPE1_COLUMN: True, PRESERVING_COLUMN: True},
    SIMPLE_RESULT: {DUAL_COLUMN: False, TYPE2_COLUMN: False, TYPE1_COLUMN: True, PRESERVING_COLUMN: True},
    GENERAL: {DUAL_COLUMN: False, TYPE2_COLUMN: False, TYPE1_COLUMN: False, PRESERVING_COLUMN: True},
}

_COLUMN_OF_TAG = {
    OperationTag.DUAL: DUAL_COLUMN,
    OperationTag.EDGE_BREAKING_2: TYPE2_COLUMN,
    OperationTag.EDGE_BREAKING_1: TYPE1_COLUMN,
    OperationTag.EDGE_PRESERVING: PRESERVING_COLUMN,
    OperationTag.IDENTITY: PRESERVING_COLUMN,
}


def column_of(o: LopspOperation) -> str:
    return _COLUMN_OF_TAG[classify(o).tag]


def _host_in_row(row: str, g: EmbeddedMap) -> bool:
    if row == PLANE:
        return genus(g) == 0
    if row == POLYHEDRAL:
        return is_polyhedral(g)
    if row == SIMPLE_DUAL:
        return is_simple(dual(g))
    return True


def row_hosts(row: str, corpus: Sequence[EmbeddedMap],
              extra: Sequence[EmbeddedMap] = ()) -> List[EmbeddedMap]:
    return [g for g in list(corpus) + list(extra) if _host_in_row(row, g)]


def stored_counterexamples() -> List[EmbeddedMap]:
    return [counterexample_torus(), dual_counterexample()]


def _evaluate_cell(row: str, column: str, hosts: Sequence[EmbeddedMap], ops: Sequence[LopspOperation],
                   apply: Callable) -> Table1Cell:
    checked = 0
    witness = None
    for o in ops:
        for g in hosts:
            result = apply(o, g).result
            if row == SIMPLE_RESULT and not is_simple(result):
                continue
            checked += 1
            if witness is None and not is_k_connected(result, 3):
                witness = {'host': g.name, 'op': o.name, 'cut': minimum_cut(result),
                           'result_counts': list(result.counts())}
    return Table1Cell(row=row, column=column, expected=EXPECTED[row][column], observed=witness is None,
                      checked_pairs=checked, witness=witness)


def table1_report(corpus: Optional[Sequence[EmbeddedMap]] = None,
                  ops: Optional[Sequence[LopspOperation]] = None,
                  spec: Optional[CorpusSpec] = None, strict: bool = True,
                  apply: Optional[Callable] = None) -> Table1Report:
    """
    Fill the 5 x 4 grid.

    Raises:
        CellMismatch: a cell disagrees with the expected grid (only when ``strict``)
    """
    if corpus is None:
        corpus = corpus_generate(spec or CorpusSpec())
    ops = list(ops) if ops is not None else catalog_operations()
    apply = apply or ApplicationCache()
    extra = stored_counterexamples()

    by_column: Dict[str, List[LopspOperation]] = {c: [] for c in COLUMNS}
    for o in ops:
        by_column[column_of(o)].append(o)

    report = Table1Report(rows=list(ROWS), columns=list(COLUMNS))
    for row in ROWS:
        hosts = row_hosts(row, corpus, extra)
        for column in COLUMNS:
            cell = _evaluate_cell(row, column, hosts, by_column[column], apply)
            logger.debug(f"Table cell ({row}, {column}): {cell.symbol} over {cell.checked_pairs} pairs")
            report.cells.append(cell)
            if strict and not cell.matches:
                raise CellMismatch(f"cell ({row}, {column}) is {cell.symbol}, expected "
                                   f"{'Yes' if cell.expected else 'No'}", cell=cell, witness=cell.witness)
    logger.info(f"Table reproduced: {sum(c.matches for c in report.cells)}/{len(report.cells)} cells match")
    return report


def table1_records(table: Table1Report, report: VerificationReport) -> VerificationReport:
    for cell in table.cells:
        report.add('table1', cell.matches, cell.witness['host'] if cell.witness else None,
                   cell.witness['op'] if cell.witness else None,
                   row=cell.row, column=cell.column, observed=cell.symbol,
                   checked_pairs=cell.checked_pairs)
    return report
