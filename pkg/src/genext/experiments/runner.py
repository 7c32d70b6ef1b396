"""
Table reproduction sweeps.

A sweep enumerates the cells of a table up to ``max_n``, refuses up front if
any cell is too large, computes the cells in parallel and compares each one
with the bundled printed value.
"""

import logging
from functools import partial

from ..models.results import (
    CellStatus,
    ExperimentCell,
    RunConfig,
    TableReport,
    summarize,
)
from ..services.engine import check_feasible
from ..utils.fanout import ParallelSweep
from .expected import CellKey, ExpectedCell, ExpectedTable, load_expected
from .state import CellOutcome, CellTask
from .tables import TWO_QUADRICS, compute_cell

logger = logging.getLogger(__name__)

# Largest n per table that stays inside the default feasibility limit
DEFAULT_MAX_N = {1: 12, 2: 13, 3: 13, 4: 12, 5: 10}


def table_tasks(table_id: int, max_n: int) -> list[CellTask]:
    """All cells of a table with n <= max_n, in row-major order."""
    match table_id:
        case 1 | 2:
            return [
                {"table": table_id, "n": n, "degrees": (d,)}
                for n in range(3, max_n + 1)
                for d in range(3, n + 1, 2)
            ]
        case 3:
            return [
                {"table": 3, "n": n, "degrees": (d,)}
                for n in range(5, max_n + 1)
                for d in range(5, n + 1, 2)
            ]
        case 4:
            return [{"table": 4, "n": n, "degrees": (3,)} for n in range(3, max_n + 1)]
        case 5:
            return [{"table": 5, "n": n, "degrees": TWO_QUADRICS} for n in range(2, max_n + 1)]
    raise ValueError(f"unknown table id {table_id}")


def transcription_conflicts(table2: ExpectedTable, table3: ExpectedTable) -> list[str]:
    """Cells printed in both the n-indexed and the (n-d)-indexed table with different values."""
    by_key = table2.by_key()
    notes = []
    for cell in table3.cells:
        other = by_key.get(cell.key)
        if other is not None and other.value != cell.value:
            n, degrees = cell.key
            notes.append(
                f"transcription conflict at n={n}, d={degrees[0]} (row n-d={n - degrees[0]}): "
                f"table 2 has {other.value}, table 3 has {cell.value}"
            )
    return notes


def _classify(
    task: CellTask, outcome: CellOutcome, printed_cells: dict[CellKey, ExpectedCell]
) -> ExperimentCell:
    key = (task["n"], task["degrees"])
    printed = printed_cells.get(key)
    if printed is None:
        status, value = CellStatus.NOT_IN_PAPER, None
    elif printed.uncomputed:
        status, value = CellStatus.UNCOMPUTED_IN_PAPER, None
    else:
        value = printed.value
        status = CellStatus.MATCH if outcome["computed"] == value else CellStatus.MISMATCH
    return ExperimentCell(
        table=task["table"],
        n=task["n"],
        d=list(task["degrees"]),
        computed=outcome["computed"],
        expected=value,
        status=status,
        anomaly=outcome["anomaly"],
    )


def run_table(table_id: int, max_n: int, run_config: RunConfig) -> TableReport:
    """
    Compute every cell of one table up to ``max_n`` and diff it against the printed values.

    Args:
        table_id: 1..5
        max_n: Largest number of variables
        run_config: Seeds, trials, prime, workers and feasibility mode

    Returns:
        TableReport with per-cell status and summary counts

    Raises:
        InfeasibleSizeError: If any cell exceeds the matrix limit (nothing is computed)
    """
    tasks = table_tasks(table_id, max_n)
    limit = run_config.matrix_limit
    for task in tasks:
        check_feasible(task["n"], task["degrees"], limit)

    expected = load_expected(table_id, run_config.expected_dir)
    notes: list[str] = []
    if table_id in (2, 3):
        notes = transcription_conflicts(
            load_expected(2, run_config.expected_dir), load_expected(3, run_config.expected_dir)
        )
        for note in notes:
            logger.warning("⚠️ %s", note)

    logger.info("ℹ️ Table %s: %s cells up to n=%s", table_id, len(tasks), max_n)
    worker = partial(
        compute_cell, seed=run_config.seed, trials=run_config.trials, prime=run_config.prime
    )
    sweep: ParallelSweep[CellTask, CellOutcome] = ParallelSweep(worker, name=f"table{table_id}")
    outcomes = sweep.run(tasks, run_config.workers)

    printed_cells = expected.by_key()
    cells = [
        _classify(task, outcome, printed_cells)
        for task, outcome in zip(tasks, outcomes, strict=True)
    ]
    report = TableReport(
        table=table_id, max_n=max_n, cells=cells, summary=summarize(cells), notes=notes
    )
    for cell in cells:
        if cell.status is CellStatus.MISMATCH:
            logger.error(
                "❌ Table %s mismatch at n=%s, d=%s: computed %s, printed %s",
                table_id,
                cell.n,
                cell.d,
                cell.computed,
                cell.expected,
            )
    logger.info(
        "📊 Table %s: %s/%s match, %s mismatch",
        table_id,
        report.summary.match,
        report.summary.total,
        report.summary.mismatch,
    )
    return report


def run_tables(
    table_ids: list[int], max_n: int | None, run_config: RunConfig
) -> list[TableReport]:
    """Run several tables; each uses its default bound unless ``max_n`` is given."""
    reports = []
    for table_id in table_ids:
        bound = max_n if max_n is not None else DEFAULT_MAX_N[table_id]
        reports.append(run_table(table_id, bound, run_config))
    return reports


__all__ = ["DEFAULT_MAX_N", "run_table", "run_tables", "table_tasks"]
