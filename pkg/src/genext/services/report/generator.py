"""
Main report generator: renders result models as plain text, markdown, CSV or JSON.

Rendering is a pure function of the models, so identical runs give
byte-identical reports.
"""

import json
import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from ...models.results import (
    CellStatus,
    ConjectureReport,
    ExperimentCell,
    IncidenceReport,
    QuotientResult,
    SeriesResult,
    TableReport,
)
from .sections import ReportSectionBuilder, optional_text, series_text

logger = logging.getLogger(__name__)

CELL_HEADERS = ["table", "n", "d", "computed", "expected", "status", "anomaly"]


def _dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _degrees(d: Sequence[int]) -> str:
    return ",".join(str(x) for x in d)


class ReportService:
    """Render result models in the configured output format."""

    def __init__(self, fmt: str = "plain") -> None:
        self.fmt = fmt
        self.sections = ReportSectionBuilder()

    # ------------------------------------------------------------------
    # tables
    # ------------------------------------------------------------------

    @staticmethod
    def _cell_row(cell: ExperimentCell) -> list[str]:
        return [
            str(cell.table),
            str(cell.n),
            _degrees(cell.d),
            series_text(cell.computed),
            optional_text(cell.expected) if cell.status in (CellStatus.MATCH, CellStatus.MISMATCH)
            else "-",
            cell.status.value,
            cell.anomaly or "",
        ]

    @staticmethod
    def _grid_text(cell: ExperimentCell) -> str:
        text = series_text(cell.computed)
        if cell.status is CellStatus.MISMATCH:
            return f"{text} (printed {optional_text(cell.expected)})"
        if cell.status is CellStatus.UNCOMPUTED_IN_PAPER:
            return f"{text} (-)"
        return text

    def _table_markdown(self, report: TableReport) -> str:
        lines = [f"## Table {report.table} (n <= {report.max_n})", ""]
        if report.table in (1, 2, 3):
            if report.table == 3:
                keyed = {(c.n - c.d[0], c.d[0]): self._grid_text(c) for c in report.cells}
                corner = "n-d \\ d"
            else:
                keyed = {(c.n, c.d[0]): self._grid_text(c) for c in report.cells}
                corner = "n \\ d"
            row_labels = sorted({r for r, _ in keyed})
            col_labels = sorted({c for _, c in keyed})
            headers, rows = self.sections.grid(row_labels, col_labels, keyed, corner)
        else:
            headers = ["n", "computed", "printed", "status"]
            rows = [
                [str(c.n), series_text(c.computed), optional_text(c.expected), c.status.value]
                for c in report.cells
            ]
        lines.append(self.sections.markdown(headers, rows))
        lines.extend(["", self._summary_line(report)])
        lines.extend(f"- {note}" for note in report.notes)
        lines.extend(
            f"- anomaly at n={c.n}, d={_degrees(c.d)}: {c.anomaly}"
            for c in report.cells
            if c.anomaly
        )
        return "\n".join(lines)

    @staticmethod
    def _summary_line(report: TableReport) -> str:
        s = report.summary
        return (
            f"Table {report.table}: {s.match}/{s.total} match, {s.mismatch} mismatch, "
            f"{s.uncomputed_in_paper} uncomputed in paper, {s.not_in_paper} not in paper, "
            f"{s.anomalies} anomalies"
        )

    def render_tables(self, reports: Sequence[TableReport]) -> str:
        """Render one or more table reports."""
        if self.fmt == "json":
            if len(reports) == 1:
                return _dump_json(reports[0].model_dump(mode="json"))
            return _dump_json({"tables": [r.model_dump(mode="json") for r in reports]})
        if self.fmt == "csv":
            rows = [self._cell_row(c) for r in reports for c in r.cells]
            return self.sections.csv(CELL_HEADERS, rows)
        if self.fmt == "md":
            return "\n\n".join(self._table_markdown(r) for r in reports)
        blocks = []
        for report in reports:
            rows = [self._cell_row(c) for c in report.cells]
            block = [self.sections.plain(CELL_HEADERS, rows), self._summary_line(report)]
            block.extend(report.notes)
            blocks.append("\n".join(block))
        return "\n\n".join(blocks)

    # ------------------------------------------------------------------
    # conjectures
    # ------------------------------------------------------------------

    def render_conjectures(self, report: ConjectureReport) -> str:
        if self.fmt == "json":
            return _dump_json(report.model_dump(mode="json"))
        headers = ["n", "d", "predicted", "computed", "status", "order", "detail"]
        rows = [
            [
                str(v.n),
                _degrees(v.d),
                optional_text(v.predicted),
                series_text(v.computed),
                v.status.value,
                "inf" if v.convergence_order is None else str(v.convergence_order),
                v.detail or "",
            ]
            for v in report.verdicts
        ]
        body = self.sections.layout(self.fmt, headers, rows)
        if self.fmt == "csv":
            return body
        title = f"Family {report.family}"
        if report.rule:
            title += f" ({report.rule} rule)"
        if report.family in ("principal", "nonprincipal"):
            title += f" in the {report.algebra} algebra"
        counts = ", ".join(f"{count} {status}" for status, count in report.summary.items())
        lines = [title, "", body, "", counts]
        if report.rule_fit:
            total = len(report.verdicts)
            fit = ", ".join(f"{rule} {hits}/{total}" for rule, hits in report.rule_fit.items())
            verdict = " and ".join(report.fitting_rules) or "no"
            lines.append(f"exponent rules: {fit}; {verdict} rule fits")
        return "\n".join(lines)

    # ------------------------------------------------------------------
    # incidence
    # ------------------------------------------------------------------

    def render_incidence(self, report: IncidenceReport) -> str:
        if self.fmt == "json":
            return _dump_json(report.model_dump(mode="json"))
        headers = ["a", "b", "n", "signed", "rows", "cols", "rank", "expected", "certified"]
        rows = [
            [
                str(c.a),
                str(c.b),
                str(c.n),
                str(c.signed).lower(),
                str(c.rows),
                str(c.cols),
                str(c.rank),
                str(c.expected),
                str(c.certified).lower(),
            ]
            for c in report.certificates
        ]
        parts = []
        if rows:
            parts.append(self.sections.layout(self.fmt, headers, rows))
        for sindep in report.sindep:
            line = (
                f"sindep ({sindep.rule} rule): {sindep.violation_count} violations "
                f"in {sindep.checked} cases"
            )
            parts.append(line)
            parts.extend(
                f"  A={w.a_set} B={w.b_set} r={w.r}: direct {w.direct}, closed form {w.predicted}"
                for w in sindep.violations[:5]
            )
        if report.notzero is not None:
            nz = report.notzero
            parts.append(
                f"notzero: {'all positive' if nz.all_positive else 'NOT all positive'} "
                f"for even d <= n <= {nz.max_n}; recursion = brute force "
                f"(n <= {nz.brute_max_n}): {str(nz.recursion_matches_bruteforce).lower()}; "
                f"pair recursion agrees: {str(nz.pairs_match_recursion).lower()}"
            )
        return "\n".join(parts)

    # ------------------------------------------------------------------
    # single computations
    # ------------------------------------------------------------------

    def render_series(self, result: SeriesResult) -> str:
        if self.fmt == "json":
            return _dump_json(result.model_dump(mode="json"))
        text = series_text(result.series)
        if self.fmt == "plain":
            return text
        return self.sections.layout(self.fmt, ["expression", "series"], [[result.expression, text]])

    def render_quotient(self, result: QuotientResult) -> str:
        if self.fmt == "json":
            return _dump_json(result.model_dump(mode="json"))
        rows = [
            ["quotient", series_text(result.quotient)],
            ["ideal", series_text(result.ideal)],
        ]
        if result.annihilator is not None:
            rows.append(["annihilator", series_text(result.annihilator)])
        if result.predicted is not None:
            rows.append([f"predicted ({result.predicted_label})", series_text(result.predicted)])
            rows.append(["difference", optional_text(result.difference)])
        return self.sections.layout(self.fmt, ["series", "value"], rows)


def write_output(text: str, path: Path | None) -> None:
    """Write a rendered report to ``path`` (parents created) or to stdout."""
    if path is None:
        print(text)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info("💾 Report written to %s", path)
