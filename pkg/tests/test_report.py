"""
Tests for report rendering and output.
"""

import json

import pytest

from src.genext.models.results import (
    CellStatus,
    ConjectureReport,
    ConjectureVerdict,
    ExperimentCell,
    FullRankCertificate,
    IncidenceReport,
    QuotientResult,
    SeriesResult,
    TableReport,
    VerdictStatus,
    summarize,
)
from src.genext.services.report import (
    ReportSectionBuilder,
    ReportService,
    series_text,
    write_output,
)
from src.genext.services.report.generator import CELL_HEADERS


def _report(table: int, cells: list[ExperimentCell]) -> TableReport:
    return TableReport(table=table, max_n=5, cells=cells, summary=summarize(cells))


@pytest.fixture
def cubic_report() -> TableReport:
    cell = ExperimentCell(
        table=4, n=3, d=[3], computed=[0, 3, 3], expected=[0, 3, 3], status=CellStatus.MATCH
    )
    return _report(4, [cell])


@pytest.fixture
def order_report() -> TableReport:
    cells = [
        ExperimentCell(table=1, n=5, d=[3], computed=1, expected=2, status=CellStatus.MISMATCH),
        ExperimentCell(table=1, n=5, d=[5], computed=1, expected=1, status=CellStatus.MATCH),
    ]
    return _report(1, cells)


class TestSections:
    """Test suite for value formatting and layouts."""

    def test_series_text(self):
        """Test series, orders and +infinity."""
        assert series_text([1, 4, 5]) == "5t^2+4t+1"
        assert series_text([]) == "0"
        assert series_text(3) == "3"
        assert series_text(None) == "inf"

    def test_plain(self):
        """Test columns are padded to the widest cell."""
        text = ReportSectionBuilder.plain(["a", "bb"], [["xyz", "1"]])
        assert text.splitlines() == ["a    bb", "---  --", "xyz  1"]

    def test_markdown(self):
        """Test a pipe table."""
        text = ReportSectionBuilder.markdown(["a", "bb"], [["xyz", "1"]])
        assert text == "| a | bb |\n|---|---|\n| xyz | 1 |"

    def test_csv(self):
        """Test CSV without a trailing newline."""
        assert ReportSectionBuilder.csv(["a", "bb"], [["x,y", "1"]]) == 'a,bb\n"x,y",1'

    def test_grid(self):
        """Test pivoting leaves gaps blank."""
        headers, rows = ReportSectionBuilder.grid([3, 4], [3], {(4, 3): "x"}, "n")
        assert headers == ["n", "3"]
        assert rows == [["3", ""], ["4", "x"]]


class TestTables:
    """Test suite for table reports in every format."""

    def test_json_single(self, cubic_report):
        """Test one report serialises as an object."""
        payload = json.loads(ReportService("json").render_tables([cubic_report]))
        assert payload["table"] == 4
        assert payload["cells"][0]["status"] == "match"

    def test_json_several(self, cubic_report, order_report):
        """Test several reports are wrapped in a list."""
        payload = json.loads(ReportService("json").render_tables([order_report, cubic_report]))
        assert [t["table"] for t in payload["tables"]] == [1, 4]

    def test_json_is_deterministic(self, cubic_report):
        """Test identical reports render byte-identically."""
        service = ReportService("json")
        assert service.render_tables([cubic_report]) == service.render_tables([cubic_report])

    def test_csv(self, cubic_report):
        """Test one row per cell under the fixed header."""
        lines = ReportService("csv").render_tables([cubic_report]).splitlines()
        assert lines[0] == ",".join(CELL_HEADERS)
        assert lines[1] == "4,3,3,3t^2+3t,3t^2+3t,match,"

    def test_markdown_list(self, cubic_report):
        """Test the cubic table renders as a list with a summary."""
        text = ReportService("md").render_tables([cubic_report])
        assert text.startswith("## Table 4 (n <= 5)")
        assert "| 3 | 3t^2+3t | 3t^2+3t | match |" in text
        assert (
            "Table 4: 1/1 match, 0 mismatch, 0 uncomputed in paper, 0 not in paper, 0 anomalies"
            in text
        )

    def test_markdown_grid(self, order_report):
        """Test the order table pivots n against d and flags mismatches."""
        text = ReportService("md").render_tables([order_report])
        assert "| n \\ d | 3 | 5 |" in text
        assert "| 5 | 1 (printed 2) | 1 |" in text

    def test_plain_notes(self, cubic_report):
        """Test notes follow the summary line."""
        report = cubic_report.model_copy(update={"notes": ["transcription conflict"]})
        text = ReportService("plain").render_tables([report])
        assert text.splitlines()[-1] == "transcription conflict"


class TestSingleResults:
    """Test suite for series, quotient and incidence output."""

    def test_series_plain(self):
        """Test plain output is just the rendered series."""
        result = SeriesResult(expression="delta(4,2)", series=[1, 4, 5])
        assert ReportService("plain").render_series(result) == "5t^2+4t+1"

    def test_quotient_with_prediction(self):
        """Test the difference row appears when a prediction exists."""
        result = QuotientResult(
            n=4,
            d=[2],
            algebra="exterior",
            quotient=[1, 4, 5],
            ideal=[0, 0, 1, 4, 1],
            annihilator=[0, 0, 5, 4, 1],
            predicted=[1, 4, 5],
            predicted_label="delta(n,d)",
            difference=[],
        )
        text = ReportService("plain").render_quotient(result)
        assert "predicted (delta(n,d))" in text
        assert text.splitlines()[-1].split() == ["difference", "0"]

    def test_incidence(self):
        """Test certificate rows render lowercase booleans."""
        certificate = FullRankCertificate(
            a=1, b=3, n=4, rows=4, cols=4, rank=4, expected=4, certified=True, prime=31991
        )
        text = ReportService("csv").render_incidence(IncidenceReport(certificates=[certificate]))
        assert text.splitlines()[1] == "1,3,4,true,4,4,4,4,true"


class TestConjectures:
    """Test suite for conjecture reports."""

    def _oddfive(self, rule_fit: dict[str, int]) -> ConjectureReport:
        verdict = ConjectureVerdict(
            family="oddfive",
            n=5,
            d=[5],
            predicted=[0, 0, 0, 0, 0, 1],
            computed=[0, 0, 0, 0, 0, 1],
            status=VerdictStatus.MATCH,
        )
        return ConjectureReport(
            family="oddfive", rule="table", verdicts=[verdict], rule_fit=rule_fit
        )

    def test_rule_fit_line(self):
        """Test the closing line names every rule that reproduces all cells."""
        text = ReportService("plain").render_conjectures(self._oddfive({"table": 1, "paper": 1}))
        last = text.splitlines()[-1]
        assert last == "exponent rules: table 1/1, paper 1/1; table and paper rule fits"

    def test_no_rule_fits(self):
        """Test a sweep no rule reproduces says so."""
        text = ReportService("md").render_conjectures(self._oddfive({"table": 0, "paper": 0}))
        assert text.endswith("; no rule fits")

    def test_other_families_have_no_fit_line(self):
        """Test families without exponent rules skip the line."""
        report = ConjectureReport(family="deg3")
        assert "exponent rules" not in ReportService("plain").render_conjectures(report)


class TestWriteOutput:
    """Test suite for report destinations."""

    def test_stdout(self, capsys):
        """Test no path prints the text."""
        write_output("hello", None)
        assert capsys.readouterr().out == "hello\n"

    def test_file(self, tmp_path):
        """Test parent directories are created."""
        path = tmp_path / "nested" / "report.txt"
        write_output("hello", path)
        assert path.read_text(encoding="utf-8") == "hello\n"
