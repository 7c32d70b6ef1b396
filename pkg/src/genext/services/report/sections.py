"""
Report section builders: value formatting and the three tabular layouts.
"""

import csv
import io
from collections.abc import Sequence

from ...algebra.series import IntSeries

type Row = Sequence[str]


def series_text(value: list[int] | int | None) -> str:
    """Human form of a cell value: a series, an order, or +infinity."""
    if value is None:
        return "inf"
    if isinstance(value, int):
        return str(value)
    return IntSeries(value).render()


def optional_text(value: list[int] | int | None, missing: str = "-") -> str:
    return missing if value is None else series_text(value)


class ReportSectionBuilder:
    """Lay out headers and rows as markdown, CSV or aligned plain text."""

    @staticmethod
    def markdown(headers: Row, rows: Sequence[Row]) -> str:
        lines = [
            "| " + " | ".join(headers) + " |",
            "|" + "|".join("---" for _ in headers) + "|",
        ]
        lines.extend("| " + " | ".join(row) + " |" for row in rows)
        return "\n".join(lines)

    @staticmethod
    def csv(headers: Row, rows: Sequence[Row]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")

    @staticmethod
    def plain(headers: Row, rows: Sequence[Row]) -> str:
        widths = [len(h) for h in headers]
        for row in rows:
            widths = [max(w, len(cell)) for w, cell in zip(widths, row, strict=True)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths, strict=True)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        lines.extend(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths, strict=True)).rstrip()
            for row in rows
        )
        return "\n".join(lines)

    @classmethod
    def layout(cls, fmt: str, headers: Row, rows: Sequence[Row]) -> str:
        match fmt:
            case "md":
                return cls.markdown(headers, rows)
            case "csv":
                return cls.csv(headers, rows)
            case _:
                return cls.plain(headers, rows)

    @staticmethod
    def grid(
        row_labels: Sequence[int],
        col_labels: Sequence[int],
        cells: dict[tuple[int, int], str],
        corner: str,
    ) -> tuple[list[str], list[list[str]]]:
        """Pivot (row, col) -> text into a grid with blank gaps."""
        headers = [corner, *(str(c) for c in col_labels)]
        rows = [
            [str(r), *(cells.get((r, c), "") for c in col_labels)] for r in row_labels
        ]
        return headers, rows
