"""Report rendering in plain text, markdown, CSV and JSON."""

from .generator import ReportService, write_output
from .sections import ReportSectionBuilder, series_text

__all__ = ["ReportSectionBuilder", "ReportService", "series_text", "write_output"]
