"""
Payloads passed through the table fan-out.

Each task is independent; the runner sorts outcomes back into task order.
"""

from typing import TypedDict


class CellTask(TypedDict):
    """One table cell to compute."""

    table: int
    n: int
    degrees: tuple[int, ...]


class CellOutcome(TypedDict):
    """Engine value of a cell plus any ledger or containment anomaly."""

    computed: list[int] | int | None
    anomaly: str | None
