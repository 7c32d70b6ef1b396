"""
Pydantic models for run configuration and reported results.

Reports are dumped with ``model_dump(mode="json")``; nothing time- or
machine-dependent is stored, so identical runs produce identical files.
"""

from enum import StrEnum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import isprime

from .. import config

OutputFormat = Literal["md", "csv", "json", "plain"]

# =============================================================================
# RUN CONFIGURATION
# =============================================================================


class RunConfig(BaseModel):
    """Resolved settings of one CLI run (flag > environment > default)."""

    prime: int = Field(default=config.PRIME, description="Field characteristic")
    seed: int = Field(default=config.MASTER_SEED, ge=0, description="Master seed")
    trials: int = Field(default=config.TRIALS, description="Random specialisations per cell")
    workers: int = Field(default=config.WORKERS, description="Fan-out concurrency")
    output_format: OutputFormat = Field(default="plain", description="Report format")
    degree_cap: int = Field(default=config.DEGREE_CAP, description="Truncation degree")
    expected_dir: Path = Field(default=config.EXPECTED_DIR, description="Bundled tables")
    extended: bool = Field(default=False, description="Use the extended feasibility limit")

    model_config = ConfigDict(frozen=True)

    @field_validator("prime")
    @classmethod
    def _prime(cls, value: int) -> int:
        if value <= 2 or value >= 2**31 or not isprime(value):
            raise ValueError(f"prime must be an odd prime below 2^31, got {value}")
        return value

    @field_validator("trials", "workers")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be >= 1")
        return value

    @field_validator("degree_cap")
    @classmethod
    def _cap(cls, value: int) -> int:
        if value < 0:
            raise ValueError("degree cap must be >= 0")
        return value

    @property
    def matrix_limit(self) -> int:
        return config.EXTENDED_MAX_MATRIX_ENTRIES if self.extended else config.MAX_MATRIX_ENTRIES


# =============================================================================
# SINGLE COMPUTATIONS
# =============================================================================


class SeriesResult(BaseModel):
    """A series evaluated from an expression."""

    expression: str
    series: list[int] = Field(description="Ascending coefficients")


class QuotientResult(BaseModel):
    """Computed series of one ideal next to its predicted quotient."""

    n: int
    d: list[int]
    algebra: str
    form: str | None = Field(default=None, description="Explicit form, if not generic")
    quotient: list[int]
    ideal: list[int]
    annihilator: list[int] | None = Field(default=None, description="Only for one generator")
    predicted: list[int] | None = None
    predicted_label: str | None = Field(default=None, description="Which closed form")
    difference: list[int] | None = Field(default=None, description="quotient - predicted")


# =============================================================================
# TABLE REPRODUCTION
# =============================================================================


class CellStatus(StrEnum):
    MATCH = "match"
    MISMATCH = "mismatch"
    UNCOMPUTED_IN_PAPER = "uncomputed-in-paper"
    NOT_IN_PAPER = "not-in-paper"


class ExperimentCell(BaseModel):
    """
    One reproduced table entry.

    ``computed``/``expected`` are ascending coefficient lists, except for the
    order table where they are integers and ``None`` stands for +infinity.
    """

    table: int = Field(ge=1, le=5, description="Table id")
    n: int = Field(description="Number of variables")
    d: list[int] = Field(description="Generator degrees")
    computed: list[int] | int | None = Field(description="Engine value")
    expected: list[int] | int | None = Field(default=None, description="Printed value")
    status: CellStatus
    anomaly: str | None = Field(default=None, description="Ledger or containment violation")


class TableSummary(BaseModel):
    total: int = 0
    match: int = 0
    mismatch: int = 0
    uncomputed_in_paper: int = 0
    not_in_paper: int = 0
    anomalies: int = 0


class TableReport(BaseModel):
    """All cells of one table plus summary counts."""

    table: int
    max_n: int
    cells: list[ExperimentCell] = Field(default_factory=list)
    summary: TableSummary = Field(default_factory=TableSummary)
    notes: list[str] = Field(default_factory=list, description="Transcription conflicts")

    @property
    def failed(self) -> bool:
        return self.summary.mismatch > 0 or self.summary.anomalies > 0


def summarize(cells: list[ExperimentCell]) -> TableSummary:
    """Count cells by status."""
    return TableSummary(
        total=len(cells),
        match=sum(c.status is CellStatus.MATCH for c in cells),
        mismatch=sum(c.status is CellStatus.MISMATCH for c in cells),
        uncomputed_in_paper=sum(c.status is CellStatus.UNCOMPUTED_IN_PAPER for c in cells),
        not_in_paper=sum(c.status is CellStatus.NOT_IN_PAPER for c in cells),
        anomalies=sum(c.anomaly is not None for c in cells),
    )


# =============================================================================
# INCIDENCE MATRICES
# =============================================================================


class FullRankCertificate(BaseModel):
    """Rank of an incidence matrix mod p against min(rows, cols)."""

    a: int
    b: int
    n: int
    signed: bool = True
    rows: int
    cols: int
    rank: int
    expected: int = Field(description="min(rows, cols)")
    certified: bool
    prime: int


class SindepViolation(BaseModel):
    a_set: list[int]
    b_set: list[int]
    r: int
    n: int
    direct: int
    predicted: int


class SindepReport(BaseModel):
    rule: Literal["printed", "initial-segment"]
    exhaustive_max_n: int
    random_max_n: int
    checked: int = 0
    violation_count: int = 0
    n_independent: bool = True
    violations: list[SindepViolation] = Field(default_factory=list, description="First witnesses")


class NotZeroReport(BaseModel):
    max_n: int
    brute_max_n: int
    all_positive: bool
    recursion_matches_bruteforce: bool
    pairs_match_recursion: bool
    values: dict[str, int] = Field(default_factory=dict, description="'d,n' -> s_{d,n}")


class IncidenceReport(BaseModel):
    certificates: list[FullRankCertificate] = Field(default_factory=list)
    sindep: list[SindepReport] = Field(default_factory=list)
    notzero: NotZeroReport | None = None

    @property
    def failed(self) -> bool:
        failed_rank = any(not c.certified for c in self.certificates if (c.b - c.a) % 2 == 0)
        failed_lemma = any(
            r.violation_count for r in self.sindep if r.rule == "initial-segment"
        ) or (self.notzero is not None and not self.notzero.all_positive)
        return failed_rank or failed_lemma


# =============================================================================
# CONJECTURES
# =============================================================================


class VerdictStatus(StrEnum):
    MATCH = "match"
    MISMATCH = "mismatch"
    INCONSISTENT = "inconsistent"
    INFORMATIONAL = "informational"


class ConjectureVerdict(BaseModel):
    """Closed-form prediction against engine truth for one cell."""

    family: str
    n: int
    d: list[int]
    predicted: list[int] | None
    computed: list[int]
    status: VerdictStatus
    detail: str | None = None
    convergence_order: int | None = Field(default=None, description="t-adic distance")


class ConjectureReport(BaseModel):
    family: str
    rule: str | None = None
    algebra: str = "exterior"
    verdicts: list[ConjectureVerdict] = Field(default_factory=list)
    summary: dict[str, int] = Field(default_factory=dict)
    rule_fit: dict[str, int] = Field(
        default_factory=dict, description="Cells each exponent rule reproduces"
    )

    @property
    def fitting_rules(self) -> list[str]:
        """Exponent rules that reproduce every cell of the sweep."""
        return [rule for rule, hits in self.rule_fit.items() if hits == len(self.verdicts)]

    @property
    def failed(self) -> bool:
        return any(
            v.status in (VerdictStatus.MISMATCH, VerdictStatus.INCONSISTENT) for v in self.verdicts
        )
