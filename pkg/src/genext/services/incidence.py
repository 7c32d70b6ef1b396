"""
Signed incidence matrices of subsets and the sign sums behind their rank.

Rows are indexed by the b-subsets B of [n] and columns by the a-subsets A, both
in colex order; the entry is sigma(A, B). For b - a even the matrix has full
rank, which is certified by one rank computation mod p (rank can only drop
under reduction, and all entries are ±1 or 0).
"""

import logging
import random
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from ..algebra.combinatorics import (
    Monomial,
    binomial,
    full_mask,
    indices_from_mask,
    iter_subsets,
    sigma,
    subset_index,
    subsets,
    submasks,
)
from ..algebra.linalg import FieldMatrix, PrimeField
from ..config import PRIME
from ..exceptions import DegreeRangeError, TheoremHypothesisError
from ..models.results import (
    FullRankCertificate,
    NotZeroReport,
    SindepReport,
    SindepViolation,
)
from ..utils.fanout import ParallelSweep
from ..utils.metrics_utils import track_metrics

logger = logging.getLogger(__name__)

SindepRule = Literal["printed", "initial-segment"]

# Witnesses kept per report
MAX_WITNESSES = 20

# (A, B, r, n)
type Case = tuple[Monomial, Monomial, int, int]


@dataclass(frozen=True)
class SignedIncidence:
    """M_{a,b,n} as an integer matrix."""

    a: int
    b: int
    n: int
    entries: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return int(self.entries.shape[0]), int(self.entries.shape[1])

    def to_field_matrix(self, prime: int = PRIME) -> FieldMatrix:
        return FieldMatrix(PrimeField(prime), self.entries)


def _check_bounds(a: int, b: int, n: int) -> None:
    if not 0 < a < b <= n:
        raise DegreeRangeError(f"need 0 < a < b <= n, got a={a}, b={b}, n={n}")


def build_signed(a: int, b: int, n: int) -> SignedIncidence:
    """
    Build M_{a,b,n}: entry (B, A) = sigma(A, B).

    Raises:
        DegreeRangeError: Unless 0 < a < b <= n
    """
    _check_bounds(a, b, n)
    rows = subsets(n, b)
    col_index = subset_index(n, a)
    entries = np.zeros((len(rows), len(col_index)), dtype=np.int64)
    for i, row in enumerate(rows):
        for col in submasks(row, a):
            entries[i, col_index[col]] = sigma(col, row)
    return SignedIncidence(a=a, b=b, n=n, entries=entries)


def build_unsigned(r: int, d: int, n: int) -> np.ndarray:
    """Inclusion matrix of r-subsets in (r+d)-subsets."""
    rows = subsets(n, r + d)
    col_index = subset_index(n, r)
    entries = np.zeros((len(rows), len(col_index)), dtype=np.int64)
    for i, row in enumerate(rows):
        for col in submasks(row, r):
            entries[i, col_index[col]] = 1
    return entries


# ----------------------------------------------------------------------
# sign sums
# ----------------------------------------------------------------------


def s_r(a_set: Monomial, b_set: Monomial, r: int, n: int) -> int:
    """
    Σ sigma(C, B) over the r-sets C with A ⊆ C ⊆ B.

    Raises:
        DegreeRangeError: Unless |A| <= r < |B| and both sets lie in [n]
    """
    a, b = a_set.bit_count(), b_set.bit_count()
    if not a <= r < b:
        raise DegreeRangeError(f"need |A| <= r < |B|, got |A|={a}, r={r}, |B|={b}")
    if (a_set | b_set) >> n:
        raise DegreeRangeError(f"sets exceed [{n}]")
    if a_set & ~b_set:
        return 0
    return sum(sigma(a_set | extra, b_set) for extra in submasks(b_set & ~a_set, r - a))


@lru_cache(maxsize=None)
def _s_dn(d: int, m: int) -> int:
    # split on the smallest element i of R: the i-1 smaller outsiders each
    # precede all d elements of R
    if d == 0:
        return 1
    if d > m:
        return 0
    return sum((-1) ** ((i - 1) * d) * _s_dn(d - 1, m - i) for i in range(1, m + 1))


def s_dn(d: int, n: int) -> int:
    """s_{d,n} = Σ_{|R| = d} sigma(R, [n])."""
    if not 0 <= d <= n:
        raise DegreeRangeError(f"need 0 <= d <= n, got d={d}, n={n}")
    return _s_dn(d, n)


@lru_cache(maxsize=None)
def _s_pairs(d: int, m: int) -> int:
    if d == 0:
        return 1
    return sum(_s_pairs(d - 2, m - j) for j in range(2, m + 1, 2) if d - 2 <= m - j)


def s_dn_pairs(d: int, n: int) -> int:
    """s_{d,n} for even d by splitting on the two smallest elements of R."""
    if not 0 <= d <= n:
        raise DegreeRangeError(f"need 0 <= d <= n, got d={d}, n={n}")
    if d % 2:
        raise TheoremHypothesisError(f"theorem hypothesis violated: degree {d} is odd")
    return _s_pairs(d, n)


def s_dn_bruteforce(d: int, n: int) -> int:
    """Direct sum over all d-subsets; test oracle."""
    full = full_mask(n)
    return sum(sigma(r, full) for r in iter_subsets(n, d))


# ----------------------------------------------------------------------
# lemma checks
# ----------------------------------------------------------------------


def _predicted_sum(a: int, b: int, r: int, rule: SindepRule) -> int:
    if rule == "printed":
        sign = (-1) ** (b - r)
    else:
        sign = (-1) ** ((r - a) * (b - r))
    return sign * _s_dn(b - r, b - a)


def _initial_segment(b_set: Monomial, a: int) -> Monomial:
    out = 0
    for i in indices_from_mask(b_set)[:a]:
        out |= 1 << (i - 1)
    return out


def _exhaustive_cases(max_n: int, rule: SindepRule) -> Iterator[Case]:
    for n in range(1, max_n + 1):
        for b_set in range(1, 1 << n):
            if not b_set >> (n - 1):
                continue  # counted at a smaller n
            b = b_set.bit_count()
            if rule == "initial-segment":
                choices: Iterator[Monomial] = (_initial_segment(b_set, a) for a in range(b))
            else:
                choices = (m for a in range(b) for m in submasks(b_set, a))
            for a_set in choices:
                for r in range(a_set.bit_count(), b):
                    yield a_set, b_set, r, n


def _random_case(rng: random.Random, max_n: int, rule: SindepRule) -> Case:
    n = rng.randint(1, max_n)
    b_set = rng.randrange(1, 1 << n)
    b = b_set.bit_count()
    a = rng.randrange(b)
    if rule == "initial-segment":
        a_set = _initial_segment(b_set, a)
    else:
        # any a-set of [n], inside B or not
        a_set = 0
        for i in rng.sample(range(n), a):
            a_set |= 1 << i
    r = rng.randint(a, b - 1)
    return a_set, b_set, r, n


@track_metrics("verify_sindep")
def verify_sindep(
    max_n: int,
    rule: SindepRule = "printed",
    random_cases: int = 10_000,
    random_max_n: int = 12,
    seed: int = 0,
) -> SindepReport:
    """
    Check the closed form of s_r(A, B, n) exhaustively and on random cases.

    ``printed`` predicts (-1)^(b-r) s_{b-r,b-a} for every A ⊆ B;
    ``initial-segment`` predicts (-1)^((r-a)(b-r)) s_{b-r,b-a} when A is the
    set of the a smallest elements of B. Both predict 0 when A ⊄ B.
    Violations are collected, never raised.
    """
    if max_n < 2:
        raise DegreeRangeError(f"max_n must be >= 2, got {max_n}")
    report = SindepReport(rule=rule, exhaustive_max_n=max_n, random_max_n=random_max_n)
    rng = random.Random(seed)

    def check(a_set: Monomial, b_set: Monomial, r: int, n: int) -> None:
        direct = s_r(a_set, b_set, r, n)
        a, b = a_set.bit_count(), b_set.bit_count()
        predicted = 0 if a_set & ~b_set else _predicted_sum(a, b, r, rule)
        report.checked += 1
        if direct != predicted:
            report.violation_count += 1
            if len(report.violations) < MAX_WITNESSES:
                report.violations.append(
                    SindepViolation(
                        a_set=indices_from_mask(a_set),
                        b_set=indices_from_mask(b_set),
                        r=r,
                        n=n,
                        direct=direct,
                        predicted=predicted,
                    )
                )

    for case in _exhaustive_cases(max_n, rule):
        check(*case)
    for _ in range(random_cases):
        a_set, b_set, r, n = _random_case(rng, random_max_n, rule)
        check(a_set, b_set, r, n)
        if n < 62 and s_r(a_set, b_set, r, n + 1) != s_r(a_set, b_set, r, n):
            report.n_independent = False

    if report.violation_count:
        logger.warning(
            "⚠️ sindep (%s rule): %s of %s cases violate the closed form",
            rule,
            report.violation_count,
            report.checked,
        )
    else:
        logger.info("ℹ️ sindep (%s rule): %s cases, no violations", rule, report.checked)
    return report


def verify_notzero(max_n: int = 18, brute_max_n: int = 12) -> NotZeroReport:
    """s_{d,n} > 0 for even 0 < d <= n <= max_n; fast paths against brute force."""
    values: dict[str, int] = {}
    all_positive = True
    brute_ok = True
    pairs_ok = True
    for n in range(1, max_n + 1):
        for d in range(2, n + 1, 2):
            value = s_dn(d, n)
            values[f"{d},{n}"] = value
            all_positive &= value > 0
            pairs_ok &= s_dn_pairs(d, n) == value
        if n <= brute_max_n:
            brute_ok &= all(s_dn(d, n) == s_dn_bruteforce(d, n) for d in range(n + 1))
    return NotZeroReport(
        max_n=max_n,
        brute_max_n=brute_max_n,
        all_positive=all_positive,
        recursion_matches_bruteforce=brute_ok,
        pairs_match_recursion=pairs_ok,
        values=values,
    )


# ----------------------------------------------------------------------
# rank certificates
# ----------------------------------------------------------------------


@track_metrics("incidence_rank")
def incidence_rank(a: int, b: int, n: int, prime: int = PRIME) -> int:
    """Rank of M_{a,b,n} mod p for any parity of b - a (no claim attached)."""
    return build_signed(a, b, n).to_field_matrix(prime).rank(consume=True)


def rank_certificate(a: int, b: int, n: int, prime: int = PRIME) -> FullRankCertificate:
    """Rank of M_{a,b,n} mod p against min(rows, cols), for any parity of b - a."""
    _check_bounds(a, b, n)
    rows, cols = binomial(n, b), binomial(n, a)
    rank = incidence_rank(a, b, n, prime)
    expected = min(rows, cols)
    return FullRankCertificate(
        a=a,
        b=b,
        n=n,
        rows=rows,
        cols=cols,
        rank=rank,
        expected=expected,
        certified=rank == expected,
        prime=prime,
    )


def verify_fullrank(a: int, b: int, n: int, prime: int = PRIME) -> FullRankCertificate:
    """
    Certify that M_{a,b,n} has full rank over the rationals.

    Raises:
        DegreeRangeError: Unless 0 < a < b <= n
        TheoremHypothesisError: If b - a is odd
    """
    _check_bounds(a, b, n)
    if (b - a) % 2:
        raise TheoremHypothesisError(
            f"theorem hypothesis violated: b - a = {b - a} is odd, full rank is only "
            "claimed for even differences"
        )
    return rank_certificate(a, b, n, prime)


def verify_unsigned_fullrank(r: int, d: int, n: int, prime: int = PRIME) -> FullRankCertificate:
    """Full rank of the 0/1 inclusion matrix of r-subsets in (r+d)-subsets."""
    if r < 0 or d < 1 or r + d > n:
        raise DegreeRangeError(f"need r >= 0, d >= 1, r + d <= n, got r={r}, d={d}, n={n}")
    entries = build_unsigned(r, d, n)
    rank = FieldMatrix(PrimeField(prime), entries).rank(consume=True)
    rows, cols = entries.shape
    expected = min(rows, cols)
    return FullRankCertificate(
        a=r,
        b=r + d,
        n=n,
        signed=False,
        rows=rows,
        cols=cols,
        rank=rank,
        expected=expected,
        certified=rank == expected,
        prime=prime,
    )


def fullrank_sweep(max_n: int, prime: int = PRIME, workers: int = 1) -> list[FullRankCertificate]:
    """Certify every 0 < a < b <= n <= max_n with b - a even."""
    cells = [
        (a, b, n)
        for n in range(2, max_n + 1)
        for a in range(1, n)
        for b in range(a + 2, n + 1, 2)
    ]
    sweep: ParallelSweep[tuple[int, int, int], FullRankCertificate] = ParallelSweep(
        lambda cell: verify_fullrank(*cell, prime=prime), name="fullrank"
    )
    certificates = sweep.run(cells, workers)
    failures = [c for c in certificates if not c.certified]
    if failures:
        logger.error("❌ %s incidence matrices are not of full rank mod %s", len(failures), prime)
    else:
        logger.info("ℹ️ %s incidence matrices certified up to n=%s", len(certificates), max_n)
    return certificates
