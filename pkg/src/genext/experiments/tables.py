"""
Per-table cell computations.

Every cell is computed from the engine's generic series (maximal rank over
the configured trials) and checked against the rank-nullity ledger.
"""

import logging

from ..algebra.series import IntSeries
from ..config import PRIME
from ..exceptions import DegreeRangeError, TheoremHypothesisError
from ..services.closed_forms import AnticipatedAlgebra, anticipated_series, big_delta
from ..services.engine import (
    AlgebraKind,
    NumericalCharacter,
    PrincipalSeries,
    generic_quotient,
    principal_series,
)
from ..utils.metrics_utils import track_metrics
from .state import CellOutcome, CellTask

logger = logging.getLogger(__name__)

TWO_QUADRICS = (2, 2)


def ledger_anomaly(series: PrincipalSeries) -> str | None:
    """
    Check q = t^d a + (1+t)^n (1 - t^d) and, for odd d, a >= p and a >= Δ.

    Returns:
        Description of the first violation, or None
    """
    n, d = series.n, series.d
    binom = IntSeries.binom_pow(n)
    rhs = series.annihilator.shift(d) + binom - binom.shift(d)
    if series.quotient != rhs:
        return f"rank-nullity ledger fails at n={n}, d={d}"
    if d % 2:
        if not series.annihilator.geq(series.ideal):
            return f"a < p at n={n}, d={d}"
        if not series.annihilator.geq(big_delta(n, d)):
            return f"a < Delta at n={n}, d={d}"
    return None


def _odd_principal(
    n: int, d: int, seed: int, trials: int, prime: int
) -> PrincipalSeries:
    if d % 2 == 0:
        raise TheoremHypothesisError(f"odd-degree tables have no cell for even d={d}")
    if not 3 <= d <= n:
        raise DegreeRangeError(f"need 3 <= d <= n, got n={n}, d={d}")
    return principal_series(n, d, AlgebraKind.EXTERIOR, seed, trials, prime)


def order_of_difference(series: PrincipalSeries) -> int | None:
    """order(a - p); None stands for +infinity (a = p)."""
    difference = series.difference
    return None if difference.is_zero() else difference.order()


def excess_over_bound(series: PrincipalSeries) -> IntSeries:
    """a - max(p, Δ)."""
    return series.annihilator - series.ideal.coeff_max(big_delta(series.n, series.d))


def two_quadric_deviation(quotient: IntSeries, n: int) -> IntSeries:
    return quotient - anticipated_series(n, TWO_QUADRICS, AnticipatedAlgebra.EXTERIOR_EVEN)


def table1_cell(
    n: int, d: int, seed: int, trials: int = 1, prime: int = PRIME
) -> int | None:
    """order(a - p) for odd d."""
    return order_of_difference(_odd_principal(n, d, seed, trials, prime))


def table2_cell(
    n: int, d: int, seed: int, trials: int = 1, prime: int = PRIME
) -> IntSeries:
    """a - max(p, Δ) for odd d."""
    return excess_over_bound(_odd_principal(n, d, seed, trials, prime))


def table3_cell(
    n_minus_d: int, d: int, seed: int, trials: int = 1, prime: int = PRIME
) -> IntSeries:
    """Table 2 re-indexed by n - d."""
    return table2_cell(d + n_minus_d, d, seed, trials, prime)


def table4_cell(n: int, seed: int, trials: int = 1, prime: int = PRIME) -> IntSeries:
    """a_{n,3} - p_{n,3}."""
    return _odd_principal(n, 3, seed, trials, prime).difference


def _two_quadric_quotient(n: int, seed: int, trials: int, prime: int) -> IntSeries:
    if n < 2:
        raise DegreeRangeError(f"two quadrics need n >= 2, got {n}")
    return generic_quotient(
        n, NumericalCharacter(TWO_QUADRICS), AlgebraKind.EXTERIOR, seed, trials, prime
    )


def table5_cell(n: int, seed: int, trials: int = 1, prime: int = PRIME) -> IntSeries:
    """Quotient by two generic quadrics minus ⟨(1+t)^n (1-t^2)^2⟩."""
    return two_quadric_deviation(_two_quadric_quotient(n, seed, trials, prime), n)


@track_metrics("table_cell")
def compute_cell(task: CellTask, seed: int, trials: int, prime: int) -> CellOutcome:
    """Dispatch one task to its table and run the ledger checks."""
    table, n, degrees = task["table"], task["n"], task["degrees"]
    if table == 5:
        quotient = _two_quadric_quotient(n, seed, trials, prime)
        anomaly = None if quotient.geq(IntSeries()) else f"negative quotient at n={n}"
        return {"computed": two_quadric_deviation(quotient, n).to_list(), "anomaly": anomaly}

    d = degrees[0]
    series = _odd_principal(n, d, seed, trials, prime)
    anomaly = ledger_anomaly(series)
    computed: list[int] | int | None
    if table == 1:
        computed = order_of_difference(series)
    elif table == 4:
        computed = series.difference.to_list()
    else:
        excess = excess_over_bound(series)
        if not excess.geq(IntSeries()) and anomaly is None:
            anomaly = f"a - max(p, Delta) has a negative coefficient at n={n}, d={d}"
        computed = excess.to_list()
    if anomaly:
        logger.error("❌ Table %s cell n=%s, d=%s: %s", table, n, d, anomaly)
    return {"computed": computed, "anomaly": anomaly}
