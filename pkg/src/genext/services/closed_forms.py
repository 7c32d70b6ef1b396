"""
Closed-form and conjectural Hilbert series.

Nothing here touches a matrix: every function is exact integer arithmetic on
IntSeries, so the engine can be checked against it cell by cell.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from enum import StrEnum

from ..algebra.combinatorics import binomial
from ..algebra.series import IntSeries
from ..config import DEGREE_CAP
from ..exceptions import (
    ConjectureInconsistentError,
    DegreeRangeError,
    TheoremHypothesisError,
)

logger = logging.getLogger(__name__)


class ExponentRule(StrEnum):
    """Exponent of the correction term t^e(v) in odd degrees d >= 5."""

    TABLE = "table"  # e(v) = v(v+1)/2
    PAPER = "paper"  # e(v) = v(v-1)/2


class AnticipatedAlgebra(StrEnum):
    EXTERIOR_EVEN = "exterior-even"
    SQUAREFREE = "squarefree"
    SYMMETRIC = "symmetric"


def _check_degree(n: int, d: int) -> None:
    if not 1 <= d <= n:
        raise DegreeRangeError(f"need 1 <= d <= n, got n={n}, d={d}")


def _one_minus_t(d: int) -> IntSeries:
    return IntSeries.one() - IntSeries.monomial(d)


def _one_plus_t(d: int) -> IntSeries:
    return IntSeries.one() + IntSeries.monomial(d)


# ----------------------------------------------------------------------
# δ, Δ and the even-degree answers
# ----------------------------------------------------------------------


def delta(n: int, d: int) -> IntSeries:
    """δ_{n,d} = ⟨(1+t)^n (1-t^d)⟩."""
    _check_degree(n, d)
    return (IntSeries.binom_pow(n) * _one_minus_t(d)).head_truncate()


def big_delta(n: int, d: int) -> IntSeries:
    """Δ_{n,d} = Σ_v max(0, C(n,v) - C(n,v+d)) t^v, the nullity lower bound."""
    _check_degree(n, d)
    return IntSeries(max(0, binomial(n, v) - binomial(n, v + d)) for v in range(n + 1))


def _require_even(d: int) -> None:
    if d % 2:
        raise TheoremHypothesisError(f"theorem hypothesis violated: degree {d} is odd")


def predicted_quotient_even(n: int, d: int) -> IntSeries:
    """Quotient of a generic even-degree exterior form: δ_{n,d}."""
    _require_even(d)
    return delta(n, d)


def predicted_annihilator_even(n: int, d: int) -> IntSeries:
    """Annihilator of a generic even-degree exterior form: Δ_{n,d}."""
    _require_even(d)
    return big_delta(n, d)


# ----------------------------------------------------------------------
# odd degrees
# ----------------------------------------------------------------------


def tau(n: int, d: int, rule: ExponentRule = ExponentRule.TABLE) -> IntSeries:
    """
    Correction term for odd d >= 5.

    Nonzero exactly when n - d = -1 + 5v/2 + v^2/2 for some v > 0 and
    d = 5 + 2vs for some s >= 0; it is then t^e(v) with e chosen by ``rule``.

    Raises:
        TheoremHypothesisError: If d is even or d < 5
    """
    if d % 2 == 0 or d < 5:
        raise TheoremHypothesisError(f"theorem hypothesis violated: tau needs odd d >= 5, got {d}")
    target = 2 * (n - d + 1)
    v = 1
    while v * v + 5 * v <= target:
        if v * v + 5 * v == target and (d - 5) % (2 * v) == 0:
            exponent = v * (v + 1) // 2 if rule is ExponentRule.TABLE else v * (v - 1) // 2
            return IntSeries.monomial(exponent)
        v += 1
    return IntSeries()


def solve_p_odd(n: int, d: int, correction: IntSeries) -> IntSeries:
    """
    Predicted ideal series p_{n,d} from the degree-by-degree recursion.

    p_l = C(n,l-d) - b_{l-d} - max(p_{l-d}, C(n,l-d) - C(n,l)) for l >= d,
    p_l = 0 below d, where b are the coefficients of ``correction``.

    Raises:
        TheoremHypothesisError: If d is even
        ConjectureInconsistentError: If a coefficient turns negative or the
            boundary values p_d = p_n = 1 are not reproduced
    """
    _check_degree(n, d)
    if d % 2 == 0:
        raise TheoremHypothesisError(f"theorem hypothesis violated: degree {d} is even")
    p = [0] * (n + 1)
    for ell in range(d, n + 1):
        m = ell - d
        p[ell] = binomial(n, m) - correction[m] - max(p[m], binomial(n, m) - binomial(n, ell))
    if min(p) < 0 or p[d] != 1 or p[n] != 1:
        logger.debug("⚠️ Recursion at (%s,%s) produced %s", n, d, p)
        raise ConjectureInconsistentError(f"conjecture inconsistent at ({n},{d})")
    return IntSeries(p)


@dataclass(frozen=True)
class OddPrediction:
    """Predicted series for a generic form of odd degree."""

    n: int
    d: int
    tau: IntSeries
    predicted_p: IntSeries
    predicted_a: IntSeries
    predicted_q: IntSeries


def odd_prediction(n: int, d: int, rule: ExponentRule = ExponentRule.TABLE) -> OddPrediction:
    """
    Predicted p, a and q for odd d.

    d = 1 is exact: a linear form leaves (1+t)^(n-1). d = 3 belongs to the
    cubic family (see :func:`cubic_quotient`).
    """
    _check_degree(n, d)
    if d % 2 == 0:
        raise TheoremHypothesisError(f"theorem hypothesis violated: degree {d} is even")
    if d == 3:
        raise TheoremHypothesisError("cubic forms are predicted by the cubic family")
    if d == 1:
        correction = IntSeries()
        p = IntSeries.monomial(1) * IntSeries.binom_pow(n - 1)
    else:
        correction = tau(n, d, rule)
        p = solve_p_odd(n, d, correction)
    a = correction + p.coeff_max(big_delta(n, d))
    return OddPrediction(
        n=n,
        d=d,
        tau=correction,
        predicted_p=p,
        predicted_a=a,
        predicted_q=IntSeries.binom_pow(n) - p,
    )


def predicted_quotient_odd(n: int, d: int, rule: ExponentRule = ExponentRule.TABLE) -> IntSeries:
    return odd_prediction(n, d, rule).predicted_q


# ----------------------------------------------------------------------
# cubic family
# ----------------------------------------------------------------------


def _three_t(k: int) -> IntSeries:
    """(3t)^k."""
    return IntSeries.monomial(k, 3**k)


def cubic_L(n: int, c1: int | None = None, c2: int | None = None) -> IntSeries:
    """
    a_{n,3} - p_{n,3} for a generic cubic, split by n mod 4 (l = n // 4).

    n ≡ 1 (mod 4) needs the constants (c1, c2), which are data, not formula.

    Raises:
        DegreeRangeError: If n < 3
        ConjectureInconsistentError: If n ≡ 1 (mod 4) and a constant is missing
    """
    if n < 3:
        raise DegreeRangeError(f"cubic family needs n >= 3, got {n}")
    ell = n // 4
    one_t = IntSeries.binom_pow(1)
    match n % 4:
        case 0:
            return _three_t(2 * ell - 1) * one_t * one_t
        case 2:
            return _three_t(2 * ell) * one_t * one_t
        case 3:
            return _three_t(2 * ell + 1) * one_t
        case _:
            if c1 is None or c2 is None:
                raise ConjectureInconsistentError(f"missing cubic constants for n={n}")
            middle = IntSeries([1, 3**c2 - 1, 1])
            return IntSeries.monomial(2 * ell - 1, c1) * one_t * middle


def cubic_quotient(n: int, c1: int | None = None, c2: int | None = None) -> IntSeries:
    """
    Quotient series of a generic cubic: (t^3 L + (1+t)^n) / (1 + t^3).

    Raises:
        ConjectureInconsistentError: If the division leaves a remainder
    """
    numerator = cubic_L(n, c1, c2).shift(3) + IntSeries.binom_pow(n)
    quotient, remainder = numerator.divmod(_one_plus_t(3))
    if not remainder.is_zero():
        raise ConjectureInconsistentError(f"conjecture fails at {n}")
    return quotient


def cubic_constants_for(
    n: int, constants: Mapping[int, tuple[int, int]]
) -> tuple[int | None, int | None]:
    """Look up (c1, c2) for n ≡ 1 (mod 4); other residues need none."""
    if n % 4 != 1:
        return None, None
    return constants.get(n, (None, None))


# ----------------------------------------------------------------------
# non-principal ideals and limits
# ----------------------------------------------------------------------


def _product_one_minus(degrees: Iterable[int]) -> IntSeries:
    out = IntSeries.one()
    for d in degrees:
        out = out * _one_minus_t(d)
    return out


def anticipated_series(
    n: int,
    degrees: Iterable[int],
    algebra: AnticipatedAlgebra,
    cap: int = DEGREE_CAP,
) -> IntSeries:
    """
    The "expected" quotient series of a generic ideal with the given degrees.

    ⟨(1+t)^n ∏(1-t^d_i)⟩ for the exterior (even degrees) and square-free
    algebras, ⟨(1-t)^(-n) ∏(1-t^d_i)⟩ truncated at ``cap`` for the symmetric one.
    """
    degrees = list(degrees)
    if not degrees:
        raise DegreeRangeError("numerical character must be nonempty")
    product = _product_one_minus(degrees)
    if algebra is AnticipatedAlgebra.SYMMETRIC:
        # (1-t)^(-n) = Σ C(n-1+k, k) t^k
        base = IntSeries(binomial(n - 1 + k, k) for k in range(cap + 1))
        return base.mul_trunc(product, cap).head_truncate()
    return (IntSeries.binom_pow(n) * product).head_truncate()


def limit_product(degrees: Iterable[int], cap: int = DEGREE_CAP) -> IntSeries:
    """
    ∏ (1 - (-1)^d t^d)^((-1)^d) to degree ``cap``.

    Even degrees contribute (1 - t^d), odd degrees 1 / (1 + t^d).
    """
    out = IntSeries.one()
    for d in degrees:
        factor = _one_minus_t(d) if d % 2 == 0 else _one_plus_t(d).inverse(cap)
        out = out.mul_trunc(factor, cap)
    return out


def convergence_order(quotient: IntSeries, n: int, d: int) -> int | None:
    """
    order(q · (1 + t^d) - (1+t)^n); None when the difference vanishes.

    Growing values along n mean t-adic convergence of q to (1+t)^n / (1+t^d).
    """
    difference = quotient * _one_plus_t(d) - IntSeries.binom_pow(n)
    return None if difference.is_zero() else difference.order()


def limit_distance(quotient: IntSeries, n: int, degrees: Iterable[int], cap: int) -> int | None:
    """order((1+t)^(-n) · q - limit product) below ``cap``; None if they agree to ``cap``."""
    scaled = IntSeries.binom_pow(n).inverse(cap).mul_trunc(quotient, cap)
    difference = scaled - limit_product(degrees, cap)
    return None if difference.is_zero() else difference.order()
