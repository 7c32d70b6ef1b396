"""
Tests for the closed-form and conjectural series.
"""

import pytest

from src.genext.algebra.series import IntSeries
from src.genext.exceptions import (
    ConjectureInconsistentError,
    DegreeRangeError,
    TheoremHypothesisError,
)
from src.genext.experiments.expected import load_cubic_constants
from src.genext.services.closed_forms import (
    AnticipatedAlgebra,
    ExponentRule,
    anticipated_series,
    big_delta,
    convergence_order,
    cubic_constants_for,
    cubic_L,
    cubic_quotient,
    delta,
    limit_distance,
    limit_product,
    odd_prediction,
    predicted_annihilator_even,
    predicted_quotient_even,
    solve_p_odd,
    tau,
)
from src.genext.services.engine import AlgebraKind, principal_series

EXTERIOR = AlgebraKind.EXTERIOR


def s(*coeffs: int) -> IntSeries:
    return IntSeries(coeffs)


class TestDeltas:
    """Test suite for δ and Δ."""

    def test_delta(self):
        """Test head truncations of (1+t)^n (1-t^d)."""
        assert delta(4, 2) == s(1, 4, 5)
        assert delta(3, 3) == s(1, 3, 3)
        assert delta(5, 2) == s(1, 5, 9, 5)

    def test_big_delta(self):
        """Test the annihilator lower bound."""
        assert big_delta(4, 2) == s(0, 0, 5, 4, 1)
        assert big_delta(2, 2) == s(0, 2, 1)
        assert big_delta(3, 3) == s(0, 3, 3, 1)

    def test_degree_range(self):
        """Test d outside 1..n raises."""
        with pytest.raises(DegreeRangeError):
            delta(3, 4)

    def test_even_predictions(self):
        """Test the even-degree answers are δ and Δ."""
        expected = (IntSeries.binom_pow(6) * s(1, 0, -1)).head_truncate()
        assert predicted_quotient_even(6, 2) == expected == s(1, 6, 14, 14)
        assert predicted_annihilator_even(4, 2) == s(0, 0, 5, 4, 1)

    def test_even_predictions_reject_odd(self):
        """Test odd d violates the hypothesis."""
        with pytest.raises(TheoremHypothesisError):
            predicted_quotient_even(5, 3)
        with pytest.raises(TheoremHypothesisError):
            predicted_annihilator_even(5, 3)


class TestOddDegrees:
    """Test suite for the correction term and the recursion."""

    def test_tau_table_rule(self):
        """Test the correction term under the table exponents."""
        assert tau(7, 5) == s(0, 1)
        assert tau(13, 7) == IntSeries()
        assert tau(16, 5) == IntSeries.monomial(6)
        assert tau(9, 5) == IntSeries()

    def test_tau_paper_rule(self):
        """Test the alternative exponent v(v-1)/2."""
        assert tau(7, 5, ExponentRule.PAPER) == s(1)
        assert tau(16, 5, ExponentRule.PAPER) == IntSeries.monomial(3)

    def test_tau_hypothesis(self):
        """Test d = 3 and even d are refused."""
        with pytest.raises(TheoremHypothesisError):
            tau(8, 3)
        with pytest.raises(TheoremHypothesisError):
            tau(8, 6)

    def test_solve_without_correction(self):
        """Test the recursion unrolled by hand at (8,5)."""
        assert solve_p_odd(8, 5, IntSeries()) == s(0, 0, 0, 0, 0, 1, 8, 8, 1)
        assert solve_p_odd(5, 5, IntSeries()) == IntSeries.monomial(5)

    def test_solve_with_correction(self):
        """Test the recursion with τ = t at (7,5)."""
        assert solve_p_odd(7, 5, s(0, 1)) == s(0, 0, 0, 0, 0, 1, 6, 1)

    def test_paper_rule_is_inconsistent_at_v_one(self):
        """Test τ = 1 zeroes p_d, which the recursion reports."""
        with pytest.raises(ConjectureInconsistentError, match=r"inconsistent at \(7,5\)"):
            odd_prediction(7, 5, ExponentRule.PAPER)

    def test_odd_prediction_identities(self):
        """Test a = τ + max(p, Δ) and q = (1+t)^n - p."""
        prediction = odd_prediction(7, 5)
        assert prediction.predicted_p == s(0, 0, 0, 0, 0, 1, 6, 1)
        assert prediction.predicted_a == s(0, 1, 20, 35, 35, 21, 7, 1)
        assert prediction.predicted_q == IntSeries.binom_pow(7) - prediction.predicted_p

    def test_linear_form(self):
        """Test d = 1 leaves (1+t)^(n-1)."""
        assert odd_prediction(4, 1).predicted_q == IntSeries.binom_pow(3)

    def test_cubic_handled_elsewhere(self):
        """Test d = 3 is routed to the cubic family."""
        with pytest.raises(TheoremHypothesisError):
            odd_prediction(6, 3)


class TestCubicFamily:
    """Test suite for the n mod 4 cubic family."""

    def test_L_by_residue(self):
        """Test L_n for each residue class."""
        assert cubic_L(3) == s(0, 3, 3)
        assert cubic_L(4) == s(0, 3, 6, 3)
        assert cubic_L(6) == 9 * s(0, 0, 1, 2, 1)
        assert cubic_L(5, 1, 2) == s(0, 1, 9, 9, 1)

    def test_L_thirteen(self):
        """Test the middle factor t^2 + (3^c2 - 1) t + 1."""
        expected = IntSeries.monomial(5) * s(1, 1) * s(1, 728, 1)
        assert cubic_L(13, 1, 6) == expected

    def test_L_needs_constants(self):
        """Test n ≡ 1 (mod 4) without constants."""
        with pytest.raises(ConjectureInconsistentError, match="missing cubic constants"):
            cubic_L(9)

    def test_L_small_n(self):
        """Test n < 3 is out of range."""
        with pytest.raises(DegreeRangeError):
            cubic_L(2)

    def test_quotient(self):
        """Test exact division by 1 + t^3."""
        assert cubic_quotient(3) == s(1, 3, 3)
        assert cubic_quotient(4) == s(1, 4, 6, 3)

    def test_quotient_remainder(self):
        """Test wrong constants leave a remainder."""
        with pytest.raises(ConjectureInconsistentError, match="conjecture fails at 5"):
            cubic_quotient(5, 1, 3)


class TestNonPrincipal:
    """Test suite for anticipated series and limits."""

    def test_anticipated(self):
        """Test anticipated series in the three algebras."""
        assert anticipated_series(5, (2, 2), AnticipatedAlgebra.EXTERIOR_EVEN) == s(1, 5, 8)
        assert anticipated_series(3, (1,), AnticipatedAlgebra.SQUAREFREE) == s(1, 2)
        assert anticipated_series(2, (2,), AnticipatedAlgebra.SYMMETRIC, cap=4) == s(1, 2, 2, 2, 2)

    def test_limit_product(self):
        """Test even factors stay, odd factors invert."""
        assert limit_product((2,), 6) == s(1, 0, -1)
        assert limit_product((3,), 9) == s(1, 0, 0, -1, 0, 0, 1, 0, 0, -1)
        assert limit_product((2, 3), 5) == s(1, 0, -1, -1, 0, 1)

    def test_convergence_order(self):
        """Test the t-adic distance of q(1+t^d) from (1+t)^n."""
        assert convergence_order(s(1, 4, 6, 3), 4, 3) == 4
        assert convergence_order(s(1, 3, 3), 3, 3) == 4
        assert convergence_order(s(1, 2, 1), 3, 1) is None

    def test_limit_distance(self):
        """Test an exact match to the cap reports None."""
        q = s(1, 4, 5)
        # (1+t)^(-4) (1+4t+5t^2) = 1 - t^2 + 5t^4 + O(t^5)
        assert limit_distance(q, 4, (2,), 2) is None
        assert limit_distance(q, 4, (2,), 4) == 4


def ordered(order: int | None) -> float:
    return float("inf") if order is None else order


class TestEngineAgreement:
    """Test suite for closed forms against computed series."""

    def _check_odd(self, max_n, run_config):
        for d in (5, 7, 9):
            for n in range(d, max_n + 1):
                engine = principal_series(
                    n, d, EXTERIOR, run_config.seed, run_config.trials, run_config.prime
                )
                assert odd_prediction(n, d).predicted_p == engine.ideal, (n, d)

    def _check_cubics(self, max_n, run_config):
        constants = load_cubic_constants(run_config.expected_dir)
        for n in range(3, max_n + 1):
            engine = principal_series(
                n, 3, EXTERIOR, run_config.seed, run_config.trials, run_config.prime
            )
            assert cubic_quotient(n, *cubic_constants_for(n, constants)) == engine.quotient, n

    def _check_convergence(self, max_n, run_config):
        for d in (3, 5):
            orders = [
                ordered(
                    convergence_order(
                        principal_series(
                            n, d, EXTERIOR, run_config.seed, run_config.trials, run_config.prime
                        ).quotient,
                        n,
                        d,
                    )
                )
                for n in range(d, max_n + 1)
            ]
            assert orders == sorted(orders), (d, orders)

    def test_odd_recursion_small_n(self, run_config):
        """Test the table-rule recursion gives the ideal series for n <= 9."""
        self._check_odd(9, run_config)

    def test_cubics_small_n(self, run_config):
        """Test the cubic family gives the quotient series for n <= 9."""
        self._check_cubics(9, run_config)

    def test_convergence_small_n(self, run_config):
        """Test the t-adic distance to the limit never shrinks for n <= 9."""
        self._check_convergence(9, run_config)

    @pytest.mark.slow
    def test_odd_recursion_full_range(self, run_config):
        """Test odd d in {5, 7, 9} up to n = 13."""
        self._check_odd(13, run_config)

    @pytest.mark.slow
    def test_cubics_full_range(self, run_config):
        """Test the cubic family up to n = 12."""
        self._check_cubics(12, run_config)

    @pytest.mark.slow
    def test_convergence_full_range(self, run_config):
        """Test the distance to the limit is nondecreasing up to n = 12."""
        self._check_convergence(12, run_config)
