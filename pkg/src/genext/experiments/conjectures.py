"""
Closed-form predictions against engine truth.

Four families are swept: principal ideals against δ, odd degrees d >= 5
(correction term plus recursion), cubics (the n mod 4 split) and
non-principal ideals (anticipated series and t-adic distance to the limit
product).
"""

import logging
from collections import Counter
from collections.abc import Sequence
from functools import partial

from ..algebra.series import IntSeries
from ..exceptions import ConjectureInconsistentError
from ..models.results import (
    ConjectureReport,
    ConjectureVerdict,
    RunConfig,
    VerdictStatus,
)
from ..services.closed_forms import (
    AnticipatedAlgebra,
    ExponentRule,
    anticipated_series,
    convergence_order,
    cubic_constants_for,
    cubic_quotient,
    delta,
    limit_distance,
    odd_prediction,
)
from ..services.engine import (
    AlgebraKind,
    NumericalCharacter,
    check_feasible,
    generic_quotient,
    principal_series,
)
from ..utils.fanout import ParallelSweep
from .expected import load_cubic_constants
from .tables import ledger_anomaly

logger = logging.getLogger(__name__)

DEFAULT_CHARACTERS: tuple[tuple[int, ...], ...] = ((2, 2), (2, 3), (3, 3), (2, 2, 2))


def _summary(verdicts: Sequence[ConjectureVerdict]) -> dict[str, int]:
    counts = Counter(v.status.value for v in verdicts)
    return {status.value: counts.get(status.value, 0) for status in VerdictStatus}


def _oddfive_verdict(
    cell: tuple[int, int], rule: ExponentRule, run_config: RunConfig
) -> ConjectureVerdict:
    n, d = cell
    engine = principal_series(
        n, d, AlgebraKind.EXTERIOR, run_config.seed, run_config.trials, run_config.prime
    )
    order = convergence_order(engine.quotient, n, d)
    try:
        prediction = odd_prediction(n, d, rule)
    except ConjectureInconsistentError as e:
        return ConjectureVerdict(
            family="oddfive",
            n=n,
            d=[d],
            predicted=None,
            computed=engine.ideal.to_list(),
            status=VerdictStatus.INCONSISTENT,
            detail=str(e),
            convergence_order=order,
        )
    matched = prediction.predicted_p == engine.ideal
    return ConjectureVerdict(
        family="oddfive",
        n=n,
        d=[d],
        predicted=prediction.predicted_p.to_list(),
        computed=engine.ideal.to_list(),
        status=VerdictStatus.MATCH if matched else VerdictStatus.MISMATCH,
        detail=None if matched else f"tau = {prediction.tau}",
        convergence_order=order,
    )


def _rule_fit(verdicts: Sequence[ConjectureVerdict]) -> dict[str, int]:
    fit: dict[str, int] = {}
    for rule in ExponentRule:
        hits = 0
        for v in verdicts:
            try:
                predicted = odd_prediction(v.n, v.d[0], rule).predicted_p
            except ConjectureInconsistentError:
                continue
            hits += predicted == IntSeries(v.computed)
        fit[rule.value] = hits
    return fit


def run_oddfive(max_n: int, rule: ExponentRule, run_config: RunConfig) -> ConjectureReport:
    """
    Predicted ideal series for odd 5 <= d <= n <= max_n against the engine.

    Whatever ``rule`` drives the verdicts, the report also counts the cells
    each exponent rule reproduces.
    """
    cells = [(n, d) for n in range(5, max_n + 1) for d in range(5, n + 1, 2)]
    for n, d in cells:
        check_feasible(n, (d,), run_config.matrix_limit)
    sweep: ParallelSweep[tuple[int, int], ConjectureVerdict] = ParallelSweep(
        partial(_oddfive_verdict, rule=rule, run_config=run_config), name="oddfive"
    )
    verdicts = sweep.run(cells, run_config.workers)
    report = ConjectureReport(
        family="oddfive",
        rule=rule.value,
        verdicts=verdicts,
        summary=_summary(verdicts),
        rule_fit=_rule_fit(verdicts),
    )
    logger.info("📊 oddfive (%s rule): %s, fit %s", rule, report.summary, report.rule_fit)
    return report


def _deg3_verdict(
    n: int, constants: dict[int, tuple[int, int]], run_config: RunConfig
) -> ConjectureVerdict:
    engine = principal_series(
        n, 3, AlgebraKind.EXTERIOR, run_config.seed, run_config.trials, run_config.prime
    )
    order = convergence_order(engine.quotient, n, 3)
    c1, c2 = cubic_constants_for(n, constants)
    try:
        predicted = cubic_quotient(n, c1, c2)
    except ConjectureInconsistentError as e:
        return ConjectureVerdict(
            family="deg3",
            n=n,
            d=[3],
            predicted=None,
            computed=engine.quotient.to_list(),
            status=VerdictStatus.INCONSISTENT,
            detail=str(e),
            convergence_order=order,
        )
    matched = predicted == engine.quotient
    return ConjectureVerdict(
        family="deg3",
        n=n,
        d=[3],
        predicted=predicted.to_list(),
        computed=engine.quotient.to_list(),
        status=VerdictStatus.MATCH if matched else VerdictStatus.MISMATCH,
        convergence_order=order,
    )


def run_deg3(max_n: int, run_config: RunConfig) -> ConjectureReport:
    """Cubic quotient series for 3 <= n <= max_n against the engine."""
    ns = list(range(3, max_n + 1))
    for n in ns:
        check_feasible(n, (3,), run_config.matrix_limit)
    constants = load_cubic_constants(run_config.expected_dir)
    sweep: ParallelSweep[int, ConjectureVerdict] = ParallelSweep(
        partial(_deg3_verdict, constants=constants, run_config=run_config), name="deg3"
    )
    verdicts = sweep.run(ns, run_config.workers)
    report = ConjectureReport(family="deg3", verdicts=verdicts, summary=_summary(verdicts))
    logger.info("📊 deg3: %s", report.summary)
    return report


def _nonprincipal_verdict(
    cell: tuple[int, tuple[int, ...]], kind: AlgebraKind, run_config: RunConfig
) -> ConjectureVerdict:
    n, degrees = cell
    quotient = generic_quotient(
        n, NumericalCharacter(degrees), kind, run_config.seed, run_config.trials, run_config.prime
    )
    distance = limit_distance(quotient, n, degrees, run_config.degree_cap)
    if kind is AlgebraKind.SQUAREFREE:
        anticipated = anticipated_series(n, degrees, AnticipatedAlgebra.SQUAREFREE)
        matched = anticipated == quotient
        status = VerdictStatus.MATCH if matched else VerdictStatus.MISMATCH
    elif all(d % 2 == 0 for d in degrees):
        anticipated = anticipated_series(n, degrees, AnticipatedAlgebra.EXTERIOR_EVEN)
        status = VerdictStatus.INFORMATIONAL
    else:
        return ConjectureVerdict(
            family="nonprincipal",
            n=n,
            d=list(degrees),
            predicted=None,
            computed=quotient.to_list(),
            status=VerdictStatus.INFORMATIONAL,
            convergence_order=distance,
        )
    deviation = quotient - anticipated
    return ConjectureVerdict(
        family="nonprincipal",
        n=n,
        d=list(degrees),
        predicted=anticipated.to_list(),
        computed=quotient.to_list(),
        status=status,
        detail=None if deviation.is_zero() else f"deviation {deviation}",
        convergence_order=distance,
    )


def run_nonprincipal(
    max_n: int,
    run_config: RunConfig,
    kind: AlgebraKind = AlgebraKind.EXTERIOR,
    characters: Sequence[tuple[int, ...]] = DEFAULT_CHARACTERS,
) -> ConjectureReport:
    """
    Non-principal ideals: anticipated series and distance to the limit product.

    In the square-free algebra the anticipated series is the claim under test;
    in the exterior algebra it is reported as a deviation only.
    """
    cells = [
        (n, tuple(sorted(degrees)))
        for degrees in characters
        for n in range(max(degrees), max_n + 1)
    ]
    for n, degrees in cells:
        check_feasible(n, degrees, run_config.matrix_limit)
    sweep: ParallelSweep[tuple[int, tuple[int, ...]], ConjectureVerdict] = ParallelSweep(
        partial(_nonprincipal_verdict, kind=kind, run_config=run_config), name="nonprincipal"
    )
    verdicts = sweep.run(cells, run_config.workers)
    report = ConjectureReport(
        family="nonprincipal", algebra=kind.value, verdicts=verdicts, summary=_summary(verdicts)
    )
    logger.info("📊 nonprincipal (%s): %s", kind, report.summary)
    return report


def _principal_verdict(
    cell: tuple[int, int], kind: AlgebraKind, run_config: RunConfig
) -> ConjectureVerdict:
    n, d = cell
    engine = principal_series(n, d, kind, run_config.seed, run_config.trials, run_config.prime)
    predicted = delta(n, d)
    # a >= p only holds where f·f = 0, so the square-free side checks the quotient alone
    anomaly = ledger_anomaly(engine) if kind is AlgebraKind.EXTERIOR else None
    matched = predicted == engine.quotient and anomaly is None
    return ConjectureVerdict(
        family="principal",
        n=n,
        d=[d],
        predicted=predicted.to_list(),
        computed=engine.quotient.to_list(),
        status=VerdictStatus.MATCH if matched else VerdictStatus.MISMATCH,
        detail=anomaly,
        convergence_order=convergence_order(engine.quotient, n, d),
    )


def run_principal(
    max_n: int, run_config: RunConfig, kind: AlgebraKind = AlgebraKind.EXTERIOR
) -> ConjectureReport:
    """
    Principal ideals against δ_{n,d}.

    Exterior cells cover even d only, where the answer is a theorem; the
    square-free algebra covers every 1 <= d <= n.
    """
    step, start = (2, 2) if kind is AlgebraKind.EXTERIOR else (1, 1)
    cells = [(n, d) for n in range(1, max_n + 1) for d in range(start, n + 1, step)]
    for n, d in cells:
        check_feasible(n, (d,), run_config.matrix_limit)
    sweep: ParallelSweep[tuple[int, int], ConjectureVerdict] = ParallelSweep(
        partial(_principal_verdict, kind=kind, run_config=run_config), name="principal"
    )
    verdicts = sweep.run(cells, run_config.workers)
    report = ConjectureReport(
        family="principal", algebra=kind.value, verdicts=verdicts, summary=_summary(verdicts)
    )
    logger.info("📊 principal (%s): %s", kind, report.summary)
    return report
