"""
Subcommand handlers.

Each handler takes the parsed arguments and the resolved RunConfig, renders
its report and returns the process exit code (0 success, 1 mismatch).
"""

import argparse
import logging

from ..algebra.series import IntSeries
from ..exceptions import ConjectureInconsistentError, DegreeRangeError
from ..experiments.conjectures import (
    DEFAULT_CHARACTERS,
    run_deg3,
    run_nonprincipal,
    run_principal,
    run_oddfive,
)
from ..experiments.expected import TABLE_IDS, load_cubic_constants
from ..experiments.runner import run_tables
from ..models.results import (
    IncidenceReport,
    QuotientResult,
    RunConfig,
    SeriesResult,
)
from ..services.closed_forms import (
    AnticipatedAlgebra,
    ExponentRule,
    anticipated_series,
    cubic_constants_for,
    cubic_quotient,
    delta,
    predicted_quotient_odd,
)
from ..services.engine import (
    AlgebraKind,
    HomogeneousForm,
    NumericalCharacter,
    PrincipalSeries,
    check_feasible,
    form_rank_profile,
    generic_quotient,
    principal_series,
)
from ..services.incidence import (
    SindepRule,
    fullrank_sweep,
    rank_certificate,
    verify_fullrank,
    verify_notzero,
    verify_sindep,
    verify_unsigned_fullrank,
)
from ..services.report.generator import ReportService, write_output
from .expression import evaluate

logger = logging.getLogger(__name__)

# Default sweep bounds when --max-n is omitted
LEMMA_MAX_N = 8
FULLRANK_MAX_N = 11
NOTZERO_MAX_N = 18
SINDEP_RULES: tuple[SindepRule, ...] = ("printed", "initial-segment")
CONJECTURE_MAX_N = {"principal": 12, "oddfive": 13, "deg3": 12, "nonprincipal": 8}


def _emit(text: str, args: argparse.Namespace) -> None:
    write_output(text, args.output)


def _bound(max_n: int | None, default: int) -> int:
    """An explicit --max-n wins over the default, even when it is 0."""
    if max_n is None:
        return default
    if max_n < 1:
        raise DegreeRangeError(f"--max-n must be positive, got {max_n}")
    return max_n


# ----------------------------------------------------------------------
# series
# ----------------------------------------------------------------------


def cmd_series(args: argparse.Namespace, run_config: RunConfig) -> int:
    series = evaluate(args.expression)
    result = SeriesResult(expression=args.expression, series=series.to_list())
    _emit(ReportService(run_config.output_format).render_series(result), args)
    return 0


# ----------------------------------------------------------------------
# quotient
# ----------------------------------------------------------------------


def predicted_quotient(
    n: int, character: NumericalCharacter, kind: AlgebraKind, run_config: RunConfig
) -> tuple[IntSeries | None, str | None]:
    """
    The closed form matching a generic ideal, with a label naming it.

    Returns (None, None) when no closed form applies or the conjectural one
    cannot be evaluated at this n.
    """
    degrees = character.degrees
    if not character.is_principal:
        if kind is AlgebraKind.SQUAREFREE:
            return anticipated_series(n, degrees, AnticipatedAlgebra.SQUAREFREE), "anticipated"
        if all(d % 2 == 0 for d in degrees):
            return anticipated_series(n, degrees, AnticipatedAlgebra.EXTERIOR_EVEN), "anticipated"
        return None, None
    d = degrees[0]
    if kind is AlgebraKind.SQUAREFREE or d % 2 == 0:
        return delta(n, d), f"delta({n},{d})"
    if d == 1:
        return IntSeries.binom_pow(n - 1), f"(1+t)^{n - 1}"
    try:
        if d == 3:
            c1, c2 = cubic_constants_for(n, load_cubic_constants(run_config.expected_dir))
            return cubic_quotient(n, c1, c2), "cubic family"
        return predicted_quotient_odd(n, d, ExponentRule.TABLE), "odd prediction (table rule)"
    except ConjectureInconsistentError as e:
        logger.warning("⚠️ No prediction at n=%s, d=%s: %s", n, d, e)
        return None, None


def cmd_quotient(args: argparse.Namespace, run_config: RunConfig) -> int:
    kind = AlgebraKind(args.algebra)
    n = args.n
    annihilator: IntSeries | None = None
    if args.form:
        form = HomogeneousForm.parse(args.form, n, run_config.prime)
        character = NumericalCharacter((form.d,))
        check_feasible(n, character.degrees, run_config.matrix_limit)
        series = PrincipalSeries(n, form.d, form_rank_profile(form, kind, run_config.prime))
        quotient, ideal, annihilator = series.quotient, series.ideal, series.annihilator
    else:
        if args.degrees is None:
            raise DegreeRangeError("quotient needs --degrees or --form")
        character = NumericalCharacter.parse(args.degrees)
        if max(character.degrees) > n:
            raise DegreeRangeError(f"degrees {list(character.degrees)} exceed n={n}")
        check_feasible(n, character.degrees, run_config.matrix_limit)
        if character.is_principal:
            series = principal_series(
                n,
                character.degrees[0],
                kind,
                run_config.seed,
                run_config.trials,
                run_config.prime,
            )
            quotient, ideal, annihilator = series.quotient, series.ideal, series.annihilator
        else:
            quotient = generic_quotient(
                n, character, kind, run_config.seed, run_config.trials, run_config.prime
            )
            ideal = IntSeries.binom_pow(n) - quotient

    predicted, label = predicted_quotient(n, character, kind, run_config)
    result = QuotientResult(
        n=n,
        d=list(character.degrees),
        algebra=kind.value,
        form=args.form,
        quotient=quotient.to_list(),
        ideal=ideal.to_list(),
        annihilator=None if annihilator is None else annihilator.to_list(),
        predicted=None if predicted is None else predicted.to_list(),
        predicted_label=label,
        difference=None if predicted is None else (quotient - predicted).to_list(),
    )
    _emit(ReportService(run_config.output_format).render_quotient(result), args)
    return 0


# ----------------------------------------------------------------------
# tables
# ----------------------------------------------------------------------


def cmd_tables(args: argparse.Namespace, run_config: RunConfig) -> int:
    table_ids = list(TABLE_IDS) if args.id == "all" else [int(args.id)]
    max_n = None if args.max_n is None else _bound(args.max_n, 0)
    reports = run_tables(table_ids, max_n, run_config)
    _emit(ReportService(run_config.output_format).render_tables(reports), args)
    return 1 if any(r.failed for r in reports) else 0


# ----------------------------------------------------------------------
# incidence
# ----------------------------------------------------------------------


def cmd_incidence(args: argparse.Namespace, run_config: RunConfig) -> int:
    report = IncidenceReport()
    single = (args.a, args.b, args.n)
    if any(v is not None for v in single):
        if any(v is None for v in single):
            raise DegreeRangeError("--a, --b and --n must be given together")
        if args.unsigned:
            report.certificates.append(
                verify_unsigned_fullrank(args.a, args.b - args.a, args.n, run_config.prime)
            )
        elif args.certify:
            report.certificates.append(verify_fullrank(args.a, args.b, args.n, run_config.prime))
        else:
            report.certificates.append(rank_certificate(args.a, args.b, args.n, run_config.prime))
    if args.sweep:
        max_n = _bound(args.max_n, FULLRANK_MAX_N)
        report.certificates.extend(fullrank_sweep(max_n, run_config.prime, run_config.workers))
    if args.verify_lemmas:
        max_n = _bound(args.max_n, LEMMA_MAX_N)
        for rule in SINDEP_RULES:
            report.sindep.append(
                verify_sindep(
                    max_n,
                    rule=rule,
                    random_cases=args.random_cases,
                    random_max_n=max(max_n, args.random_max_n),
                    seed=run_config.seed,
                )
            )
        report.notzero = verify_notzero(max_n=NOTZERO_MAX_N, brute_max_n=12)
    if not (report.certificates or report.sindep):
        raise DegreeRangeError("incidence needs --a/--b/--n, --sweep or --verify-lemmas")
    _emit(ReportService(run_config.output_format).render_incidence(report), args)
    return 1 if report.failed else 0


# ----------------------------------------------------------------------
# conjectures
# ----------------------------------------------------------------------


def _parse_characters(text: str | None) -> tuple[tuple[int, ...], ...]:
    if not text:
        return DEFAULT_CHARACTERS
    return tuple(NumericalCharacter.parse(part).degrees for part in text.split(";") if part)


def cmd_conjectures(args: argparse.Namespace, run_config: RunConfig) -> int:
    max_n = _bound(args.max_n, CONJECTURE_MAX_N[args.family])
    match args.family:
        case "principal":
            report = run_principal(max_n, run_config, kind=AlgebraKind(args.algebra))
        case "oddfive":
            report = run_oddfive(max_n, ExponentRule(args.exponent_rule), run_config)
        case "deg3":
            report = run_deg3(max_n, run_config)
        case _:
            report = run_nonprincipal(
                max_n,
                run_config,
                kind=AlgebraKind(args.algebra),
                characters=_parse_characters(args.characters),
            )
    _emit(ReportService(run_config.output_format).render_conjectures(report), args)
    return 1 if report.failed else 0
