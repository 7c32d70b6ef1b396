"""
genext command-line entry point.

Settings resolve as flag > GENEXT_* environment variable > default. Global
flags are accepted both before and after the subcommand.

Exit codes: 0 success, 1 mismatch or anomaly, 2 usage error, 3 infeasible size.
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from .. import config
from ..exceptions import (
    ConjectureInconsistentError,
    DegreeRangeError,
    ExpectedDataError,
    ExpressionParseError,
    InfeasibleSizeError,
    PydanticValidationError,
    SeriesError,
    TheoremHypothesisError,
)
from ..models.results import RunConfig
from ..services.engine import AlgebraKind
from ..utils.metrics_utils import log_metrics_summary
from .commands import (
    cmd_conjectures,
    cmd_incidence,
    cmd_quotient,
    cmd_series,
    cmd_tables,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

Handler = Callable[[argparse.Namespace, RunConfig], int]


def _add_global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    """Global flags; subparsers get SUPPRESS defaults so they never mask earlier values."""

    def default(value: object) -> object:
        return value if defaults else argparse.SUPPRESS

    parser.add_argument("--prime", type=int, default=default(config.PRIME), help="Field prime")
    parser.add_argument(
        "--seed", type=lambda s: int(s, 0), default=default(config.MASTER_SEED), help="Master seed"
    )
    parser.add_argument("--trials", type=int, default=default(config.TRIALS))
    parser.add_argument("--workers", type=int, default=default(config.WORKERS))
    parser.add_argument(
        "--format",
        dest="output_format",
        choices=["md", "csv", "json", "plain"],
        default=default(config.OUTPUT_FORMAT),
    )
    parser.add_argument("--degree-cap", type=int, default=default(config.DEGREE_CAP))
    parser.add_argument("--expected-dir", type=Path, default=default(config.EXPECTED_DIR))
    parser.add_argument(
        "--output", type=Path, default=default(None), help="Write the report here, not stdout"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genext",
        description="Hilbert series of generic ideals in exterior and square-free algebras",
    )
    _add_global_flags(parser, defaults=True)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, defaults=False)
    sub = parser.add_subparsers(dest="command", required=True)

    series = sub.add_parser("series", parents=[common], help="Evaluate a series expression")
    series.add_argument("expression", help='e.g. "head((1+t)^5*(1-t^2)^2)"')
    series.set_defaults(handler=cmd_series)

    quotient = sub.add_parser("quotient", parents=[common], help="Series of one ideal")
    quotient.add_argument("--n", type=int, required=True)
    quotient.add_argument("--degrees", help="Generator degrees, e.g. 2,2")
    quotient.add_argument(
        "--algebra", choices=[k.value for k in AlgebraKind], default=AlgebraKind.EXTERIOR.value
    )
    quotient.add_argument("--form", help="Explicit form instead of a generic one, e.g. x1x2+x3x4")
    quotient.set_defaults(handler=cmd_quotient)

    tables = sub.add_parser("tables", parents=[common], help="Reproduce the printed tables")
    tables.add_argument("--id", choices=["1", "2", "3", "4", "5", "all"], default="all")
    tables.add_argument("--max-n", type=int, default=None)
    tables.add_argument(
        "--extended", action="store_true", help="Raise the matrix size limit for long sweeps"
    )
    tables.set_defaults(handler=cmd_tables)

    incidence = sub.add_parser("incidence", parents=[common], help="Signed incidence matrices")
    incidence.add_argument("--a", type=int)
    incidence.add_argument("--b", type=int)
    incidence.add_argument("--n", type=int)
    incidence.add_argument(
        "--certify", action="store_true", help="Claim full rank (requires b - a even)"
    )
    incidence.add_argument("--unsigned", action="store_true", help="0/1 inclusion matrix")
    incidence.add_argument("--sweep", action="store_true", help="Certify all even b - a")
    incidence.add_argument("--verify-lemmas", action="store_true")
    incidence.add_argument("--max-n", type=int, default=None)
    incidence.add_argument("--random-cases", type=int, default=10_000)
    incidence.add_argument("--random-max-n", type=int, default=12)
    incidence.set_defaults(handler=cmd_incidence)

    conjectures = sub.add_parser("conjectures", parents=[common], help="Closed-form predictions")
    conjectures.add_argument(
        "--family", choices=["principal", "oddfive", "deg3", "nonprincipal"], required=True
    )
    conjectures.add_argument("--max-n", type=int, default=None)
    conjectures.add_argument("--exponent-rule", choices=["table", "paper"], default="table")
    conjectures.add_argument(
        "--algebra", choices=[k.value for k in AlgebraKind], default=AlgebraKind.EXTERIOR.value
    )
    conjectures.add_argument("--characters", help="Semicolon-separated, e.g. 2,2;2,3")
    conjectures.set_defaults(handler=cmd_conjectures)
    return parser


def _fail(message: str, code: int) -> int:
    logger.error("❌ %s", message)
    print(f"genext: error: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        run_config = RunConfig(
            prime=args.prime,
            seed=args.seed,
            trials=args.trials,
            workers=args.workers,
            output_format=args.output_format,
            degree_cap=args.degree_cap,
            expected_dir=args.expected_dir,
            extended=getattr(args, "extended", False),
        )
    except PydanticValidationError as e:
        return _fail(f"invalid configuration: {e.errors()[0]['msg']}", EXIT_USAGE)

    handler: Handler = args.handler
    try:
        return handler(args, run_config)
    except InfeasibleSizeError as e:
        return _fail(str(e), EXIT_INFEASIBLE)
    except (
        ExpressionParseError,
        TheoremHypothesisError,
        DegreeRangeError,
        SeriesError,
        ExpectedDataError,
    ) as e:
        return _fail(str(e), EXIT_USAGE)
    except ConjectureInconsistentError as e:
        return _fail(str(e), EXIT_MISMATCH)
    finally:
        log_metrics_summary()


if __name__ == "__main__":
    sys.exit(main())
