"""Command-line entry point for rational-tiles.

Module Information:
    - Filename: main.py
    - Module: main
    - Location: src/rational_tiles/

Subcommands:
    - ``classify``: run all 36 cases and print the merged classification
    - ``case <id> [--branches]``: run one case (``abd``, ``b3+a4``, mirrored ids accepted)
    - ``roots --vars N <poly>``: cyclotomic points of a polynomial

Exit codes:
    0 success, 1 other package error, 2 bad input (parse error, arity,
    unknown case), 3 internal inconsistency.
"""

import argparse
import pathlib
import sys

from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.classification import classify
from rational_tiles.errors import CaseError, InconsistencyError, PolynomialParseError, RationalTilesError
from rational_tiles.report import FORMATS, render_roots, report_from_classification
from rational_tiles.settings import DEFAULT_SETTINGS, SolverSettings
from rational_tiles.solver import cyclotomic_points
from rational_tiles.tiling.cases import get_case
from rational_tiles.utils.logger import init_logger, logger

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="md", help="report format (default: md)")
    common.add_argument("--out", default=None, help="write the output to this file instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for independent cases")
    common.add_argument("--f-max", type=int, default=None, help="family sampling horizon (default: 200)")
    common.add_argument("--log-level", default=None, help="loguru level, e.g. DEBUG")
    parser = argparse.ArgumentParser(
        prog="rational-tiles",
        description="Classify rational a3b spherical monotiles and find cyclotomic points of polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="run every case and merge the results")
    case = sub.add_parser("case", parents=[common], help="run a single vertex-combination case")
    case.add_argument("case_id", help="case id such as abd or b3+a4")
    case.add_argument(
        "--branches", action="store_true", help="also report the comparison eliminants (can be slow)"
    )
    roots = sub.add_parser("roots", parents=[common], help="list the cyclotomic points of a polynomial")
    roots.add_argument("--vars", type=int, choices=(1, 2, 3), required=True, help="number of variables")
    roots.add_argument("poly", help="polynomial text, e.g. 'x*y - 1'")
    return parser


def settings_from_args(args: argparse.Namespace) -> SolverSettings:
    return DEFAULT_SETTINGS.with_overrides(f_max=args.f_max, jobs=args.jobs, log_level=args.log_level)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_classify(args: argparse.Namespace, settings: SolverSettings, case_ids=None) -> int:
    classification = classify(settings, case_ids)
    report = report_from_classification(classification, branches=getattr(args, "branches", False))
    _emit(report.write(args.format, args.out), args.out)
    for failed in classification.failed_cases:
        logger.error(f"case {failed.case_id} did not complete: {failed.error}")
    return EXIT_OK


def cmd_case(args: argparse.Namespace, settings: SolverSettings) -> int:
    try:
        get_case(args.case_id)
    except CaseError as exc:
        logger.error(str(exc))
        return EXIT_USAGE
    return cmd_classify(args, settings, [args.case_id])


def cmd_cyclo_roots(args: argparse.Namespace) -> int:
    poly = parse_polynomial(args.poly, args.vars)
    points, families = cyclotomic_points(poly)
    logger.info(f"{len(points)} points, {len(families)} families for {poly}")
    text = render_roots(points, families, args.format)
    if args.out is not None:
        path = pathlib.Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    _emit(text, args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the subcommand and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    settings = settings_from_args(args)
    init_logger(settings.log_level, log_dir=settings.log_dir, log_file_name=settings.log_file_name)
    logger.info(f"=== Starting rational-tiles {args.command} ===")
    try:
        if args.command == "classify":
            return cmd_classify(args, settings)
        if args.command == "case":
            return cmd_case(args, settings)
        return cmd_cyclo_roots(args)
    except PolynomialParseError as exc:
        logger.error(f"Could not parse polynomial: {exc}")
        return EXIT_USAGE
    except InconsistencyError as exc:
        logger.error(f"Internal inconsistency: {exc}")
        return EXIT_INCONSISTENT
    except RationalTilesError as exc:
        logger.error(str(exc))
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_ERROR


def run() -> None:
    """Console-script entry point."""
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())


__all__ = ["build_parser", "main", "run"]
