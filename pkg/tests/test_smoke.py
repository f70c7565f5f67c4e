"""Test that the project structure works correctly.

Module Information:
    - Filename: test_smoke.py
    - Module: test_smoke
    - Location: tests/

This smoke test verifies that:
    - All modules can be imported
    - The command-line parser knows its subcommands
"""

from rational_tiles import classification, main, report, settings, tables
from rational_tiles.algebra import cyclotomic, elimination, parser, sparse, unipoly
from rational_tiles.combinatorics import vertices
from rational_tiles.geometry import quadrilateral
from rational_tiles.solver import backsolve, bivariate, cosets, lattice, roots, trivariate, univariate
from rational_tiles.tiling import angles, candidates, cases, exponential, filters, pipeline, trig
from rational_tiles.utils import logger


def test_imports_work():
    """Verify all modules can be imported."""
    modules = (
        classification, main, report, settings, tables,
        cyclotomic, elimination, parser, sparse, unipoly,
        vertices, quadrilateral,
        backsolve, bivariate, cosets, lattice, roots, trivariate, univariate,
        angles, candidates, cases, exponential, filters, pipeline, trig,
        logger,
    )
    assert all(m is not None for m in modules)


def test_entry_point_parses_every_subcommand():
    """Verify the CLI knows its three subcommands."""
    cli = main.build_parser()
    assert cli.parse_args(["classify"]).command == "classify"
    assert cli.parse_args(["case", "abd"]).case_id == "abd"
    assert cli.parse_args(["case", "abd", "--branches"]).branches
    assert cli.parse_args(["roots", "--vars", "2", "x*y - 1"]).vars == 2
