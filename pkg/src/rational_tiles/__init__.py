"""rational-tiles: cyclotomic points of Laurent polynomials and rational a3b-monotiles.

Public API
----------
parse_polynomial, cyclotomic_points
    The exact solver on user polynomials.
solve_case, classify
    One vertex-combination case, or the whole classification.
SolverSettings, DEFAULT_SETTINGS
    Run configuration.
"""

from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.classification import Classification, classify
from rational_tiles.errors import RationalTilesError
from rational_tiles.settings import DEFAULT_SETTINGS, SolverSettings
from rational_tiles.solver import cyclotomic_points
from rational_tiles.tiling.pipeline import solve_case

__all__ = [
    "DEFAULT_SETTINGS",
    "Classification",
    "RationalTilesError",
    "SolverSettings",
    "classify",
    "cyclotomic_points",
    "parse_polynomial",
    "solve_case",
]
