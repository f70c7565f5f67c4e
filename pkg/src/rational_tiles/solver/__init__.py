"""Exact cyclotomic-point solver for Laurent polynomials in one to three variables."""

from rational_tiles.solver.backsolve import IDENTICALLY_ZERO, backsolve_variable
from rational_tiles.solver.bivariate import BIVARIATE_PATTERNS, cyclotomic_points_bivariate
from rational_tiles.solver.lattice import LatticeBasis, apply_monomial_substitution, lattice_fullness
from rational_tiles.solver.roots import CyclotomicPoint, RootOfUnity, TorsionFamily
from rational_tiles.solver.trivariate import (
    TRIVARIATE_PATTERNS,
    EliminationBranch,
    cyclotomic_points_trivariate,
    elimination_branches,
)
from rational_tiles.solver.univariate import cyclotomic_roots_univariate

__all__ = [
    "BIVARIATE_PATTERNS",
    "IDENTICALLY_ZERO",
    "TRIVARIATE_PATTERNS",
    "CyclotomicPoint",
    "EliminationBranch",
    "LatticeBasis",
    "RootOfUnity",
    "TorsionFamily",
    "apply_monomial_substitution",
    "backsolve_variable",
    "cyclotomic_points",
    "cyclotomic_points_bivariate",
    "cyclotomic_points_trivariate",
    "cyclotomic_roots_univariate",
    "elimination_branches",
    "lattice_fullness",
]


def cyclotomic_points(poly):
    """Dispatch on the number of variables; one-variable input returns roots as 1-point tuples."""
    if poly.nvars == 1:
        return {CyclotomicPoint((r,)) for r in cyclotomic_roots_univariate(poly)}, set()
    if poly.nvars == 2:
        return cyclotomic_points_bivariate(poly)
    return cyclotomic_points_trivariate(poly)
