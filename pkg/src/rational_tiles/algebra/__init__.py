"""Exact arithmetic: cyclotomic fields, Laurent polynomials, resultants."""

from rational_tiles.algebra.cyclotomic import ONE, ZERO, CyclotomicElement, euler_phi, zeta
from rational_tiles.algebra.elimination import (
    exact_quotient,
    irreducible_factors,
    poly_gcd,
    rationalize_coefficients,
    resultant_eliminate,
    squarefree_part,
)
from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.algebra.sparse import VAR_NAMES, SparsePoly, evaluate_at_point, galois_conjugate
from rational_tiles.algebra.unipoly import UniPoly, cyclotomic_polynomial, poly_gcd_univariate

__all__ = [
    "ONE",
    "VAR_NAMES",
    "ZERO",
    "CyclotomicElement",
    "SparsePoly",
    "UniPoly",
    "cyclotomic_polynomial",
    "euler_phi",
    "evaluate_at_point",
    "exact_quotient",
    "irreducible_factors",
    "galois_conjugate",
    "parse_polynomial",
    "poly_gcd",
    "poly_gcd_univariate",
    "rationalize_coefficients",
    "resultant_eliminate",
    "squarefree_part",
    "zeta",
]
