"""Cyclotomic points of curves P(x, y) = 0.

If (ζ₁, ζ₂) is a torsion point of a rational polynomial g, a Galois
conjugate of it is a zero of one of the seven comparison polynomials
g(−x, y), g(x, −y), g(−x, −y), g(x², y²), g(−x², y²), g(x², −y²),
g(−x², −y²). The y-coordinates of all torsion points are therefore roots
of unity among the roots of the seven resultants Res_x(g, comparison),
and each is completed by solving P(x, ζ₂) = 0.

Torsion cosets contained in the curve are found separately and reported
as :class:`TorsionFamily` values; isolated points lying on them are
dropped.
"""

from functools import lru_cache

from rational_tiles.algebra.elimination import (
    exact_quotient,
    irreducible_factors,
    poly_gcd,
    rationalize_coefficients,
    resultant_eliminate,
    squarefree_part,
)
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError, InconsistencyError
from rational_tiles.solver.cosets import (
    Solutions,
    collinear_cosets,
    common_roots_univariate,
    find_families,
    is_collinear,
    restrict_to_coset,
    solve_on_coset,
    solve_via_sublattice,
    unit_rows,
)
from rational_tiles.solver.lattice import lattice_fullness
from rational_tiles.solver.roots import CyclotomicPoint, RootOfUnity, TorsionFamily
from rational_tiles.solver.univariate import cyclotomic_roots_univariate
from rational_tiles.utils.logger import logger

__all__ = [
    "BIVARIATE_PATTERNS",
    "common_points_bivariate",
    "comparison_resultant",
    "cyclotomic_points_bivariate",
]

Pattern = tuple[tuple[int, int], ...]

BIVARIATE_PATTERNS: tuple[tuple[str, Pattern], ...] = (
    ("(-x, y)", ((-1, 1), (1, 1))),
    ("(x, -y)", ((1, 1), (-1, 1))),
    ("(-x, -y)", ((-1, 1), (-1, 1))),
    ("(x^2, y^2)", ((1, 2), (1, 2))),
    ("(-x^2, y^2)", ((-1, 2), (1, 2))),
    ("(x^2, -y^2)", ((1, 2), (-1, 2))),
    ("(-x^2, -y^2)", ((-1, 2), (-1, 2))),
)


def _is_constant(poly: SparsePoly) -> bool:
    return all(not any(e) for e in poly.terms)


@lru_cache(maxsize=4096)
def comparison_resultant(poly: SparsePoly, pattern: Pattern) -> SparsePoly | None:
    """Res_x(g, g∘T) for a rational ``poly`` and a sign/square ``pattern``.

    A common factor of g and g∘T is divided out first. Returns ``None`` when
    nothing is left to eliminate (g divides its comparison) or the
    resultant vanishes identically.
    """
    comparison = poly.transform(pattern)
    common = poly_gcd(poly, comparison)
    left, right = poly, comparison
    if not _is_constant(common):
        left = exact_quotient(poly, common)
        right = exact_quotient(comparison, common)
        logger.debug(f"comparison {pattern} shares a factor of {len(common.terms)} terms; divided out")
    if left.degree(0) <= 0 and right.degree(0) <= 0:
        return None
    result = resultant_eliminate(left, right, 0)
    if result.is_zero():
        logger.warning(f"resultant for comparison {pattern} vanishes identically")
        return None
    return result


@lru_cache(maxsize=1024)
def _projection_roots(poly: SparsePoly) -> frozenset[RootOfUnity]:
    """y-coordinates of the torsion points of an irreducible rational curve."""
    roots: set[RootOfUnity] = set()
    for label, pattern in BIVARIATE_PATTERNS:
        res = comparison_resultant(poly, pattern)
        if res is None or _is_constant(res):
            continue
        found = cyclotomic_roots_univariate(squarefree_part(res))
        logger.debug(f"branch {label}: {len(found)} candidate y-values")
        roots |= found
    return frozenset(roots)


def _factor_solutions(poly: SparsePoly, factor: SparsePoly) -> Solutions:
    """Torsion points of ``poly`` on the curve of one rational irreducible ``factor``."""
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    if is_collinear(factor):
        # includes binomials and factors in a single variable
        for origin, basis in collinear_cosets(factor):
            sub_points, sub_families = solve_on_coset(poly, origin, basis)
            points |= sub_points
            families |= sub_families
        return points, families
    full, _ = lattice_fullness(factor)
    if not full:
        return solve_via_sublattice(poly, factor, _solve_bivariate)
    for y0 in sorted(_projection_roots(factor)):
        sub_points, sub_families = solve_on_coset(poly, (0, y0.fraction), unit_rows(2, [0]))
        points |= sub_points
        families |= sub_families
    return points, families


def cyclotomic_points_bivariate(poly: SparsePoly) -> Solutions:
    """All cyclotomic points and torsion families of P(x, y) = 0.

    Parameters
    ----------
    poly : SparsePoly
        Two-variable Laurent polynomial; cyclotomic coefficients are solved
        through their Galois norm and every point is confirmed on ``poly``.

    Returns
    -------
    (set of CyclotomicPoint, set of TorsionFamily)
        Isolated points not lying on any returned family, and the families.

    Raises
    ------
    AlgebraError
        If ``poly`` is zero, a monomial, or not bivariate.
    """
    if poly.nvars != 2:
        raise AlgebraError(f"expected a bivariate polynomial, got {poly.nvars} variables")
    if poly.is_zero():
        raise AlgebraError("the zero polynomial vanishes everywhere")
    if poly.is_monomial():
        raise AlgebraError("a monomial has no zeros on the torus")
    points, families = _solve_bivariate(poly.normalized()[1])
    return set(points), set(families)


@lru_cache(maxsize=1024)
def _solve_bivariate(poly: SparsePoly) -> Solutions:
    families = find_families(poly, common_roots_univariate)
    rational = poly if poly.is_rational() else rationalize_coefficients(poly)
    points: set[CyclotomicPoint] = set()
    for factor, _ in irreducible_factors(squarefree_part(rational)):
        sub_points, sub_families = _factor_solutions(poly, factor)
        points |= sub_points
        families |= sub_families
    points = {p for p in points if not any(f.contains(p) for f in families)}
    for p in points:
        if not poly.evaluate_roots(p.fractions).is_zero():
            raise InconsistencyError(f"solver produced {p}, which is not a zero of {poly}")
    logger.debug(f"bivariate solve: {len(points)} points, {len(families)} families")
    return frozenset(points), frozenset(families)


def common_points_bivariate(polys: list[SparsePoly]) -> Solutions:
    """Common cyclotomic points and families of several bivariate polynomials."""
    polys = sorted(polys, key=lambda p: (len(p.terms), p.order))
    base_points, base_families = cyclotomic_points_bivariate(polys[0])
    rest = polys[1:]
    points = {p for p in base_points if all(q.evaluate_roots(p.fractions).is_zero() for q in rest)}
    families: set[TorsionFamily] = set()
    for fam in base_families:
        restricted = [restrict_to_coset(q, fam.base.fractions, [fam.direction]) for q in rest]
        nonzero = [r for r in restricted if not r.is_zero()]
        if not nonzero:
            families.add(fam)
            continue
        if any(r.is_monomial() for r in nonzero):
            continue
        ts, _ = common_roots_univariate(nonzero)
        points |= {fam.member(t.fractions[0]) for t in ts}
    return points, families
