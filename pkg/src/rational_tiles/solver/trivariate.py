"""Cyclotomic points of surfaces P(x, y, z) = 0.

The three-variable version of the comparison method. For an irreducible
rational g whose exponent differences generate ℤ³ and that is not itself a
union of torsion cosets, every torsion point has a Galois conjugate on one
of fifteen comparison surfaces: the seven sign changes g(±x, ±y, ±z) and
the eight squarings g(±x², ±y², ±z²). Eliminating x from g and each
comparison leaves curves in (y, z) that the bivariate solver handles; each
of their points fixes a line in the x-direction.

:func:`elimination_branches` exposes the fifteen resultants and their
factorizations for reporting.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from rational_tiles.algebra.elimination import irreducible_factors, rationalize_coefficients, squarefree_part
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError, InconsistencyError
from rational_tiles.solver.bivariate import (
    BIVARIATE_PATTERNS,
    common_points_bivariate,
    comparison_resultant,
    cyclotomic_points_bivariate,
)
from rational_tiles.solver.cosets import (
    Solutions,
    collinear_cosets,
    find_families,
    is_collinear,
    solve_on_coset,
    solve_via_sublattice,
    unit_rows,
)
from rational_tiles.solver.lattice import lattice_fullness, map_point, primitive_vector, unimodular_completion
from rational_tiles.solver.roots import CyclotomicPoint, TorsionFamily
from rational_tiles.utils.logger import logger

__all__ = [
    "TRIVARIATE_PATTERNS",
    "EliminationBranch",
    "cyclotomic_points_trivariate",
    "elimination_branches",
]

Pattern = tuple[tuple[int, int], ...]


def _pattern_label(pattern: Pattern) -> str:
    parts = []
    for name, (sign, power) in zip("xyz", pattern, strict=True):
        text = name if power == 1 else f"{name}^{power}"
        parts.append(text if sign > 0 else f"-{text}")
    return "(" + ", ".join(parts) + ")"


_SIGNS: tuple[tuple[int, int, int], ...] = (
    (-1, 1, 1),
    (1, -1, 1),
    (1, 1, -1),
    (-1, -1, 1),
    (-1, 1, -1),
    (1, -1, -1),
    (-1, -1, -1),
)
_SQUARE_SIGNS: tuple[tuple[int, int, int], ...] = ((1, 1, 1), *_SIGNS)

TRIVARIATE_PATTERNS: tuple[tuple[str, Pattern], ...] = tuple(
    (_pattern_label(p), p)
    for p in (
        *(tuple((s, 1) for s in signs) for signs in _SIGNS),
        *(tuple((s, 2) for s in signs) for signs in _SQUARE_SIGNS),
    )
)


@dataclass(frozen=True)
class EliminationBranch:
    """One comparison surface and the resultant it produces after eliminating x."""

    number: int
    label: str
    pattern: Pattern
    resultant: SparsePoly | None
    factors: tuple[tuple[SparsePoly, int], ...]

    def factor_text(self) -> str:
        """Nonmonomial irreducible factors with multiplicities, e.g. ``(y + 1)^2*(z - 1)``."""
        if self.resultant is None:
            return "0"
        if not self.factors:
            return "1"
        return "*".join(f"({f})" + (f"^{m}" if m > 1 else "") for f, m in self.factors)


def elimination_branches(poly: SparsePoly) -> list[EliminationBranch]:
    """Res_x(P, P∘T) for each comparison pattern T: seven for curves, fifteen for surfaces.

    Cyclotomic coefficients are rationalized first. A branch whose
    comparison is a multiple of P carries ``resultant=None``.
    """
    if poly.nvars not in (2, 3):
        raise AlgebraError(f"elimination branches need two or three variables, got {poly.nvars}")
    patterns = BIVARIATE_PATTERNS if poly.nvars == 2 else TRIVARIATE_PATTERNS
    rational = poly.normalized()[1]
    if not rational.is_rational():
        rational = rationalize_coefficients(rational).normalized()[1]
    branches = []
    for number, (label, pattern) in enumerate(patterns, start=1):
        res = comparison_resultant(rational, pattern)
        factors = tuple(irreducible_factors(res)) if res is not None and not res.is_monomial() else ()
        branches.append(EliminationBranch(number, label, pattern, res, factors))
    return branches


def _embed(values, slots: list[int], nvars: int = 3) -> tuple:
    out = [0] * nvars
    for slot, value in zip(slots, values, strict=True):
        out[slot] = value
    return tuple(out)


def _on_projection(poly: SparsePoly, curve: SparsePoly, slots: list[int]) -> Solutions:
    """Zeros of ``poly`` over the torsion points and families of a curve in two coordinates."""
    (free,) = [i for i in range(3) if i not in slots]
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    curve_points, curve_families = cyclotomic_points_bivariate(curve)
    for pt in sorted(curve_points):
        sub_points, sub_families = solve_on_coset(poly, _embed(pt.fractions, slots), unit_rows(3, [free]))
        points |= sub_points
        families |= sub_families
    for fam in sorted(curve_families, key=str):
        basis = [unit_rows(3, [free])[0], _embed(fam.direction, slots)]
        sub_points, sub_families = solve_on_coset(poly, _embed(fam.base.fractions, slots), basis)
        points |= sub_points
        families |= sub_families
    return points, families


def _drop_variable(poly: SparsePoly, var: int) -> SparsePoly:
    return SparsePoly(2, {e[:var] + e[var + 1 :]: c for e, c in poly.terms.items()})


def _on_cylinder(poly: SparsePoly, factor: SparsePoly, direction: tuple[int, ...]) -> Solutions:
    """Zeros of ``poly`` on a ``factor`` invariant along ``direction``.

    In coordinates where ``direction`` is the first axis the factor is a
    monomial times a curve in the other two; each torsion point of that
    curve lifts to a line, each family to a plane.
    """
    _, w = unimodular_completion(direction)
    terms = {}
    for exps, coeff in factor.terms.items():
        new = tuple(sum(w[i][j] * e for i, e in enumerate(exps)) for j in range(3))
        terms[new[1:]] = coeff
    curve_points, curve_families = cyclotomic_points_bivariate(SparsePoly(2, terms))
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    for pt in sorted(curve_points):
        base = map_point((Fraction(0), *pt.fractions), w)
        sub_points, sub_families = solve_on_coset(poly, base, [direction])
        points |= sub_points
        families |= sub_families
    for fam in sorted(curve_families, key=str):
        base = map_point((Fraction(0), *fam.base.fractions), w)
        second = tuple(sum(w[i][j + 1] * d for j, d in enumerate(fam.direction)) for i in range(3))
        sub_points, sub_families = solve_on_coset(poly, base, [direction, second])
        points |= sub_points
        families |= sub_families
    return points, families


def _factor_solutions(poly: SparsePoly, factor: SparsePoly) -> Solutions:
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    if is_collinear(factor):
        for origin, basis in collinear_cosets(factor):
            sub_points, sub_families = solve_on_coset(poly, origin, basis)
            points |= sub_points
            families |= sub_families
        return points, families
    missing = [i for i in range(3) if factor.degree(i) <= 0]
    if missing:
        # a cylinder over a curve in the two remaining coordinates
        (var,) = missing
        slots = [i for i in range(3) if i != var]
        return _on_projection(poly, _drop_variable(factor, var), slots)
    full, basis = lattice_fullness(factor)
    if basis.rank < 3:
        (a1, a2, a3), (b1, b2, b3) = basis.rows
        normal = primitive_vector((a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1))
        return _on_cylinder(poly, factor, normal)
    if not full:
        return solve_via_sublattice(poly, factor, _solve_trivariate)
    for label, pattern in TRIVARIATE_PATTERNS:
        res = comparison_resultant(factor, pattern)
        if res is None or res.is_monomial():
            continue
        for curve, _ in irreducible_factors(res):
            logger.debug(f"branch {label}: curve with {len(curve.terms)} terms")
            sub_points, sub_families = _on_projection(poly, curve, [1, 2])
            points |= sub_points
            families |= sub_families
    return points, families


def cyclotomic_points_trivariate(poly: SparsePoly) -> Solutions:
    """All cyclotomic points and torsion families of P(x, y, z) = 0.

    Parameters
    ----------
    poly : SparsePoly
        Three-variable Laurent polynomial, coefficients in some Q(ζₙ).

    Returns
    -------
    (set of CyclotomicPoint, set of TorsionFamily)
        Isolated points not on any returned family, and the one-parameter
        families contained in the surface.

    Raises
    ------
    AlgebraError
        If ``poly`` is zero, a monomial, or not trivariate.
    SolverError
        If the surface contains a two-dimensional torsion coset.
    """
    if poly.nvars != 3:
        raise AlgebraError(f"expected a trivariate polynomial, got {poly.nvars} variables")
    if poly.is_zero():
        raise AlgebraError("the zero polynomial vanishes everywhere")
    if poly.is_monomial():
        raise AlgebraError("a monomial has no zeros on the torus")
    points, families = _solve_trivariate(poly.normalized()[1])
    return set(points), set(families)


@lru_cache(maxsize=256)
def _solve_trivariate(poly: SparsePoly) -> Solutions:
    logger.info(f"Solving surface with {len(poly.terms)} terms over Q(zeta_{poly.order})")
    families = find_families(poly, common_points_bivariate)
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
    logger.info(f"Surface solved: {len(points)} points, {len(families)} families")
    return frozenset(points), frozenset(families)
