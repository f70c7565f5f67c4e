"""Torsion cosets: restriction of a polynomial to a coset and family detection.

A torsion coset of the torus is ``origin · t₁^{b₁} ⋯ t_r^{b_r}`` with a
root-of-unity origin and integer basis rows bᵢ. Restricting a polynomial
to a coset gives a polynomial in r variables whose cyclotomic points map
back to points of the original; the bivariate and trivariate drivers reduce
every sub-problem to this one operation.
"""

from collections.abc import Callable, Sequence
from fractions import Fraction
import itertools
import math

from sympy import Matrix

from rational_tiles.algebra.cyclotomic import ZERO, zeta
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import SolverError
from rational_tiles.solver.lattice import (
    lattice_preimages,
    map_point,
    orthogonal_lattice,
    primitive_vector,
    reduce_to_full_lattice,
    unimodular_completion,
)
from rational_tiles.solver.roots import CyclotomicPoint, RootOfUnity, TorsionFamily
from rational_tiles.solver.univariate import cyclotomic_roots_univariate
from rational_tiles.utils.logger import logger

__all__ = [
    "candidate_directions",
    "collinear_cosets",
    "common_roots_univariate",
    "find_families",
    "is_collinear",
    "restrict_to_coset",
    "solve_on_coset",
    "solve_via_sublattice",
    "unit_rows",
]

Solutions = tuple[set[CyclotomicPoint], set[TorsionFamily]]


def unit_rows(nvars: int, indices: Sequence[int]) -> list[tuple[int, ...]]:
    """Unit vectors e_i for the given indices."""
    return [tuple(int(j == i) for j in range(nvars)) for i in indices]


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = math.gcd(*vec)
    vec = tuple(v // g for v in vec)
    return vec if next(v for v in vec if v) > 0 else tuple(-v for v in vec)


def _cross(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a: Sequence[int], b: Sequence) -> int:
    return sum(x * y for x, y in zip(a, b, strict=True))


def candidate_directions(poly: SparsePoly) -> list[tuple[int, ...]]:
    """Primitive directions v along which ``poly`` could contain a coset.

    Every monomial must share its value of e·v with another monomial,
    otherwise the restriction to a coset along v has an isolated term.
    """
    support = poly.support()
    k = poly.nvars
    if k == 1 or len(support) < 2:
        return []
    diffs = {_primitive([a - b for a, b in zip(e, f, strict=True)]) for e, f in itertools.combinations(support, 2)}
    candidates: set[tuple[int, ...]] = set()
    if k == 2:
        candidates = {_primitive((-d[1], d[0])) for d in diffs}
    else:
        first = support[0]
        anchored = {_primitive([a - b for a, b in zip(e, first, strict=True)]) for e in support[1:]}
        for d0 in anchored:
            for d in diffs:
                c = _cross(d0, d)
                if any(c):
                    candidates.add(_primitive(c))
    valid = []
    for v in sorted(candidates):
        levels: dict[int, int] = {}
        for e in support:
            levels[_dot(e, v)] = levels.get(_dot(e, v), 0) + 1
        if all(count >= 2 for count in levels.values()):
            valid.append(v)
    return valid


def restrict_to_coset(
    poly: SparsePoly, origin: Sequence[Fraction], basis: Sequence[Sequence[int]]
) -> SparsePoly:
    """P(origin · t^basis) as a polynomial in ``len(basis)`` variables."""
    terms: dict[tuple[int, ...], object] = {}
    for exps, coeff in poly.terms.items():
        phase = sum((e * o for e, o in zip(exps, origin, strict=True)), Fraction(0)) % 1
        key = tuple(_dot(row, exps) for row in basis)
        terms[key] = terms.get(key, ZERO) + coeff * zeta(phase.denominator, phase.numerator)
    return SparsePoly(len(basis), terms)


def _combine(origin: Sequence[Fraction], basis: Sequence[Sequence[int]], params: Sequence[Fraction]):
    return tuple(
        (o + sum((p * row[i] for p, row in zip(params, basis, strict=True)), Fraction(0))) % 1
        for i, o in enumerate(origin)
    )


def solve_on_coset(
    poly: SparsePoly,
    origin: Sequence[Fraction],
    basis: Sequence[Sequence[int]],
    bivariate_solver: Callable[[SparsePoly], Solutions] | None = None,
) -> Solutions:
    """Cyclotomic points and families of ``poly`` lying on a coset of dimension 1 or 2.

    Raises
    ------
    SolverError
        If ``poly`` vanishes on a coset of dimension 2.
    """
    restricted = restrict_to_coset(poly, origin, basis)
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    if restricted.is_zero():
        if len(basis) == 1:
            families.add(TorsionFamily.through(CyclotomicPoint.from_fractions(origin), basis[0]))
            return points, families
        raise SolverError(f"polynomial vanishes on a {len(basis)}-dimensional torsion coset")
    if restricted.is_monomial():
        return points, families
    if len(basis) == 1:
        for root in cyclotomic_roots_univariate(restricted):
            points.add(CyclotomicPoint.from_fractions(_combine(origin, basis, [root.fraction])))
        return points, families
    if bivariate_solver is None:
        from rational_tiles.solver.bivariate import cyclotomic_points_bivariate as bivariate_solver
    sub_points, sub_families = bivariate_solver(restricted)
    for pt in sub_points:
        points.add(CyclotomicPoint.from_fractions(_combine(origin, basis, pt.fractions)))
    for fam in sub_families:
        base = _combine(origin, basis, fam.base.fractions)
        direction = tuple(
            sum(u * row[i] for u, row in zip(fam.direction, basis, strict=True)) for i in range(poly.nvars)
        )
        families.add(TorsionFamily.through(CyclotomicPoint.from_fractions(base), _primitive(direction)))
    return points, families


def collinear_cosets(poly: SparsePoly) -> list[tuple[tuple[Fraction, ...], tuple[tuple[int, ...], ...]]]:
    """Torsion cosets (origin, basis) covering the zeros of a polynomial with collinear support.

    When every exponent difference is a multiple of one primitive d, the
    polynomial is x^{e₀}·h(x^d) and its zero set is the union of the cosets
    x^d = ω over the roots of unity ω of h. Binomials are the common case.
    """
    support = poly.support()
    first = support[0]
    diffs = [tuple(a - b for a, b in zip(e, first, strict=True)) for e in support[1:]]
    d = _primitive(diffs[0])
    steps = {}
    for exps, coeff in poly.terms.items():
        offset = [a - b for a, b in zip(exps, first, strict=True)]
        pivot = next(i for i, v in enumerate(d) if v)
        m = offset[pivot] // d[pivot]
        if any(o != m * v for o, v in zip(offset, d, strict=True)):
            raise SolverError("support is not collinear")
        steps[(m,)] = coeff
    h = SparsePoly(1, steps)
    if h.is_monomial():
        return []
    u, _ = unimodular_completion(d)
    basis = orthogonal_lattice(d)
    cosets = []
    for omega in sorted(cyclotomic_roots_univariate(h)):
        origin = tuple((omega.fraction * u[0][i]) % 1 for i in range(poly.nvars))
        cosets.append((origin, basis))
    return cosets


def is_collinear(poly: SparsePoly) -> bool:
    """True when all exponent differences of ``poly`` are parallel."""
    support = poly.support()
    first = support[0]
    diffs = [[a - b for a, b in zip(e, first, strict=True)] for e in support[1:]]
    return all(
        a[i] * b[j] == a[j] * b[i]
        for a, b in itertools.combinations(diffs, 2)
        for i, j in itertools.combinations(range(poly.nvars), 2)
    )


def find_families(
    poly: SparsePoly, common_solver: Callable[[list[SparsePoly]], Solutions]
) -> set[TorsionFamily]:
    """All one-parameter torsion cosets contained in the zero set of ``poly``.

    ``common_solver`` returns the common cyclotomic points (and families) of a
    list of polynomials in one fewer variable.

    Raises
    ------
    SolverError
        If ``poly`` contains a torsion coset of dimension 2.
    """
    families: set[TorsionFamily] = set()
    for v in candidate_directions(poly):
        _, w = unimodular_completion(v)
        levels: dict[int, dict[tuple[int, ...], object]] = {}
        for exps, coeff in poly.terms.items():
            new = tuple(sum(w[i][j] * e for i, e in enumerate(exps)) for j in range(poly.nvars))
            levels.setdefault(new[0], {})[new[1:]] = coeff
        parts = [SparsePoly(poly.nvars - 1, terms) for terms in levels.values()]
        points, sub_families = common_solver(parts)
        if sub_families:
            raise SolverError(f"polynomial contains a two-dimensional torsion coset along {v}")
        for pt in points:
            base = map_point((Fraction(0), *pt.fractions), w)
            families.add(TorsionFamily.through(CyclotomicPoint.from_fractions(base), v))
    if families:
        logger.debug(f"{len(families)} torsion famil{'y' if len(families) == 1 else 'ies'} found")
    return families


def common_roots_univariate(polys: list[SparsePoly]) -> Solutions:
    """Common roots of unity of one-variable polynomials, as 1-tuples."""
    polys = sorted(polys, key=lambda p: (len(p.terms), p.order))
    roots: set[RootOfUnity] = cyclotomic_roots_univariate(polys[0])
    kept = {r for r in roots if all(p.evaluate_roots([r.fraction]).is_zero() for p in polys[1:])}
    return {CyclotomicPoint((r,)) for r in kept}, set()


def solve_via_sublattice(
    poly: SparsePoly, factor: SparsePoly, solver: Callable[[SparsePoly], Solutions]
) -> Solutions:
    """Zeros of ``poly`` on a ``factor`` whose support spans a proper sublattice.

    ``factor`` is rewritten in the monomials of its difference lattice, solved
    there with ``solver``, and every solution is pulled back through the
    finitely many preimages of x ↦ (x^{b₁}, …, x^{b_k}).
    """
    reduced, rows = reduce_to_full_lattice(factor)
    logger.debug(f"factor support has index {abs(Matrix(rows).det())} in Z^{factor.nvars}; reducing")
    sub_points, sub_families = solver(reduced)
    points: set[CyclotomicPoint] = set()
    families: set[TorsionFamily] = set()
    for pt in sub_points:
        for theta in lattice_preimages(pt.fractions, rows):
            if poly.evaluate_roots(theta).is_zero():
                points.add(CyclotomicPoint.from_fractions(theta))
    inverse = Matrix(rows).inv()
    for fam in sub_families:
        direction = primitive_vector(list(inverse * Matrix(fam.direction)))
        for theta in lattice_preimages(fam.base.fractions, rows):
            coset_points, coset_families = solve_on_coset(poly, theta, [direction])
            points |= coset_points
            families |= coset_families
    return points, families
