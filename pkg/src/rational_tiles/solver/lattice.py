"""Integer lattices of exponent vectors and monomial changes of variables.

A polynomial whose exponent differences generate a proper sublattice of ℤᵏ
is a polynomial in fewer "effective" monomials; solving it in those monomials
and mapping back is cheaper. The same tools complete a primitive vector to a
unimodular basis, which is how torsion families are parametrized.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
import itertools
import math

from sympy import Matrix

from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError

__all__ = [
    "LatticeBasis",
    "apply_monomial_substitution",
    "hermite_normal_form",
    "lattice_fullness",
    "lattice_preimages",
    "map_point",
    "orthogonal_lattice",
    "primitive_vector",
    "reduce_to_full_lattice",
    "unimodular_completion",
]

IntMatrix = list[list[int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x·a + y·b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Zero rows are dropped, pivots are positive and the entries above each
    pivot lie in ``[0, pivot)``.
    """
    basis = [list(map(int, r)) for r in rows if any(r)]
    pivot_row = 0
    for col in range(ncols):
        # gcd-combine everything below pivot_row into a single nonzero entry
        for r in range(pivot_row + 1, len(basis)):
            a, b = basis[pivot_row][col], basis[r][col]
            if b == 0:
                continue
            if a == 0:
                basis[pivot_row], basis[r] = basis[r], basis[pivot_row]
                continue
            x, y, g = _xgcd(a, b)
            top = [x * p + y * q for p, q in zip(basis[pivot_row], basis[r], strict=True)]
            bottom = [(-b // g) * p + (a // g) * q for p, q in zip(basis[pivot_row], basis[r], strict=True)]
            basis[pivot_row], basis[r] = top, bottom
        if pivot_row >= len(basis) or basis[pivot_row][col] == 0:
            continue
        if basis[pivot_row][col] < 0:
            basis[pivot_row] = [-v for v in basis[pivot_row]]
        pivot = basis[pivot_row][col]
        for r in range(pivot_row):
            q = basis[r][col] // pivot
            if q:
                basis[r] = [p - q * v for p, v in zip(basis[r], basis[pivot_row], strict=True)]
        pivot_row += 1
        if pivot_row == len(basis):
            break
    return [row for row in basis if any(row)]


@dataclass(frozen=True)
class LatticeBasis:
    """Generator rows of an integer lattice in ℤᵏ (Hermite form when built here)."""

    rows: tuple[tuple[int, ...], ...]
    ambient: int

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def index(self) -> int:
        """Index in ℤᵏ, or 0 when the lattice is not full rank."""
        if self.rank < self.ambient:
            return 0
        return abs(int(Matrix(self.rows).det(method="bareiss")))

    @property
    def is_full(self) -> bool:
        return self.index == 1


def lattice_fullness(poly: SparsePoly) -> tuple[bool, LatticeBasis]:
    """Decide whether the exponent differences of ``poly`` generate ℤᵏ.

    Raises
    ------
    AlgebraError
        If ``poly`` has fewer than two terms.
    """
    if len(poly.terms) < 2:
        raise AlgebraError("lattice of a monomial is undefined")
    support = poly.support()
    first = support[0]
    diffs = [tuple(a - b for a, b in zip(e, first, strict=True)) for e in support[1:]]
    basis = LatticeBasis(tuple(tuple(r) for r in hermite_normal_form(diffs, poly.nvars)), poly.nvars)
    return basis.is_full, basis


def _rows_of(matrix) -> IntMatrix:
    rows = matrix.rows if isinstance(matrix, LatticeBasis) else matrix
    return [list(map(int, r)) for r in rows]


def apply_monomial_substitution(poly: SparsePoly, matrix) -> SparsePoly:
    """Substitute xᵢ ↦ ∏ⱼ uⱼ^{M[i][j]} and clear the Laurent monomial.

    Raises
    ------
    AlgebraError
        If ``matrix`` is not square of size ``poly.nvars`` or is singular.
    """
    rows = _rows_of(matrix)
    k = poly.nvars
    if len(rows) != k or any(len(r) != k for r in rows):
        raise AlgebraError(f"substitution matrix must be {k}x{k}")
    if Matrix(rows).det(method="bareiss") == 0:
        raise AlgebraError("singular monomial substitution")
    terms = {}
    for exps, coeff in poly.terms.items():
        new = tuple(sum(e * rows[i][j] for i, e in enumerate(exps)) for j in range(k))
        terms[new] = terms.get(new, 0) + coeff
    return SparsePoly(k, terms).normalized()[1]


def map_point(fractions: Sequence[Fraction], matrix) -> tuple[Fraction, ...]:
    """Old coordinates (as exponents k/n) of the point with new coordinates ``fractions``."""
    rows = _rows_of(matrix)
    return tuple(sum((m * f for m, f in zip(row, fractions, strict=True)), Fraction(0)) % 1 for row in rows)


def unimodular_completion(direction: Sequence[int]) -> tuple[IntMatrix, IntMatrix]:
    """Unimodular U with U·v = e₁ for a primitive v, and its inverse W.

    Rows 2…k of U span the lattice orthogonal to v; the first column of W is v.
    """
    v = [int(d) for d in direction]
    k = len(v)
    u = [[int(i == j) for j in range(k)] for i in range(k)]
    # column operations on v mirrored as row operations on U
    for i in range(1, k):
        if v[i] == 0:
            continue
        x, y, g = _xgcd(v[0], v[i])
        a, b = v[0] // g, v[i] // g
        u[0], u[i] = (
            [x * p + y * q for p, q in zip(u[0], u[i], strict=True)],
            [-b * p + a * q for p, q in zip(u[0], u[i], strict=True)],
        )
        v[0], v[i] = g, 0
    if abs(v[0]) != 1:
        raise AlgebraError(f"direction {tuple(direction)} is not primitive")
    if v[0] < 0:
        u[0] = [-p for p in u[0]]
    w = Matrix(u).inv()
    return u, [[int(w[i, j]) for j in range(k)] for i in range(k)]


def orthogonal_lattice(direction: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Hermite basis of {a ∈ ℤᵏ : a·v = 0} for a primitive v."""
    u, _ = unimodular_completion(direction)
    return tuple(tuple(r) for r in hermite_normal_form(u[1:], len(u)))


def reduce_to_full_lattice(poly: SparsePoly) -> tuple[SparsePoly, IntMatrix]:
    """Rewrite ``poly`` in the monomials x^{b₁}, …, x^{b_k} of its difference lattice.

    Returns the reduced polynomial G, whose exponent differences generate ℤᵏ,
    and the basis rows bᵢ. Torsion points of ``poly`` are the preimages of
    those of G under x ↦ (x^{b₁}, …, x^{b_k}); see :func:`lattice_preimages`.

    Raises
    ------
    AlgebraError
        If the support does not span a lattice of full rank.
    """
    _, basis = lattice_fullness(poly)
    if basis.rank < poly.nvars:
        raise AlgebraError("support is not full-dimensional")
    rows = [list(r) for r in basis.rows]
    inverse = Matrix(rows).inv()
    first = poly.support()[0]
    terms = {}
    for exps, coeff in poly.terms.items():
        diff = Matrix([[a - b for a, b in zip(exps, first, strict=True)]])
        coords = diff * inverse
        terms[tuple(int(c) for c in coords)] = coeff
    return SparsePoly(poly.nvars, terms).normalized()[1], rows


def lattice_preimages(values: Sequence[Fraction], rows: Sequence[Sequence[int]]) -> list[tuple[Fraction, ...]]:
    """All θ ∈ (ℚ/ℤ)ᵏ with bᵢ·θ ≡ valuesᵢ (mod 1) for the rows bᵢ."""
    matrix = Matrix(rows)
    det = abs(int(matrix.det(method="bareiss")))
    if det == 0:
        raise AlgebraError("singular lattice basis")
    inverse = matrix.inv()
    k = len(rows)
    found = set()
    for shift in itertools.product(range(det), repeat=k):
        rhs = Matrix([Fraction(v) + s for v, s in zip(values, shift, strict=True)])
        theta = inverse * rhs
        found.add(tuple(Fraction(int(t.p), int(t.q)) % 1 for t in theta))
    return sorted(found)


def primitive_vector(vec) -> tuple[int, ...]:
    """Primitive integer vector with the direction of a rational ``vec``, first nonzero entry positive."""
    fractions = [Fraction(int(v.p), int(v.q)) if hasattr(v, "p") else Fraction(v) for v in vec]
    scale = math.lcm(*(f.denominator for f in fractions))
    ints = [int(f * scale) for f in fractions]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    return tuple(ints) if next(i for i in ints if i) > 0 else tuple(-i for i in ints)
