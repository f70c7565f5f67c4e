"""Sparse Laurent polynomials in up to three variables.

Coefficients are :class:`CyclotomicElement` values and exponent vectors may
be negative. Rational polynomials convert to and from sympy ``Poly`` objects
(after Laurent normalization) so gcds and resultants run in sympy.

Public API
----------
SparsePoly
    Immutable polynomial with exact arithmetic.
galois_conjugate
    Apply ζₙ ↦ ζₙᵏ to every coefficient.
evaluate_at_point
    Exact value at a point whose coordinates are roots of unity.
"""

from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
import cmath
import math

from sympy import QQ, Poly, Rational, symbols

from rational_tiles.algebra.cyclotomic import (
    ZERO,
    CyclotomicElement,
    _canonical,
    _reduce,
    zeta,
)
from rational_tiles.algebra.unipoly import UniPoly
from rational_tiles.errors import AlgebraError

__all__ = ["VAR_NAMES", "SparsePoly", "evaluate_at_point", "galois_conjugate"]

VAR_NAMES = ("x", "y", "z")

Exponent = tuple[int, ...]


class SparsePoly:
    """Sparse Laurent polynomial with cyclotomic coefficients.

    Parameters
    ----------
    nvars : int
        Number of variables (1 to 3), named x, y, z.
    terms : mapping
        Exponent vector → coefficient; zero coefficients are dropped.
    """

    __slots__ = ("_hash", "nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        if not 1 <= nvars <= 3:
            raise AlgebraError(f"SparsePoly supports 1 to 3 variables, got {nvars}")
        cleaned: dict[Exponent, CyclotomicElement] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise AlgebraError(f"exponent {exps} does not have {nvars} entries")
            value = CyclotomicElement.coerce(coeff)
            if not value.is_zero():
                cleaned[exps] = value
        self.nvars = nvars
        self.terms: dict[Exponent, CyclotomicElement] = cleaned
        self._hash: int | None = None

    # ---------------------------------------------------------------- builders
    @classmethod
    def constant(cls, nvars: int, value=1) -> "SparsePoly":
        """The constant polynomial ``value``."""
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "SparsePoly":
        """A single term ``coeff * x^exps``."""
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        """The polynomial consisting of one variable."""
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def from_sympy(cls, poly: Poly, nvars: int | None = None) -> "SparsePoly":
        """Convert a rational sympy ``Poly``; ``nvars`` pads missing generators."""
        nvars = nvars or len(poly.gens)
        terms = {}
        for monom, coeff in poly.terms():
            exps = tuple(monom) + (0,) * (nvars - len(monom))
            terms[exps] = Fraction(int(coeff.p), int(coeff.q))
        return cls(nvars, terms)

    def to_sympy(self, gens: Sequence | None = None) -> Poly:
        """Convert a rational polynomial to a sympy ``Poly`` over QQ.

        Laurent exponents are cleared first; callers who need the stripped
        monomial use :meth:`normalized` themselves.
        """
        _, poly = self.normalized()
        gens = gens or symbols(VAR_NAMES[: self.nvars])
        rep = {}
        for exps, coeff in poly.terms.items():
            value = coeff.to_fraction()
            rep[exps] = Rational(value.numerator, value.denominator)
        if not rep:
            rep = {(0,) * self.nvars: Rational(0)}
        return Poly.from_dict(rep, *gens, domain=QQ)

    # ---------------------------------------------------------------- queries
    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.terms

    def is_monomial(self) -> bool:
        """True if the polynomial has exactly one term."""
        return len(self.terms) == 1

    def is_rational(self) -> bool:
        """True if all coefficients lie in Q."""
        return all(c.is_rational() for c in self.terms.values())

    @property
    def order(self) -> int:
        """Smallest n with every coefficient in Q(ζₙ)."""
        return math.lcm(1, *(c.order for c in self.terms.values()))

    def degree(self, index: int) -> int:
        """Spread of exponents of one variable (max minus min)."""
        if not self.terms:
            return -1
        values = [e[index] for e in self.terms]
        return max(values) - min(values)

    def support(self) -> list[Exponent]:
        """Sorted exponent vectors."""
        return sorted(self.terms)

    def coefficient(self, exps: Sequence[int]) -> CyclotomicElement:
        """Coefficient of one monomial (zero if absent)."""
        return self.terms.get(tuple(exps), ZERO)

    def normalized(self) -> tuple[Exponent, "SparsePoly"]:
        """Shift by the minimal exponent in each variable.

        Returns the stripped monomial's exponent vector and the polynomial
        with all exponents ≥ 0 and some exponent 0 in every variable.
        """
        if not self.terms:
            return (0,) * self.nvars, self
        shift = tuple(min(e[i] for e in self.terms) for i in range(self.nvars))
        if not any(shift):
            return shift, self
        moved = {tuple(a - b for a, b in zip(e, shift, strict=True)): c for e, c in self.terms.items()}
        return shift, SparsePoly(self.nvars, moved)

    # ---------------------------------------------------------------- algebra
    def __add__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, ZERO) + c
        return SparsePoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other) -> "SparsePoly":
        return (-self) + other

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            value = CyclotomicElement.coerce(other)
            return SparsePoly(self.nvars, {e: c * value for e, c in self.terms.items()})
        terms: dict[Exponent, CyclotomicElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2, strict=True))
                terms[key] = terms.get(key, ZERO) + c1 * c2
        return SparsePoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePoly":
        if exponent < 0:
            raise AlgebraError("negative powers of polynomials are not supported")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scaled_to_unit(self, exps: Sequence[int] | None = None) -> "SparsePoly":
        """Divide by one coefficient (default: the smallest monomial's) so it becomes 1."""
        if not self.terms:
            return self
        key = tuple(exps) if exps is not None else min(self.terms)
        return self * self.terms[key].inverse()

    def transform(self, pattern: Sequence[tuple[int, int]]) -> "SparsePoly":
        """Substitute xᵢ ↦ sᵢ·xᵢ^{pᵢ} for a pattern of ``(sign, power)`` pairs."""
        terms = {}
        for exps, c in self.terms.items():
            sign = 1
            new = []
            for e, (s, p) in zip(exps, pattern, strict=True):
                if s < 0 and e % 2:
                    sign = -sign
                new.append(e * p)
            terms[tuple(new)] = c * sign
        return SparsePoly(self.nvars, terms)

    def derivative(self, index: int) -> "SparsePoly":
        """Formal partial derivative."""
        terms = {}
        for exps, c in self.terms.items():
            if exps[index]:
                new = list(exps)
                new[index] -= 1
                terms[tuple(new)] = c * exps[index]
        return SparsePoly(self.nvars, terms)

    def conjugate(self, k: int) -> "SparsePoly":
        """Coefficient-wise Galois action; see :func:`galois_conjugate`."""
        return galois_conjugate(self, k)

    # ---------------------------------------------------------------- evaluation
    def evaluate_roots(self, angles: Sequence[Fraction]) -> CyclotomicElement:
        """Exact value at x_i = e^{2πi·angles[i]}.

        All monomials are powers of one root of unity ζ_N, so the sum is
        accumulated in the group ring of order N and reduced once.
        """
        if len(angles) != self.nvars:
            raise AlgebraError(f"point has {len(angles)} coordinates, polynomial has {self.nvars}")
        if not self.terms:
            return ZERO
        angles = [Fraction(a) % 1 for a in angles]
        n = math.lcm(1, *(a.denominator for a in angles), self.order)
        acc = [Fraction(0)] * n
        for exps, c in self.terms.items():
            shift = sum(e * a for e, a in zip(exps, angles, strict=True)) % 1
            m = (shift * n).numerator
            for j, value in enumerate(c.lifted(n)):
                if value:
                    acc[(j + m) % n] += value
        if n == 1:
            return CyclotomicElement.rational(acc[0])
        return CyclotomicElement._from_canonical(*_canonical(n, _reduce(n, acc)))

    def evaluate_complex(self, values: Sequence[complex]) -> complex:
        """Numeric value (used only as a pre-screen)."""
        total = 0j
        for exps, c in self.terms.items():
            term = c.to_complex()
            for e, v in zip(exps, values, strict=True):
                term *= v**e
            total += term
        return total

    def specialize(self, index: int, angle: Fraction) -> "SparsePoly | CyclotomicElement":
        """Substitute variable ``index`` by e^{2πi·angle}.

        Returns a polynomial in the remaining variables, or an element when
        no variable remains.
        """
        terms: dict[Exponent, CyclotomicElement] = {}
        angle = Fraction(angle) % 1
        for exps, c in self.terms.items():
            r = (exps[index] * angle) % 1
            value = c * zeta(r.denominator, r.numerator)
            rest = exps[:index] + exps[index + 1 :]
            terms[rest] = terms.get(rest, ZERO) + value
        if self.nvars == 1:
            return terms.get((), ZERO)
        return SparsePoly(self.nvars - 1, terms)

    def to_unipoly(self, var: str | None = None) -> UniPoly:
        """Convert a one-variable polynomial (Laurent part stripped)."""
        if self.nvars != 1:
            raise AlgebraError("to_unipoly needs a one-variable polynomial")
        _, poly = self.normalized()
        if not poly.terms:
            return UniPoly([], var or VAR_NAMES[0])
        top = max(e[0] for e in poly.terms)
        coeffs = [poly.terms.get((k,), ZERO) for k in range(top + 1)]
        return UniPoly(coeffs, var or VAR_NAMES[0])

    # ---------------------------------------------------------------- dunder
    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = VAR_NAMES[: self.nvars]
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps, strict=True):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}" if e > 0 else f"{name}^({e})")
            coeff = str(c)
            if factors and c == 1:
                pieces.append("*".join(factors))
            elif factors and c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append("*".join([coeff, *factors]))
        return " + ".join(pieces).replace("+ -", "- ")


def galois_conjugate(poly: SparsePoly, k: int) -> SparsePoly:
    """Replace ζₙ by ζₙᵏ in every coefficient of ``poly``.

    Raises
    ------
    AlgebraError
        If ``k`` is not coprime to the coefficient order of ``poly``.
    """
    n = poly.order
    if math.gcd(k, n) != 1:
        raise AlgebraError(f"Galois index {k} is not coprime to coefficient order {n}")
    return SparsePoly(poly.nvars, {e: c.conjugate(k) for e, c in poly.terms.items()})


def evaluate_at_point(poly: SparsePoly, point) -> CyclotomicElement:
    """Evaluate ``poly`` exactly at a :class:`CyclotomicPoint` (or angle sequence)."""
    coords = getattr(point, "coords", point)
    angles: Iterable[Fraction] = [getattr(c, "fraction", c) for c in coords]
    return poly.evaluate_roots(list(angles))
