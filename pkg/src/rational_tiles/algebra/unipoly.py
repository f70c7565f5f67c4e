"""Dense univariate polynomials over cyclotomic fields.

:class:`UniPoly` is the small exact polynomial type used for resultant
outputs and for specializations such as P(x, ζ) during back-substitution.
Rational polynomials hand their gcd to sympy; genuinely cyclotomic ones run
Euclid over the field.
"""

from fractions import Fraction
import math

from sympy import QQ, Poly, Rational, symbols

from rational_tiles.algebra.cyclotomic import (
    ONE,
    ZERO,
    CyclotomicElement,
    cyclotomic_coefficients,
)
from rational_tiles.errors import AlgebraError

__all__ = ["UniPoly", "cyclotomic_polynomial", "poly_gcd_univariate"]


class UniPoly:
    """Univariate polynomial with :class:`CyclotomicElement` coefficients.

    Parameters
    ----------
    coeffs : sequence
        Coefficients from the constant term upward; ints and Fractions are accepted.
    var : str
        Variable tag used when printing.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "x"):
        values = [CyclotomicElement.coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self.coeffs: tuple[CyclotomicElement, ...] = tuple(values)
        self.var = var

    @classmethod
    def from_sympy(cls, poly: Poly, var: str | None = None) -> "UniPoly":
        """Convert a univariate rational sympy ``Poly``."""
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return cls(coeffs, var or str(poly.gen))

    def to_sympy(self) -> Poly:
        """Convert a rational polynomial to a sympy ``Poly`` over QQ."""
        gen = symbols(self.var)
        coeffs = [c.to_fraction() for c in reversed(self.coeffs)] or [Fraction(0)]
        return Poly([Rational(c.numerator, c.denominator) for c in coeffs], gen, domain=QQ)

    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """True for the zero polynomial."""
        return not self.coeffs

    def is_rational(self) -> bool:
        """True if every coefficient is rational."""
        return all(c.is_rational() for c in self.coeffs)

    @property
    def order(self) -> int:
        """Smallest n with all coefficients in Q(ζₙ)."""
        return math.lcm(1, *(c.order for c in self.coeffs))

    def leading(self) -> CyclotomicElement:
        """Leading coefficient."""
        if not self.coeffs:
            raise AlgebraError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "UniPoly":
        """Scale so the leading coefficient is 1."""
        inv = self.leading().inverse()
        return UniPoly([c * inv for c in self.coeffs], self.var)

    def __call__(self, value) -> CyclotomicElement:
        """Evaluate by Horner's rule."""
        value = CyclotomicElement.coerce(value)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [ZERO] * (size - len(self.coeffs))
        b = list(other.coeffs) + [ZERO] * (size - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b, strict=True)], self.var)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = CyclotomicElement.coerce(other)
            return UniPoly([c * other for c in self.coeffs], self.var)
        if self.is_zero() or other.is_zero():
            return UniPoly([], self.var)
        values = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                values[i + j] = values[i + j] + a * b
        return UniPoly(values, self.var)

    __rmul__ = __mul__

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Euclidean division over the coefficient field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [ZERO] * max(0, len(remainder) - len(other.coeffs) + 1)
        inv = other.leading().inverse()
        d = other.degree
        while len(remainder) - 1 >= d and remainder:
            shift = len(remainder) - 1 - d
            factor = remainder[-1] * inv
            quotient[shift] = factor
            for j, c in enumerate(other.coeffs):
                remainder[shift + j] = remainder[shift + j] - factor * c
            remainder.pop()
            while remainder and remainder[-1].is_zero():
                remainder.pop()
        return UniPoly(quotient, self.var), UniPoly(remainder, self.var)

    def derivative(self) -> "UniPoly":
        """Formal derivative."""
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.var)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            power = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            terms.append(f"{c}*{power}" if power else f"{c}")
        return "UniPoly(" + " + ".join(reversed(terms)) + ")"


def cyclotomic_polynomial(n: int, var: str = "x") -> UniPoly:
    """Return the n-th cyclotomic polynomial Φₙ as a :class:`UniPoly`."""
    return UniPoly(cyclotomic_coefficients(n), var)


def poly_gcd_univariate(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor of ``f`` and ``g``.

    ``gcd(f, 0)`` is ``monic(f)``; ``gcd(0, 0)`` is the zero polynomial.
    """
    if f.is_zero() and g.is_zero():
        return UniPoly([], f.var)
    if g.is_zero():
        return f.monic()
    if f.is_zero():
        return g.monic()
    if f.is_rational() and g.is_rational():
        return UniPoly.from_sympy(f.to_sympy().gcd(g.to_sympy()).monic(), f.var)
    a, b = f, g
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if a.degree > 0 else UniPoly([ONE], f.var)
