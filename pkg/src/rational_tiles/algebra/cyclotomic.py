"""Exact elements of cyclotomic fields.

An element of Q(ζₙ) is stored as its coefficient vector over the power
basis 1, ζₙ, …, ζₙ^{φ(n)−1}, reduced modulo the n-th cyclotomic polynomial.
The order is always the smallest n whose field contains the element, and it
is never ≡ 2 (mod 4) because Q(ζ₂ₘ) = Q(ζₘ) for odd m. With that canonical
form, equality is a tuple comparison and "is rational" means order 1.

Public API
----------
CyclotomicElement
    Immutable field element with exact arithmetic, Galois action and norm.
zeta
    The root of unity e^{2πik/n} as a :class:`CyclotomicElement`.
euler_phi, cyclotomic_coefficients
    Cached helpers shared with the polynomial modules.
"""

from fractions import Fraction
from functools import lru_cache
import cmath
import math
import numbers

from sympy import cyclotomic_poly, divisors, symbols, totient

from rational_tiles.errors import AlgebraError

__all__ = [
    "ONE",
    "ZERO",
    "CyclotomicElement",
    "cyclotomic_coefficients",
    "euler_phi",
    "zeta",
]

_t = symbols("t")


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Return Euler's totient φ(n)."""
    if n < 1:
        raise AlgebraError(f"euler_phi needs n >= 1, got {n}")
    return int(totient(n))


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> tuple[int, ...]:
    """Return the integer coefficients of Φₙ, lowest degree first."""
    if n < 1:
        raise AlgebraError(f"cyclotomic polynomial needs n >= 1, got {n}")
    coeffs = cyclotomic_poly(n, _t, polys=True).all_coeffs()
    return tuple(int(c) for c in reversed(coeffs))


def _reduce(n: int, values: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a coefficient list modulo Φₙ (in place) and return φ(n) entries."""
    phi = euler_phi(n)
    modulus = cyclotomic_coefficients(n)
    for i in range(len(values) - 1, phi - 1, -1):
        c = values[i]
        if c:
            base = i - phi
            for j in range(phi):
                if modulus[j]:
                    values[base + j] -= c * modulus[j]
            values[i] = Fraction(0)
    if len(values) < phi:
        values.extend([Fraction(0)] * (phi - len(values)))
    return tuple(values[:phi])


@lru_cache(maxsize=4096)
def _power(n: int, k: int) -> tuple[Fraction, ...]:
    """Coefficients of ζₙ^k in the power basis of Q(ζₙ)."""
    k %= n
    phi = euler_phi(n)
    if k < phi:
        values = [Fraction(0)] * phi
        values[k] = Fraction(1)
        return tuple(values)
    values = [Fraction(0)] * (k + 1)
    values[k] = Fraction(1)
    return _reduce(n, values)


@lru_cache(maxsize=None)
def _subfield_solver(n: int, d: int):
    """Prepare membership tests for Q(ζ_d) inside Q(ζₙ).

    Returns the embedded basis rows together with pivot columns and the
    inverse of the pivot submatrix, or ``None`` when the rows are degenerate.
    """
    step = n // d
    rows = [_power(n, j * step) for j in range(euler_phi(d))]
    # Row-reduce a copy to locate independent pivot columns.
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(euler_phi(n)):
        pivot = next((i for i in range(r, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                factor = work[i][col] / work[r][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r], strict=True)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    if r < len(work):
        return None
    size = len(rows)
    # Invert the square submatrix rows[:, pivots] by Gauss-Jordan.
    aug = [[rows[i][p] for p in pivots] + [Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = next(i for i in range(col, size) if aug[i][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [a / lead for a in aug[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col], strict=True)]
    inverse = [row[size:] for row in aug]
    return rows, tuple(pivots), inverse


def _restrict(n: int, d: int, coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...] | None:
    """Return the Q(ζ_d) coordinates of ``coeffs`` if it lies in that subfield."""
    solver = _subfield_solver(n, d)
    if solver is None:
        return None
    rows, pivots, inverse = solver
    picked = [coeffs[p] for p in pivots]
    size = len(rows)
    # c = picked · inverse  (row vector times matrix)
    sub = [sum((picked[i] * inverse[i][j] for i in range(size)), Fraction(0)) for j in range(size)]
    for col in range(len(coeffs)):
        value = sum((sub[j] * rows[j][col] for j in range(size) if sub[j]), Fraction(0))
        if value != coeffs[col]:
            return None
    return tuple(sub)


def _lift(order: int, coeffs: tuple[Fraction, ...], target: int) -> list[Fraction]:
    """Embed an element of Q(ζ_order) into Q(ζ_target) (``order`` divides ``target``)."""
    if order == target:
        return list(coeffs)
    step = target // order
    values = [Fraction(0)] * euler_phi(target)
    for j, c in enumerate(coeffs):
        if c:
            for i, p in enumerate(_power(target, j * step)):
                if p:
                    values[i] += c * p
    return values


def _canonical(n: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    """Shrink ``(n, coeffs)`` to the minimal order representing the same element."""
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    for d in divisors(n):
        if d == 1 or d == n or d % 4 == 2:
            continue
        restricted = _restrict(n, d, coeffs)
        if restricted is not None:
            return d, restricted
    return n, coeffs


class CyclotomicElement:
    """An exact element of the cyclotomic field Q(ζₙ).

    Parameters
    ----------
    order : int
        Any n with the element in Q(ζₙ); it is shrunk to the minimal order.
    coeffs : sequence of rational numbers
        Coefficients of 1, ζₙ, ζₙ², … (any length; reduced modulo Φₙ).
    """

    __slots__ = ("_coeffs", "_order")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise AlgebraError(f"cyclotomic order must be >= 1, got {order}")
        values = [Fraction(c) for c in coeffs] or [Fraction(0)]
        if order % 4 == 2:
            # ζₙ = −ζ_{n/2}^{(n/2+1)/2} for n ≡ 2 (mod 4)
            half = order // 2
            root = _lift(1, (Fraction(1),), half)
            zeta_half = [-c for c in _power(half, (half + 1) // 2)]
            acc = [Fraction(0)] * euler_phi(half)
            power = root
            for c in values:
                if c:
                    acc = [a + c * p for a, p in zip(acc, power, strict=True)]
                power = list(_mul_reduced(half, tuple(power), tuple(zeta_half)))
            order, reduced = half, tuple(acc)
        else:
            reduced = _reduce(order, values)
        self._order, self._coeffs = _canonical(order, reduced)

    @classmethod
    def _from_canonical(cls, order: int, coeffs: tuple[Fraction, ...]) -> "CyclotomicElement":
        obj = cls.__new__(cls)
        obj._order, obj._coeffs = order, coeffs
        return obj

    @classmethod
    def rational(cls, value) -> "CyclotomicElement":
        """Build an order-1 element from an int or Fraction."""
        return cls._from_canonical(1, (Fraction(value),))

    @classmethod
    def coerce(cls, value) -> "CyclotomicElement":
        """Return ``value`` as an element (accepts ints and Fractions)."""
        if isinstance(value, CyclotomicElement):
            return value
        if isinstance(value, numbers.Rational):
            return cls.rational(value)
        raise TypeError(f"cannot use {type(value).__name__} as a cyclotomic element")

    # ------------------------------------------------------------------
    @property
    def order(self) -> int:
        """Minimal n with the element in Q(ζₙ)."""
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coefficients at :attr:`order`."""
        return self._coeffs

    def is_zero(self) -> bool:
        """Return True for the zero element."""
        return self._order == 1 and self._coeffs[0] == 0

    def is_rational(self) -> bool:
        """Return True if the element lies in Q."""
        return self._order == 1

    def to_fraction(self) -> Fraction:
        """Return the rational value; raises if the element is not rational."""
        if self._order != 1:
            raise AlgebraError(f"{self!r} is not rational")
        return self._coeffs[0]

    def to_complex(self) -> complex:
        """Numeric value (for pre-screening and display only)."""
        n = self._order
        return sum(
            (float(c) * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(self._coeffs) if c),
            0j,
        )

    def lifted(self, target: int) -> tuple[Fraction, ...]:
        """Coefficients in the power basis of Q(ζ_target); ``order`` must divide ``target``."""
        if target % self._order:
            raise AlgebraError(f"order {self._order} does not divide {target}")
        return tuple(_lift(self._order, self._coeffs, target))

    # ------------------------------------------------------------------
    def _common(self, other: "CyclotomicElement") -> tuple[int, list[Fraction], list[Fraction]]:
        n = math.lcm(self._order, other._order)
        return n, _lift(self._order, self._coeffs, n), _lift(other._order, other._coeffs, n)

    def __add__(self, other):
        try:
            other = CyclotomicElement.coerce(other)
        except TypeError:
            return NotImplemented
        if self._order == 1 and other._order == 1:
            return CyclotomicElement._from_canonical(1, (self._coeffs[0] + other._coeffs[0],))
        n, a, b = self._common(other)
        return CyclotomicElement._from_canonical(
            *_canonical(n, tuple(x + y for x, y in zip(a, b, strict=True)))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._from_canonical(self._order, tuple(-c for c in self._coeffs))

    def __sub__(self, other):
        try:
            other = CyclotomicElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CyclotomicElement.coerce(other) - self

    def __mul__(self, other):
        try:
            other = CyclotomicElement.coerce(other)
        except TypeError:
            return NotImplemented
        if other._order == 1:
            c = other._coeffs[0]
            if c == 0:
                return ZERO
            return CyclotomicElement._from_canonical(self._order, tuple(x * c for x in self._coeffs))
        if self._order == 1:
            return other * self
        n, a, b = self._common(other)
        return CyclotomicElement._from_canonical(*_canonical(n, _mul_reduced(n, tuple(a), tuple(b))))

    __rmul__ = __mul__

    def conjugate(self, k: int) -> "CyclotomicElement":
        """Apply the Galois automorphism ζ ↦ ζ^k (k must be a unit mod the order)."""
        n = self._order
        if math.gcd(k, n) != 1:
            raise AlgebraError(f"Galois index {k} is not coprime to order {n}")
        if n == 1:
            return self
        values = [Fraction(0)] * euler_phi(n)
        for j, c in enumerate(self._coeffs):
            if c:
                for i, p in enumerate(_power(n, j * k)):
                    if p:
                        values[i] += c * p
        return CyclotomicElement._from_canonical(*_canonical(n, tuple(values)))

    def norm(self) -> Fraction:
        """Field norm from Q(ζₙ) to Q at the element's own order."""
        n = self._order
        result = CyclotomicElement.rational(1)
        for k in range(1, n + 1):
            if math.gcd(k, n) == 1:
                result = result * self.conjugate(k)
        return result.to_fraction()

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse via the product of the nontrivial conjugates."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        if self._order == 1:
            return CyclotomicElement.rational(1 / self._coeffs[0])
        n = self._order
        cofactor = CyclotomicElement.rational(1)
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                cofactor = cofactor * self.conjugate(k)
        norm = (self * cofactor).to_fraction()
        return cofactor * (1 / norm)

    def __truediv__(self, other):
        try:
            other = CyclotomicElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CyclotomicElement.coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            return self._order == 1 and self._coeffs[0] == other
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        if self._order == 1:
            return hash(self._coeffs[0])
        return hash((self._order, self._coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self._order == 1:
            return f"CyclotomicElement({self._coeffs[0]})"
        return f"CyclotomicElement(order={self._order}, coeffs={[str(c) for c in self._coeffs]})"

    def __str__(self):
        if self._order == 1:
            return str(self._coeffs[0])
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            power = "" if k == 0 else (f"zeta({self._order})" + (f"^{k}" if k > 1 else ""))
            if not power:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"


def _mul_reduced(n: int, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Multiply two coefficient vectors of Q(ζₙ) and reduce modulo Φₙ."""
    values = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    values[i + j] += x * y
    return _reduce(n, values)


def zeta(n: int, k: int = 1) -> CyclotomicElement:
    """Return e^{2πik/n} as an exact element."""
    if n < 1:
        raise AlgebraError(f"root of unity order must be >= 1, got {n}")
    r = Fraction(k, n) % 1
    q = r.denominator
    if q == 1:
        return ONE
    if q % 4 == 2:
        return -zeta(q, r.numerator - q // 2)
    return CyclotomicElement._from_canonical(q, _power(q, r.numerator))


ZERO = CyclotomicElement._from_canonical(1, (Fraction(0),))
ONE = CyclotomicElement._from_canonical(1, (Fraction(1),))
