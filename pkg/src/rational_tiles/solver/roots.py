"""Exact solution objects: roots of unity, points and torsion families."""

from dataclasses import dataclass, field
from fractions import Fraction
import math

from rational_tiles.algebra.cyclotomic import CyclotomicElement, zeta
from rational_tiles.algebra.sparse import VAR_NAMES
from rational_tiles.errors import AlgebraError
from rational_tiles.solver.lattice import orthogonal_lattice

__all__ = ["CyclotomicPoint", "RootOfUnity", "TorsionFamily"]


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """The root of unity e^{2πik/n} with 0 ≤ k < n in lowest terms.

    Build instances through :meth:`from_fraction` or :meth:`of`; the
    constructor itself only validates.
    """

    fraction: Fraction

    def __post_init__(self):
        value = Fraction(self.fraction)
        if not 0 <= value < 1:
            raise AlgebraError(f"root of unity exponent {value} is not in [0, 1)")
        object.__setattr__(self, "fraction", value)

    @classmethod
    def from_fraction(cls, value) -> "RootOfUnity":
        """e^{2πi·value}, reducing ``value`` modulo 1."""
        return cls(Fraction(value) % 1)

    @classmethod
    def of(cls, k: int, n: int) -> "RootOfUnity":
        """e^{2πik/n}."""
        if n < 1:
            raise AlgebraError(f"root of unity order must be >= 1, got {n}")
        return cls.from_fraction(Fraction(k, n))

    @property
    def k(self) -> int:
        return self.fraction.numerator

    @property
    def n(self) -> int:
        """Multiplicative order."""
        return self.fraction.denominator

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity.from_fraction(self.fraction + other.fraction)

    def __pow__(self, exponent: int) -> "RootOfUnity":
        return RootOfUnity.from_fraction(self.fraction * exponent)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.from_fraction(-self.fraction)

    def galois(self, j: int) -> "RootOfUnity":
        """Image under ζₙ ↦ ζₙʲ; ``j`` must be coprime to the order."""
        if math.gcd(j, self.n) != 1:
            raise AlgebraError(f"{j} is not coprime to the order {self.n}")
        return self**j

    def to_element(self) -> CyclotomicElement:
        return zeta(self.n, self.k)

    def __str__(self):
        return f"{self.k}/{self.n}"


@dataclass(frozen=True, order=True)
class CyclotomicPoint:
    """A tuple of roots of unity, one per variable."""

    coords: tuple[RootOfUnity, ...]

    @classmethod
    def from_fractions(cls, values) -> "CyclotomicPoint":
        return cls(tuple(RootOfUnity.from_fraction(v) for v in values))

    @property
    def fractions(self) -> tuple[Fraction, ...]:
        return tuple(c.fraction for c in self.coords)

    @property
    def order(self) -> int:
        return math.lcm(*(c.n for c in self.coords))

    def galois(self, j: int) -> "CyclotomicPoint":
        return CyclotomicPoint(tuple(c**j for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class TorsionFamily:
    """A one-parameter torsion coset ``{base · t^direction : t a root of unity}``.

    ``relations`` lists pairs ``(a, ω)`` meaning x^a = ω, with the vectors a
    forming the Hermite basis of the lattice orthogonal to ``direction``.
    Equality and hashing only look at the direction and the relations, so two
    descriptions of one coset compare equal.
    """

    direction: tuple[int, ...]
    relations: tuple[tuple[tuple[int, ...], RootOfUnity], ...]
    base: CyclotomicPoint = field(compare=False)

    @classmethod
    def through(cls, base: CyclotomicPoint, direction) -> "TorsionFamily":
        """The coset through ``base`` along the primitive vector ``direction``."""
        direction = tuple(int(d) for d in direction)
        if len(direction) != len(base):
            raise AlgebraError("family direction and base point have different arity")
        if math.gcd(*direction) != 1:
            raise AlgebraError(f"family direction {direction} is not primitive")
        if next(d for d in direction if d) < 0:
            direction = tuple(-d for d in direction)
        relations = []
        for row in orthogonal_lattice(direction):
            value = sum((e * c for e, c in zip(row, base.fractions, strict=True)), Fraction(0))
            relations.append((row, RootOfUnity.from_fraction(value)))
        return cls(direction, tuple(relations), base)

    @property
    def rank(self) -> int:
        return len(self.relations)

    @property
    def nvars(self) -> int:
        return len(self.direction)

    def member(self, t) -> CyclotomicPoint:
        """The coset point at parameter e^{2πi·t}."""
        t = Fraction(t)
        return CyclotomicPoint(
            tuple(
                c * RootOfUnity.from_fraction(d * t)
                for c, d in zip(self.base.coords, self.direction, strict=True)
            )
        )

    def contains(self, point: CyclotomicPoint) -> bool:
        """True if ``point`` satisfies every relation of the family."""
        for exps, omega in self.relations:
            value = sum((e * c for e, c in zip(exps, point.fractions, strict=True)), Fraction(0))
            if value % 1 != omega.fraction:
                return False
        return True

    def samples(self, order_cap: int = 120, limit: int = 10) -> list[CyclotomicPoint]:
        """Members at parameters k/n, n = 1, 2, … up to ``order_cap``."""
        out = []
        for n in range(1, order_cap + 1):
            for k in range(n):
                if math.gcd(k, n) == 1:
                    out.append(self.member(Fraction(k, n)))
                    if len(out) >= limit:
                        return out
        return out

    def galois(self, j: int) -> "TorsionFamily":
        return TorsionFamily.through(self.base.galois(j), self.direction)

    def relations_text(self) -> list[str]:
        """Relations rendered like ``x*y^-1 = 1/4`` (right side is the exponent k/n)."""
        names = VAR_NAMES[: self.nvars]
        out = []
        for exps, omega in self.relations:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps, strict=True) if e]
            out.append(f"{'*'.join(factors) or '1'} = {omega}")
        return out

    def __str__(self):
        return "{" + ", ".join(self.relations_text()) + "}"
