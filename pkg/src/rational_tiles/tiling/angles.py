"""Affine angle expressions in π-units.

An :class:`AngleForm` is ``constant + Σ cᵥ·v`` over free variables v, where
v is one of the tile angles or ``1/f``. Everything is exact.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
import math

__all__ = [
    "ALPHA",
    "ANGLE_TAGS",
    "BETA",
    "DELTA",
    "GAMMA",
    "INV_F",
    "MIRROR_TAG",
    "AngleForm",
    "format_angles",
    "mirror_angles",
]

ALPHA, BETA, GAMMA, DELTA = "α", "β", "γ", "δ"
ANGLE_TAGS = (ALPHA, BETA, GAMMA, DELTA)
INV_F = "1/f"
MIRROR_TAG = {ALPHA: DELTA, BETA: GAMMA, GAMMA: BETA, DELTA: ALPHA, INV_F: INV_F}

_ORDER = {tag: i for i, tag in enumerate((*ANGLE_TAGS, INV_F))}


@dataclass(frozen=True)
class AngleForm:
    """``constant + Σ coefficient·variable``; zero coefficients are never stored."""

    constant: Fraction
    coefficients: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def build(cls, constant=0, coefficients: Mapping[str, object] | None = None) -> "AngleForm":
        items = {tag: Fraction(c) for tag, c in (coefficients or {}).items() if Fraction(c)}
        return cls(Fraction(constant), tuple(sorted(items.items(), key=lambda kv: _ORDER.get(kv[0], 99))))

    @classmethod
    def variable(cls, tag: str) -> "AngleForm":
        return cls.build(0, {tag: 1})

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self.coefficients)

    def coefficient(self, tag: str) -> Fraction:
        return dict(self.coefficients).get(tag, Fraction(0))

    def is_constant(self) -> bool:
        return not self.coefficients

    def _combine(self, other: "AngleForm", sign: int) -> "AngleForm":
        items = dict(self.coefficients)
        for tag, c in other.coefficients:
            items[tag] = items.get(tag, Fraction(0)) + sign * c
        return AngleForm.build(self.constant + sign * other.constant, items)

    def __add__(self, other):
        if not isinstance(other, AngleForm):
            other = AngleForm.build(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, AngleForm):
            other = AngleForm.build(other)
        return self._combine(other, -1)

    def __rsub__(self, other):
        return AngleForm.build(other) - self

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return AngleForm.build(self.constant * scalar, {t: c * scalar for t, c in self.coefficients})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / Fraction(scalar))

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        """Exact value at rational values of the free variables.

        Raises
        ------
        KeyError
            If a variable of the form is missing from ``assignment``.
        """
        return self.constant + sum(
            (c * Fraction(assignment[tag]) for tag, c in self.coefficients), Fraction(0)
        )

    def evaluate_float(self, assignment: Mapping[str, float]) -> float:
        return float(self.constant) + sum(float(c) * float(assignment[tag]) for tag, c in self.coefficients)

    def substitute(self, tag: str, value: "AngleForm") -> "AngleForm":
        """Replace ``tag`` by another form."""
        c = self.coefficient(tag)
        if not c:
            return self
        rest = AngleForm.build(self.constant, {t: v for t, v in self.coefficients if t != tag})
        return rest + value * c

    def mirrored(self) -> "AngleForm":
        return AngleForm.build(self.constant, {MIRROR_TAG[t]: c for t, c in self.coefficients})

    def reduced_mod(self, period: Fraction) -> "AngleForm":
        """Same form with the constant reduced into [0, period)."""
        return AngleForm(self.constant % period, self.coefficients)

    def numerator_text(self, denominator: int) -> str:
        """``denominator·(form)`` in f-notation, for a form in ``1/f`` only: ``4f-4`` style."""
        slope = int(self.constant * denominator)
        offset = int(self.coefficient(INV_F) * denominator)
        parts = []
        if slope:
            parts.append(("" if slope == 1 else "-" if slope == -1 else str(slope)) + "f")
        if offset or not parts:
            parts.append(f"{offset:+d}" if parts else str(offset))
        return "".join(parts)

    def __str__(self) -> str:
        parts = []
        for tag, c in self.coefficients:
            if tag == INV_F:
                text = f"{c.numerator}/f" if c.denominator == 1 else f"{c.numerator}/({c.denominator}f)"
            elif c == 1:
                text = tag
            elif c == -1:
                text = f"-{tag}"
            else:
                text = f"{c}{tag}" if c.denominator == 1 else f"({c}){tag}"
            parts.append(text)
        if self.constant or not parts:
            parts.insert(0, str(self.constant))
        return " + ".join(parts).replace("+ -", "- ")


def format_angles(angles: Sequence[Fraction]) -> str:
    """``(p1,p2,p3,p4)/q`` over the least common denominator."""
    q = math.lcm(*(Fraction(a).denominator for a in angles))
    nums = ",".join(str(int(Fraction(a) * q)) for a in angles)
    return f"({nums})/{q}"


def mirror_angles(angles: Sequence) -> tuple:
    """(α, β, γ, δ) ↦ (δ, γ, β, α)."""
    a, b, c, d = angles
    return (d, c, b, a)
