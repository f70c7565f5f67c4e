"""The angle compatibility equation of an a³b-quadrilateral.

Any spherical quadrilateral with three edges a and one edge b satisfies

    sin(α − γ/2)·sin(β/2) = sin(γ/2)·sin(δ − β/2).

Four times the difference of the two sides, expanded by product-to-sum, is

    2cos(α−γ/2−β/2) − 2cos(α−γ/2+β/2) − 2cos(γ/2−δ+β/2) + 2cos(γ/2+δ−β/2),

a :class:`TrigExpr` whose arguments are :class:`AngleForm` values in π-units.

Public API
----------
TrigTerm, TrigExpr
compatibility_expression(angles) -> TrigExpr
build_trig_equation(case) -> TrigExpr
compatibility_residual(angles) -> float
compatibility_residual_exact(angles) -> CyclotomicElement
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
import math

from rational_tiles.algebra.cyclotomic import ZERO, CyclotomicElement, zeta
from rational_tiles.tiling.angles import ALPHA, ANGLE_TAGS, BETA, DELTA, GAMMA, AngleForm
from rational_tiles.tiling.cases import CaseSpec, case_parametrization

__all__ = [
    "TrigExpr",
    "TrigTerm",
    "build_trig_equation",
    "compatibility_expression",
    "compatibility_residual",
    "compatibility_residual_exact",
]

SIN, COS = "sin", "cos"


@dataclass(frozen=True)
class TrigTerm:
    """``coefficient · kind(π · argument)``."""

    coefficient: Fraction
    kind: str
    argument: AngleForm

    def canonical(self) -> "TrigTerm":
        """Flip the argument sign so its leading entry is positive (cos is even, sin odd)."""
        lead = next((c for _, c in self.argument.coefficients), self.argument.constant)
        if lead >= 0:
            return self
        sign = -1 if self.kind == SIN else 1
        return TrigTerm(self.coefficient * sign, self.kind, -self.argument)

    def value_exact(self, assignment: Mapping[str, object]) -> CyclotomicElement:
        """Exact value at rational free variables, as an element of some Q(ζₙ)."""
        angle = self.argument.evaluate(assignment)
        # e^{iπ·p/q} = ζ_{2q}^p
        up = zeta(2 * angle.denominator, angle.numerator)
        down = zeta(2 * angle.denominator, -angle.numerator)
        half = Fraction(self.coefficient) / 2
        if self.kind == COS:
            return (up + down) * half
        return (up - down) * zeta(4, -1) * half

    def value(self, assignment: Mapping[str, float]) -> float:
        """Floating-point value at the given angles (π-units)."""
        angle = math.pi * self.argument.evaluate_float(assignment)
        func = math.sin if self.kind == SIN else math.cos
        return float(self.coefficient) * func(angle)

    def __str__(self) -> str:
        return f"{self.coefficient}{self.kind}({self.argument})"


@dataclass(frozen=True)
class TrigExpr:
    """A finite sum of sines and cosines; like terms are merged and zero terms dropped."""

    terms: tuple[TrigTerm, ...]

    @classmethod
    def from_terms(cls, terms: Sequence[TrigTerm]) -> "TrigExpr":
        merged: dict[tuple[str, AngleForm], Fraction] = {}
        for term in terms:
            term = term.canonical()
            if term.kind == SIN and term.argument == AngleForm.build(0):
                continue
            key = (term.kind, term.argument)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(term.coefficient)
        return cls(tuple(TrigTerm(c, kind, arg) for (kind, arg), c in merged.items() if c))

    def evaluate(self, assignment: Mapping[str, float]) -> float:
        """Floating-point value of the sum at the given angles (π-units)."""
        return sum(t.value(assignment) for t in self.terms)

    def evaluate_exact(self, assignment: Mapping[str, object]) -> CyclotomicElement:
        total = ZERO
        for term in self.terms:
            total = total + term.value_exact(assignment)
        return total

    def variables(self) -> tuple[str, ...]:
        seen = {tag for t in self.terms for tag in t.argument.variables}
        return tuple(sorted(seen, key=(*ANGLE_TAGS, "1/f").index))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for t in self.terms:
            c = t.coefficient
            coeff = "" if c == 1 else "-" if c == -1 else str(c)
            pieces.append(f"{coeff}{t.kind}({t.argument})")
        return " + ".join(pieces).replace("+ -", "- ")


def compatibility_expression(angles: Mapping[str, AngleForm]) -> TrigExpr:
    """Four times (left side − right side), expanded into cosines."""
    a, b, c, d = (angles[t] for t in (ALPHA, BETA, GAMMA, DELTA))
    two = Fraction(2)
    return TrigExpr.from_terms(
        [
            TrigTerm(two, COS, a - c / 2 - b / 2),
            TrigTerm(-two, COS, a - c / 2 + b / 2),
            TrigTerm(-two, COS, c / 2 - d + b / 2),
            TrigTerm(two, COS, c / 2 + d - b / 2),
        ]
    )


def build_trig_equation(case: CaseSpec) -> TrigExpr:
    """The compatibility expression with the case parametrization substituted."""
    return compatibility_expression(case_parametrization(case))


def _constant_forms(angles: Sequence) -> dict[str, AngleForm]:
    return {tag: AngleForm.build(value) for tag, value in zip(ANGLE_TAGS, angles, strict=True)}


def compatibility_residual(angles: Sequence[float]) -> float:
    """sin(α−γ/2)sin(β/2) − sin(γ/2)sin(δ−β/2) with angles in π-units."""
    a, b, c, d = (math.pi * float(x) for x in angles)
    return math.sin(a - c / 2) * math.sin(b / 2) - math.sin(c / 2) * math.sin(d - b / 2)


def compatibility_residual_exact(angles: Sequence[Fraction]) -> CyclotomicElement:
    """Four times the residual, exactly, for rational angles in π-units."""
    forms = _constant_forms([Fraction(x) for x in angles])
    return compatibility_expression(forms).evaluate_exact({})
