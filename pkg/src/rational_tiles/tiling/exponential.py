"""Turn a trigonometric case equation into a Laurent polynomial.

Each variable v of a case (the free angles and 1/f) is replaced by
``X = e^{iπ·s·v}`` with the smallest rational scaling s that makes every
exponent difference an integer. Rational constants inside the arguments become
roots of unity in the coefficients, so the result is a :class:`SparsePoly`
over some Q(ζₙ). It is normalized by dividing by the coefficient of smallest
field order.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
import math

from rational_tiles.algebra.cyclotomic import ZERO, CyclotomicElement, zeta
from rational_tiles.algebra.sparse import VAR_NAMES, SparsePoly
from rational_tiles.errors import AlgebraError
from rational_tiles.tiling.angles import INV_F
from rational_tiles.tiling.cases import CaseSpec
from rational_tiles.tiling.trig import SIN, TrigExpr
from rational_tiles.utils.logger import logger

__all__ = ["ExponentialForm", "derive_scalings", "exponentialize", "header_discrepancies"]


@dataclass(frozen=True)
class ExponentialForm:
    """A case equation as a polynomial, with the substitution that produced it.

    Attributes
    ----------
    case_id : str
    variables : tuple of str
        Angle tags (and ``1/f``) behind x, y (, z), in that order.
    scalings : tuple of Fraction
        s in ``X = e^{iπ·s·v}`` for each variable.
    poly : SparsePoly
        The normalized polynomial.
    """

    case_id: str
    variables: tuple[str, ...]
    scalings: tuple[Fraction, ...]
    poly: SparsePoly

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def substitution_text(self) -> str:
        """E.g. ``x = e^{iπ·δ}, y = e^{4iπ/f}``."""
        parts = []
        names = VAR_NAMES[: self.nvars]
        for name, tag, s in zip(names, self.variables, self.scalings, strict=True):
            coeff = "" if s == 1 else str(s)
            if tag == INV_F:
                parts.append(f"{name} = e^{{{coeff}iπ/f}}")
            else:
                parts.append(f"{name} = e^{{{coeff}iπ·{tag}}}")
        return ", ".join(parts)

    def point_of(self, values: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Root-of-unity exponents k/n of the point for given variable values (π-units)."""
        return tuple((s * Fraction(v) / 2) % 1 for s, v in zip(self.scalings, values, strict=True))


def _fraction_gcd(values: Sequence[Fraction]) -> Fraction:
    denominator = math.lcm(1, *(v.denominator for v in values))
    g = math.gcd(*(int(v * denominator) for v in values))
    return Fraction(g, denominator)


def _monomials(expr: TrigExpr, variables: Sequence[str]):
    """Yield (exponent vector in π-units, phase, coefficient) for each half of each term."""
    for term in expr.terms:
        arg = term.argument
        exps = tuple(arg.coefficient(v) for v in variables)
        half = Fraction(term.coefficient) / 2
        for sign in (1, -1):
            if term.kind == SIN:
                # sin θ = (e^{iθ} - e^{-iθ}) / 2i
                coeff = zeta(4, -1) * (half * sign)
            else:
                coeff = CyclotomicElement.rational(half)
            yield tuple(sign * e for e in exps), sign * arg.constant, coeff


def derive_scalings(expr: TrigExpr, variables: Sequence[str]) -> tuple[Fraction, ...]:
    """Smallest s per variable with all exponent differences divisible by s."""
    monomials = list(_monomials(expr, variables))
    scalings = []
    for i, tag in enumerate(variables):
        values = sorted({m[0][i] for m in monomials})
        diffs = [v - values[0] for v in values[1:]]
        if not diffs:
            logger.warning(f"variable {tag} does not occur in {expr}")
            scalings.append(Fraction(1))
            continue
        scalings.append(_fraction_gcd(diffs))
    return tuple(scalings)


def exponentialize(
    expr: TrigExpr, case: CaseSpec, scalings: Sequence[Fraction] | None = None
) -> ExponentialForm:
    """Rewrite ``expr`` as a polynomial in x (, y, z) for the case variables.

    Parameters
    ----------
    expr : TrigExpr
        The case equation, in the variables of ``case``.
    case : CaseSpec
    scalings : sequence of Fraction, optional
        Use these instead of the derived ones.

    Raises
    ------
    AlgebraError
        If an exponent is not an integer under the declared scalings, or the
        expression vanishes identically.
    """
    variables = case.variables
    if scalings is None:
        scalings = derive_scalings(expr, variables)
    scalings = tuple(Fraction(s) for s in scalings)
    monomials = list(_monomials(expr, variables))
    lows = [min(m[0][i] for m in monomials) for i in range(len(variables))]
    terms: dict[tuple[int, ...], CyclotomicElement] = {}
    for exps, phase, coeff in monomials:
        scaled = [(e - low) / s for e, low, s in zip(exps, lows, scalings, strict=True)]
        if any(x.denominator != 1 for x in scaled):
            raise AlgebraError(
                f"case {case.case_id}: exponent {tuple(str(x) for x in scaled)} is not integral "
                f"under scalings {tuple(str(s) for s in scalings)}"
            )
        key = tuple(int(x) for x in scaled)
        value = coeff * zeta(2 * phase.denominator, phase.numerator)
        terms[key] = terms.get(key, ZERO) + value
    _, poly = SparsePoly(len(variables), terms).normalized()
    if poly.is_zero():
        raise AlgebraError(f"case {case.case_id}: the equation vanishes identically")
    pivot = min(poly.terms, key=lambda e: (poly.terms[e].order, e))
    poly = poly.scaled_to_unit(pivot)
    logger.debug(f"case {case.case_id}: {len(poly.terms)} terms over Q(zeta_{poly.order})")
    return ExponentialForm(case.case_id, variables, scalings, poly)


def header_discrepancies(form: ExponentialForm, case: CaseSpec) -> list[str]:
    """One note per variable whose derived scaling differs from the printed header."""
    notes = []
    for name, tag, derived, printed in zip(
        VAR_NAMES[: form.nvars], form.variables, form.scalings, case.header_scalings, strict=True
    ):
        if derived != printed:
            notes.append(
                f"{case.case_id}: {name} ({tag}) needs scaling {derived}, header prints {printed} [{case.header}]"
            )
    return notes
