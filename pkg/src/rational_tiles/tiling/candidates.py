"""Angle tuples decoded from cyclotomic points and torsion families.

A coordinate X = e^{2πiθ} of a solution stands for ``X = e^{iπ·s·v}``, so
v = (2θ + 2m)/s for any integer m. Free angles are enumerated over all
representatives in (0, 2); 1/f over the representatives that make f an
integer of at least 3 (parity and the lower bound are checked by the filters).
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import math

from sympy import Matrix, Rational

from rational_tiles.solver.roots import CyclotomicPoint, TorsionFamily
from rational_tiles.tiling.angles import ANGLE_TAGS, INV_F, AngleForm, format_angles, mirror_angles
from rational_tiles.tiling.exponential import ExponentialForm
from rational_tiles.utils.logger import logger

__all__ = ["CandidateSolution", "FamilySolution", "decode_family", "decode_point"]

MIN_F = 3


@dataclass(frozen=True, order=True)
class CandidateSolution:
    """Four rational angles (π-units) and a tile count; provenance does not affect equality."""

    angles: tuple[Fraction, Fraction, Fraction, Fraction]
    f: int
    case_id: str = field(default="", compare=False)
    provenance: str = field(default="", compare=False)

    @classmethod
    def of(cls, angles: Sequence, f: int, **kwargs) -> "CandidateSolution":
        return cls(tuple(Fraction(a) for a in angles), int(f), **kwargs)

    @property
    def text(self) -> str:
        return format_angles(self.angles)

    def mirrored(self) -> "CandidateSolution":
        return CandidateSolution(mirror_angles(self.angles), self.f, self.case_id, self.provenance)

    def __str__(self) -> str:
        return f"{self.text}, f={self.f}"


@dataclass(frozen=True)
class FamilySolution:
    """Angles as forms in 1/f only, one tuple per admissible f."""

    angles: tuple[AngleForm, AngleForm, AngleForm, AngleForm]
    case_id: str = field(default="", compare=False)
    provenance: str = field(default="", compare=False)

    def at(self, f: int) -> CandidateSolution:
        """The member with f tiles."""
        values = tuple(a.evaluate({INV_F: Fraction(1, f)}) for a in self.angles)
        return CandidateSolution(values, f, self.case_id, f"{self.provenance} at f={f}")

    def mirrored(self) -> "FamilySolution":
        return FamilySolution(mirror_angles(self.angles), self.case_id, self.provenance)

    @property
    def text(self) -> str:
        """``(6,4f-4,12,2f-2)/3f`` style."""
        denominator = math.lcm(
            1, *(c.denominator for a in self.angles for c in (a.constant, a.coefficient(INV_F)))
        )
        nums = ",".join(a.numerator_text(denominator) for a in self.angles)
        return f"({nums})/{'' if denominator == 1 else denominator}f"

    def __str__(self) -> str:
        return self.text


def _representatives(theta: Fraction, scaling: Fraction, low: Fraction, high: Fraction) -> list[Fraction]:
    """All v = (2θ + 2m)/s with low < v < high."""
    step = 2 / scaling
    start = 2 * theta / scaling
    m_low = math.floor((low - start) / step)
    m_high = math.ceil((high - start) / step)
    values = (start + m * step for m in range(m_low, m_high + 1))
    return [v for v in values if low < v < high]


def _angles_at(params: Mapping[str, AngleForm], assignment: Mapping[str, Fraction]) -> tuple[Fraction, ...]:
    return tuple(params[t].evaluate(assignment) for t in ANGLE_TAGS)


def decode_point(
    point: CyclotomicPoint,
    form: ExponentialForm,
    params: Mapping[str, AngleForm],
    provenance: str = "",
) -> list[CandidateSolution]:
    """Every angle tuple a cyclotomic point of a case polynomial can stand for.

    Parameters
    ----------
    point : CyclotomicPoint
        A zero of ``form.poly``.
    form : ExponentialForm
        The substitution behind the polynomial.
    params : mapping
        The case parametrization, angle tag → AngleForm in the case variables.
    """
    choices = []
    for tag, theta, s in zip(form.variables, point.fractions, form.scalings, strict=True):
        if tag == INV_F:
            reps = [
                u
                for u in _representatives(theta, s, Fraction(0), Fraction(1, 2))
                if u <= Fraction(1, MIN_F) and (1 / u).denominator == 1
            ]
        else:
            reps = _representatives(theta, s, Fraction(0), Fraction(2))
        choices.append(reps)
    out = []
    for values in itertools.product(*choices):
        assignment = dict(zip(form.variables, values, strict=True))
        f = int(1 / assignment[INV_F])
        out.append(
            CandidateSolution(
                _angles_at(params, assignment),
                f,
                form.case_id,
                provenance or f"point {point}",
            )
        )
    logger.debug(f"{form.case_id}: point {point} decodes to {len(out)} tuples")
    return out


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def _shift_box(matrix: Matrix, rhs_const: Sequence[Fraction], width: Fraction) -> list[range]:
    """Integer shifts n whose solutions A·L = rhs + 2n can land in (-width, 2 + width)ᵏ."""
    k = matrix.rows
    corners = list(itertools.product((-width, 2 + width), repeat=k))
    ranges = []
    for i in range(k):
        values = [
            (sum(_to_fraction(matrix[i, j]) * corner[j] for j in range(k)) - rhs_const[i]) / 2
            for corner in corners
        ]
        ranges.append(range(math.floor(min(values)), math.ceil(max(values)) + 1))
    return ranges


def decode_family(
    family: TorsionFamily,
    form: ExponentialForm,
    params: Mapping[str, AngleForm],
) -> list[FamilySolution]:
    """Angle families in 1/f carried by a torsion family of a case polynomial.

    Each relation x^a = e^{2πiρ} reads Σ aᵥ·sᵥ·v = 2ρ + 2n. The free angles are
    solved in terms of 1/f for every shift n that can put them in (0, 2). A
    family that fixes 1/f has no such solution and is skipped.
    """
    free = [i for i, tag in enumerate(form.variables) if tag != INV_F]
    (u_index,) = [i for i, tag in enumerate(form.variables) if tag == INV_F]
    rows = [[Fraction(a) * form.scalings[i] for i, a in enumerate(exps)] for exps, _ in family.relations]
    rho = [omega.fraction for _, omega in family.relations]
    matrix = Matrix([[Rational(r[i].numerator, r[i].denominator) for i in free] for r in rows])
    if matrix.rows != matrix.cols or matrix.det() == 0:
        logger.warning(f"{form.case_id}: family {family} fixes 1/f; skipped")
        return []
    inverse = matrix.inv()
    u_column = [r[u_index] for r in rows]
    slope = [-sum(_to_fraction(inverse[i, j]) * u_column[j] for j in range(len(rows))) for i in range(len(free))]
    width = max((abs(s) for s in slope), default=Fraction(0)) / MIN_F
    out = []
    for shift in itertools.product(*_shift_box(matrix, [2 * r for r in rho], width)):
        rhs = [2 * r + 2 * n for r, n in zip(rho, shift, strict=True)]
        intercept = [sum(_to_fraction(inverse[i, j]) * rhs[j] for j in range(len(rows))) for i in range(len(free))]
        if not all(-width < c < 2 + width for c in intercept):
            continue
        forms = {
            form.variables[idx]: AngleForm.build(c, {INV_F: s})
            for idx, c, s in zip(free, intercept, slope, strict=True)
        }
        angles = []
        for tag in ANGLE_TAGS:
            value = params[tag]
            for var, replacement in forms.items():
                value = value.substitute(var, replacement)
            angles.append(value)
        out.append(FamilySolution(tuple(angles), form.case_id, f"family {family}"))
    logger.debug(f"{form.case_id}: family {family} decodes to {len(out)} angle families")
    return out

