"""The 36 vertex-combination cases and their angle parametrizations.

Each case fixes one or two vertex types. Together with the angle sum
α + β + γ + δ = 2 + 4/f they leave one free angle (two for the αβδ case)
besides 1/f. The exponential substitution recorded with each case in the
reference data is kept as metadata and compared with the derived one.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from sympy import Rational, linsolve, symbols

from rational_tiles.combinatorics.vertices import VertexType
from rational_tiles.errors import CaseError
from rational_tiles.tiling.angles import ANGLE_TAGS, BETA, DELTA, GAMMA, INV_F, MIRROR_TAG, AngleForm

__all__ = ["CaseSpec", "case_parametrization", "enumerate_cases", "get_case"]


@dataclass(frozen=True)
class CaseSpec:
    """One vertex-combination case.

    Attributes
    ----------
    case_id : str
        Vertex codes joined by ``+``, e.g. ``b3+a4``.
    vertices : tuple of VertexType
    free : tuple of str
        Free angle tags, in the order of the exponential variables x (, y).
    group : str
        Which kind of vertex combination the case is.
    header : str
        The exponential substitution as printed with the case.
    header_scalings : tuple of Fraction
        The scalings s in ``var = e^{iπ·s·v}`` read off the printed header,
        one per free angle followed by the one for 1/f.
    """

    case_id: str
    vertices: tuple[VertexType, ...]
    free: tuple[str, ...]
    group: str
    header: str
    header_scalings: tuple[Fraction, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return (*self.free, INV_F)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def mirrored(self) -> "CaseSpec":
        """The case under α↔δ, β↔γ."""
        vertices = tuple(v.mirrored() for v in self.vertices)
        return replace(
            self,
            case_id="+".join(v.code() for v in vertices),
            vertices=vertices,
            free=tuple(MIRROR_TAG[t] for t in self.free),
            header=f"mirror of {self.case_id}: {self.header}",
        )


def _case(codes: str, free: str, group: str, header: str, *scalings) -> CaseSpec:
    vertices = tuple(VertexType.parse(c) for c in codes.split("+"))
    return CaseSpec(codes, vertices, tuple(free), group, header, tuple(Fraction(s) for s in scalings))


_PAIR, _MIXED = "two degree-3 vertices", "degree-3 and degree-4 vertices"

_CASES: tuple[CaseSpec, ...] = (
    _case("abd", BETA + DELTA, "one αβδ vertex", "x=e^{iβ/2}, y=e^{2iδ}, z=e^{4iπ/f}", "1/2", 2, 4),
    _case("a2b+b3", DELTA, _PAIR, "x=e^{iδ}, y=e^{8iπ/f}", 1, 8),
    _case("a2b+b2c", DELTA, _PAIR, "x=e^{2iδ/3}, y=e^{4iπ/3f}", "2/3", "4/3"),
    _case("a2b+c3", DELTA, _PAIR, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("a2b+cd2", DELTA, _PAIR, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("bd2+b2c", DELTA, _PAIR, "x=e^{iδ/2}, y=e^{2iπ/f}", "1/2", 2),
    _case("bd2+c3", DELTA, _PAIR, "x=e^{iδ/2}, y=e^{4iπ/f}", "1/2", 4),
    _case("bd2+bc2", DELTA, _PAIR, "x=e^{iδ/2}, y=e^{4iπ/f}", "1/2", 4),
    _case("bc2+a4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bc2+a3d", DELTA, _MIXED, "x=e^{2iδ/3}, y=e^{4iπ/f}", "2/3", 4),
    _case("bc2+a2d2", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("bc2+ad3", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("bc2+d4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("b3+a4", DELTA, _MIXED, "x=e^{2iδ}, y=e^{8iπ/f}", 2, 8),
    _case("b3+a3d", DELTA, _MIXED, "x=e^{2iδ/3}, y=e^{4iπ/f}", "2/3", 4),
    _case("b3+a2d2", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("b3+ad3", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("b3+d4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("a2b+b4", DELTA, _MIXED, "x=e^{iδ}, y=e^{4iπ/f}", 1, 4),
    _case("a2b+b3c", DELTA, _MIXED, "x=e^{2iδ/5}, y=e^{4iπ/5f}", "2/5", "4/5"),
    _case("a2b+b2c2", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("a2b+b2d2", DELTA, _MIXED, "x=e^{iδ/2}, y=e^{4iπ/f}", "1/2", 4),
    _case("a2b+bc3", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("a2b+bcd2", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("a2b+c4", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("a2b+c2d2", DELTA, _MIXED, "x=e^{iδ}, y=e^{2iπ/f}", 1, 2),
    _case("a2b+d4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{2iπ/f}", 1, 2),
    _case("bd2+a4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bd2+a2b2", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bd2+a2bc", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
    _case("bd2+a2c2", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bd2+b4", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bd2+b3c", GAMMA, _MIXED, "x=e^{iγ/3}, y=e^{4iπ/f}", "1/3", 4),
    _case("bd2+b2c2", GAMMA, _MIXED, "x=e^{iγ}, y=e^{4iπ/f}", 1, 4),
    _case("bd2+bc3", DELTA, _MIXED, "x=e^{2iδ/3}, y=e^{4iπ/f}", "2/3", 4),
    _case("bd2+c4", DELTA, _MIXED, "x=e^{2iδ}, y=e^{4iπ/f}", 2, 4),
)


def enumerate_cases() -> list[CaseSpec]:
    """The αβδ case, the seven two-vertex cases and the 28 single degree-3 cases, in that order."""
    return list(_CASES)


def get_case(case_id: str) -> CaseSpec:
    """Look a case up by id; mirrored ids such as ``acd`` resolve to the mirrored case.

    Raises
    ------
    CaseError
        If no case or mirrored case has this id.
    """
    for case in _CASES:
        if case.case_id == case_id:
            return case
    for case in _CASES:
        mirror = case.mirrored()
        if mirror.case_id == case_id:
            return mirror
    raise CaseError(case_id, "unknown case id")


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def case_parametrization(case: CaseSpec) -> dict[str, AngleForm]:
    """Each angle as an :class:`AngleForm` in the free angles and 1/f.

    Raises
    ------
    CaseError
        If the vertex equations and the angle sum are inconsistent or leave
        more freedom than the case declares.
    """
    angle_syms = dict(zip(ANGLE_TAGS, symbols("alpha beta gamma delta"), strict=True))
    inv_f = symbols("u")
    equations = [sum(n * angle_syms[t] for n, t in zip(v.counts, ANGLE_TAGS, strict=True)) - 2 for v in case.vertices]
    equations.append(sum(angle_syms.values()) - 4 * inv_f - 2)
    unknown_tags = [t for t in ANGLE_TAGS if t not in case.free]
    solutions = linsolve(equations, [angle_syms[t] for t in unknown_tags])
    if not solutions:
        raise CaseError(case.case_id, "vertex equations and angle sum are inconsistent")
    (solution,) = solutions
    allowed = {angle_syms[t] for t in case.free} | {inv_f}
    sym_to_tag = {s: t for t, s in angle_syms.items()} | {inv_f: INV_F}
    params = {t: AngleForm.variable(t) for t in case.free}
    for tag, expr in zip(unknown_tags, solution, strict=True):
        if not expr.free_symbols <= allowed:
            raise CaseError(case.case_id, f"{tag} is not determined by the free angles {case.free}")
        coeffs = expr.as_coefficients_dict()
        constant = _to_fraction(coeffs.get(1, 0))
        params[tag] = AngleForm.build(
            constant, {sym_to_tag[s]: _to_fraction(c) for s, c in coeffs.items() if s != 1}
        )
    return {t: params[t] for t in ANGLE_TAGS}
