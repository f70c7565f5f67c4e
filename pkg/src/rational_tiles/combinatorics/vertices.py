"""Vertex types, counting constraints and balance certificates.

A vertex of an a³b-tiling is a multiset of the four tile angles summing to
2 (π-units). For a candidate angle tuple this module enumerates the possible
vertex types and decides whether nonnegative multiplicities exist that use
every angle exactly f times over f + 2 vertices.

Public API
----------
VertexType, VertexSpectrum
enumerate_vertex_types(angles, f, max_degree=None)
balance_feasible(angles, f) -> BalanceResult
degree3_constraint_check(angles, f)
parse_spectrum(text, f)
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import itertools
import re

from rational_tiles.utils.logger import logger

__all__ = [
    "BalanceResult",
    "VertexSpectrum",
    "VertexType",
    "balance_feasible",
    "degree3_constraint_check",
    "enumerate_vertex_types",
    "parse_spectrum",
]

ANGLE_LETTERS = "abcd"
GREEK = "αβγδ"


@dataclass(frozen=True, order=True)
class VertexType:
    """Counts (n_α, n_β, n_γ, n_δ) of the angles meeting at a vertex."""

    counts: tuple[int, int, int, int]

    @classmethod
    def parse(cls, text: str) -> "VertexType":
        """Read the compact notation, e.g. ``a2b`` for α²β or ``bcd2`` for βγδ²."""
        counts = [0, 0, 0, 0]
        matches = re.findall(r"([abcd])(\d*)", text)
        if not matches or "".join(m[0] + m[1] for m in matches) != text:
            raise ValueError(f"bad vertex notation {text!r}")
        for letter, power in matches:
            counts[ANGLE_LETTERS.index(letter)] += int(power or 1)
        return cls(tuple(counts))

    @property
    def degree(self) -> int:
        return sum(self.counts)

    @property
    def is_a2b(self) -> bool:
        """Degree 3 with an α or δ (two a-edges and one b-edge meet)."""
        return self.degree == 3 and self.counts[0] + self.counts[3] > 0

    def angle_sum(self, angles: Sequence[Fraction]) -> Fraction:
        return sum((n * a for n, a in zip(self.counts, angles, strict=True)), Fraction(0))

    def mirrored(self) -> "VertexType":
        """Swap α↔δ and β↔γ."""
        a, b, c, d = self.counts
        return VertexType((d, c, b, a))

    def code(self) -> str:
        return "".join(
            letter + (str(n) if n > 1 else "") for letter, n in zip(ANGLE_LETTERS, self.counts, strict=True) if n
        )

    def __str__(self) -> str:
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        return "".join(
            greek + (str(n).translate(sup) if n > 1 else "")
            for greek, n in zip(GREEK, self.counts, strict=True)
            if n
        )


def enumerate_vertex_types(
    angles: Sequence[Fraction], f: int | None = None, max_degree: int | None = None
) -> list[VertexType]:
    """All vertex types of degree ≥ 3 for ``angles`` with an even number of α and δ.

    ``f`` is accepted for signature symmetry with the other checks and does
    not change the result.
    """
    angles = [Fraction(a) for a in angles]
    if any(a <= 0 for a in angles):
        raise ValueError("angles must be positive")
    bounds = [int(2 / a) for a in angles]
    found = []
    for counts in itertools.product(*(range(b + 1) for b in bounds)):
        vertex = VertexType(tuple(counts))
        if vertex.degree < 3 or (max_degree is not None and vertex.degree > max_degree):
            continue
        if (counts[0] + counts[3]) % 2:
            continue
        if vertex.angle_sum(angles) == 2:
            found.append(vertex)
    return sorted(found, key=lambda v: (v.degree, tuple(-c for c in v.counts)))


@dataclass
class VertexSpectrum:
    """Multiplicities of vertex types in a hypothetical tiling by ``f`` tiles."""

    multiplicities: dict[VertexType, int]
    f: int

    def angle_totals(self) -> tuple[int, int, int, int]:
        totals = [0, 0, 0, 0]
        for vertex, mult in self.multiplicities.items():
            for i, n in enumerate(vertex.counts):
                totals[i] += n * mult
        return tuple(totals)

    def degree_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for vertex, mult in self.multiplicities.items():
            out[vertex.degree] = out.get(vertex.degree, 0) + mult
        return out

    def is_consistent(self, angles: Sequence[Fraction] | None = None) -> bool:
        """Balance (each angle f times) and both Euler counts; optionally vertex sums too."""
        if angles is not None and any(v.angle_sum(angles) != 2 for v in self.multiplicities):
            return False
        if any(t != self.f for t in self.angle_totals()):
            return False
        v = self.degree_counts()
        f_count = 6 + sum((k - 3) * n for k, n in v.items() if k >= 4)
        v3 = 8 + sum((k - 4) * n for k, n in v.items() if k >= 5)
        return f_count == self.f and v.get(3, 0) == v3

    def __str__(self) -> str:
        ordered = sorted(self.multiplicities.items(), key=lambda item: (item[0].degree, item[0].counts))
        return ", ".join(f"{mult}{vertex}" for vertex, mult in ordered if mult)


def parse_spectrum(text: str, f: int) -> VertexSpectrum:
    """Read ``8bd2+8a2bc+2c4`` style notation into a :class:`VertexSpectrum`."""
    multiplicities: dict[VertexType, int] = {}
    for chunk in text.replace(" ", "").split("+"):
        match = re.fullmatch(r"(\d*)([abcd][abcd\d]*)", chunk)
        if not match:
            raise ValueError(f"bad spectrum entry {chunk!r}")
        vertex = VertexType.parse(match.group(2))
        multiplicities[vertex] = multiplicities.get(vertex, 0) + int(match.group(1) or 1)
    return VertexSpectrum(multiplicities, f)


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of the counting test.

    ``witness`` is a feasible spectrum when ``feasible``; otherwise
    ``certificate`` holds a vector λ over (#α, #β, #γ, #δ, #vertices) with
    λ·column ≥ 0 for every vertex type and λ·rhs < 0, when one with small
    entries exists.
    """

    feasible: bool
    vertex_types: tuple[VertexType, ...]
    witness: VertexSpectrum | None = None
    certificate: tuple[int, ...] | None = None
    explanation: str = field(default="")


def _columns(types: Sequence[VertexType]) -> list[tuple[int, ...]]:
    return [(*v.counts, 1) for v in types]


def _search(columns: list[tuple[int, ...]], rhs: tuple[int, ...]) -> list[int] | None:
    """Nonnegative integer m with Σ mᵢ·columnᵢ = rhs, by memoized depth-first search."""

    @lru_cache(maxsize=None)
    def solve(index: int, remaining: tuple[int, ...]) -> tuple[int, ...] | None:
        if not any(remaining):
            return (0,) * (len(columns) - index)
        if index == len(columns):
            return None
        col = columns[index]
        limit = min((r // c for r, c in zip(remaining, col, strict=True) if c), default=0)
        for m in range(limit, -1, -1):
            rest = tuple(r - m * c for r, c in zip(remaining, col, strict=True))
            tail = solve(index + 1, rest)
            if tail is not None:
                return (m, *tail)
        return None

    result = solve(0, rhs)
    return list(result) if result is not None else None


def _farkas_certificate(columns: list[tuple[int, ...]], rhs: tuple[int, ...]) -> tuple[int, ...] | None:
    best = None
    for lam in itertools.product(range(-2, 3), repeat=len(rhs)):
        if not any(lam):
            continue
        if all(sum(a * b for a, b in zip(lam, col, strict=True)) >= 0 for col in columns):
            if sum(a * b for a, b in zip(lam, rhs, strict=True)) < 0:
                weight = sum(abs(a) for a in lam)
                if best is None or weight < best[0]:
                    best = (weight, lam)
    return best[1] if best else None


def _certificate_text(lam: Sequence[int], f: int) -> str:
    names = ["#α", "#β", "#γ", "#δ", "#vertices"]
    lhs = " + ".join(f"{c}·{n}" if c != 1 else n for c, n in zip(lam, names, strict=True) if c)
    value = sum(c * r for c, r in zip(lam, (f, f, f, f, f + 2), strict=True))
    return f"{lhs} ≥ 0 at every vertex type, but balance forces it to equal {value}"


def balance_feasible(angles: Sequence[Fraction], f: int) -> BalanceResult:
    """Decide whether the vertex types of ``angles`` admit a balanced spectrum for ``f`` tiles.

    The constraints are #α = #β = #γ = #δ = f over all vertices and
    f + 2 vertices in total (Euler's formula for quadrilateral tilings).
    """
    types = tuple(enumerate_vertex_types(angles))
    columns = _columns(types)
    rhs = (f, f, f, f, f + 2)
    if types:
        solution = _search(columns, rhs)
        if solution is not None:
            spectrum = VertexSpectrum({t: m for t, m in zip(types, solution, strict=True) if m}, f)
            return BalanceResult(True, types, witness=spectrum, explanation=str(spectrum))
    certificate = _farkas_certificate(columns, rhs)
    if certificate is not None:
        text = _certificate_text(certificate, f)
    elif not types:
        text = "no vertex type exists"
    else:
        text = "exhaustive search over multiplicities found no balanced spectrum"
    logger.debug(f"balance infeasible for {tuple(str(a) for a in angles)}, f={f}: {text}")
    return BalanceResult(False, types, certificate=certificate, explanation=text)


_A2B_PAIRS = {
    frozenset({VertexType.parse("abd"), VertexType.parse("cd2")}),
    frozenset({VertexType.parse("acd"), VertexType.parse("a2b")}),
    frozenset({VertexType.parse("a2b"), VertexType.parse("cd2")}),
}
_DEGREE3_PAIRS = {
    frozenset({VertexType.parse(a), VertexType.parse(b)})
    for a, b in (
        ("a2b", "b3"),
        ("a2b", "b2c"),
        ("a2b", "c3"),
        ("a2b", "cd2"),
        ("b2c", "bd2"),
        ("bc2", "bd2"),
        ("bd2", "c3"),
    )
}
_DEGREE3_SINGLES = {VertexType.parse(code) for code in ("a2b", "bd2", "b3", "bc2")}
_EARTH_MAP = {VertexType.parse("abd"), VertexType.parse("acd")}


def _up_to_mirror(items: Iterable[frozenset]) -> set[frozenset]:
    return {s for item in items for s in (item, frozenset(v.mirrored() for v in item))}


def degree3_constraint_check(angles: Sequence[Fraction], f: int | None = None) -> bool:
    """Whether the degree-3 vertex types of ``angles`` fit the allowed combinations.

    At most two a²b-vertices, and two only in an allowed pairing; with αβδ or
    αγδ anything else goes; otherwise the degree-3 set must be one of the
    allowed single types or pairs, up to the α↔δ, β↔γ reflection.
    """
    degree3 = frozenset(v for v in enumerate_vertex_types(angles, max_degree=3))
    if not degree3:
        return False
    a2b = frozenset(v for v in degree3 if v.is_a2b)
    if len(a2b) >= 3:
        return False
    if len(a2b) == 2 and a2b not in _up_to_mirror(_A2B_PAIRS):
        return False
    if degree3 & _EARTH_MAP:
        return True
    if len(degree3) == 1:
        (only,) = degree3
        return only in _DEGREE3_SINGLES or only.mirrored() in _DEGREE3_SINGLES
    return degree3 in _up_to_mirror(_DEGREE3_PAIRS)

