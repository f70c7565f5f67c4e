"""Exact checks that an angle tuple can belong to an a³b-monotile.

:func:`geometric_filter` runs every necessary condition on a candidate and
returns all violated ones, so dismissals can be audited. Reason codes:

``angle-range``
    some angle outside (0, 2)
``tile-count``
    f is not an even integer ≥ 6
``angle-sum``
    α + β + γ + δ ≠ 2 + 4/f
``symmetric``
    α = δ and β = γ (the tile is a symmetric quadrilateral)
``two-large-angles``
    more than one angle ≥ 1
``order-mismatch``
    β < γ and α > δ (and β > γ and α < δ) are not equivalent
``beta-delta``
    β = δ without α = 1 or the converse; for convex tiles also β > δ ⇔ α < γ
``edge-inequality``
    2α + β > 1 or β + 2γ > 1 fails while δ ≤ 1
``convex-inequality``
    one of α+δ < 1+β, α+δ < 1+γ, α+β < 1+δ, γ+δ < 1+α fails for a convex tile
"""

from dataclasses import dataclass
from fractions import Fraction

from rational_tiles.tiling.candidates import CandidateSolution, FamilySolution
from rational_tiles.tiling.trig import compatibility_residual_exact

__all__ = ["FILTER_REASONS", "FamilyAdmissibility", "geometric_filter", "scan_family", "verify_exact"]

FILTER_REASONS = (
    "angle-range",
    "tile-count",
    "angle-sum",
    "symmetric",
    "two-large-angles",
    "order-mismatch",
    "beta-delta",
    "edge-inequality",
    "convex-inequality",
)


def verify_exact(sol: CandidateSolution) -> bool:
    """True iff the compatibility equation holds exactly at the solution's angles."""
    return compatibility_residual_exact(sol.angles).is_zero()


def geometric_filter(sol: CandidateSolution) -> tuple[bool, list[str]]:
    """Run every necessary condition; return ``(passed, violated reason codes)``."""
    a, b, c, d = (Fraction(x) for x in sol.angles)
    f = sol.f
    reasons = []
    if not all(0 < x < 2 for x in (a, b, c, d)):
        reasons.append("angle-range")
    if f < 6 or f % 2:
        reasons.append("tile-count")
    if a + b + c + d != 2 + Fraction(4, f):
        reasons.append("angle-sum")
    if a == d and b == c:
        reasons.append("symmetric")
    if sum(x >= 1 for x in (a, b, c, d)) > 1:
        reasons.append("two-large-angles")
    if (b < c) != (a > d) or (b > c) != (a < d):
        reasons.append("order-mismatch")
    convex = all(x < 1 for x in (a, b, c, d))
    beta_delta = (b == d) != (a == 1)
    if convex and ((b > d) != (a < c) or (b < d) != (a > c)):
        beta_delta = True
    if beta_delta:
        reasons.append("beta-delta")
    if d <= 1 and not (2 * a + b > 1 and b + 2 * c > 1):
        reasons.append("edge-inequality")
    if convex and not (a + d < 1 + b and a + d < 1 + c and a + b < 1 + d and c + d < 1 + a):
        reasons.append("convex-inequality")
    return not reasons, reasons


@dataclass(frozen=True)
class FamilyAdmissibility:
    """Which members of a family pass :func:`geometric_filter` for even f in [6, f_max].

    ``threshold`` is the start of the passing tail (every even f from it up to
    ``f_max`` passes); ``infinite`` means the whole upper half of the range passes.
    """

    passing: tuple[int, ...]
    threshold: int | None
    infinite: bool
    f_max: int

    @property
    def condition(self) -> str:
        if self.infinite:
            return f"all even f >= {self.threshold}"
        return "f in {" + ", ".join(map(str, self.passing)) + "}" if self.passing else "none"

    @property
    def isolated(self) -> tuple[int, ...]:
        """Passing f below the tail."""
        if self.threshold is None:
            return self.passing
        return tuple(f for f in self.passing if f < self.threshold)


def scan_family(family: FamilySolution, f_max: int = 200) -> FamilyAdmissibility:
    """Filter every even member up to ``f_max``."""
    evens = range(6, f_max + 1, 2)
    passing = tuple(f for f in evens if geometric_filter(family.at(f))[0])
    passed = set(passing)
    threshold = None
    for f in reversed(evens):
        if f not in passed:
            break
        threshold = f
    infinite = all(f in passed for f in evens if f >= f_max // 2)
    return FamilyAdmissibility(passing, threshold, infinite, f_max)
