"""Back-substitution: fix all but one coordinate and solve for the last."""

from collections.abc import Sequence
import enum

from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError
from rational_tiles.solver.roots import RootOfUnity
from rational_tiles.solver.univariate import cyclotomic_roots_univariate

__all__ = ["IDENTICALLY_ZERO", "backsolve_variable", "specialize_all_but"]


class _Signal(enum.Enum):
    IDENTICALLY_ZERO = "identically zero"


IDENTICALLY_ZERO = _Signal.IDENTICALLY_ZERO
"""Returned when the specialization vanishes for every value of the free variable."""


def specialize_all_but(poly: SparsePoly, partial: Sequence[RootOfUnity | None]) -> SparsePoly:
    """Substitute every assigned coordinate; the result has one variable."""
    if len(partial) != poly.nvars:
        raise AlgebraError(f"assignment has {len(partial)} entries, polynomial has {poly.nvars} variables")
    free = [i for i, value in enumerate(partial) if value is None]
    if len(free) != 1:
        raise AlgebraError(f"exactly one variable must stay free, got {len(free)}")
    current = poly
    for index in reversed(range(poly.nvars)):
        if partial[index] is not None:
            current = current.specialize(index, partial[index].fraction)
    return current


def backsolve_variable(poly: SparsePoly, partial: Sequence[RootOfUnity | None]):
    """Roots of unity for the single unassigned coordinate of ``partial``.

    Returns :data:`IDENTICALLY_ZERO` if the specialized polynomial vanishes,
    i.e. the assignment lies on a component along the free coordinate.
    """
    specialized = specialize_all_but(poly, partial)
    if specialized.is_zero():
        return IDENTICALLY_ZERO
    return cyclotomic_roots_univariate(specialized)
