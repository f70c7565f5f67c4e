"""Exception hierarchy for rational-tiles.

Every error raised on purpose by the package derives from
:class:`RationalTilesError`, so callers (the CLI in particular) can map
failures to exit codes without catching unrelated exceptions.

Public API
----------
RationalTilesError
    Base class.
PolynomialParseError
    Bad polynomial text; carries the character position.
AlgebraError
    Invalid algebraic input (zero polynomial, singular substitution, ...).
InconsistencyError
    An internal invariant failed; reported with exit code 3.
SolverError
    Elimination hit a degeneracy it cannot split.
CaseError
    Any failure inside one tiling case, tagged with the case id.
GeometryError
    An angle tuple has no simple spherical realization.
"""

__all__ = [
    "AlgebraError",
    "CaseError",
    "GeometryError",
    "InconsistencyError",
    "PolynomialParseError",
    "RationalTilesError",
    "SolverError",
]


class RationalTilesError(Exception):
    """Base class for all package errors."""


class PolynomialParseError(RationalTilesError, ValueError):
    """Raised when polynomial text cannot be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class AlgebraError(RationalTilesError, ValueError):
    """Raised on algebraically invalid input."""


class InconsistencyError(RationalTilesError):
    """Raised when an exact consistency check fails."""


class SolverError(RationalTilesError):
    """Raised when the cyclotomic solver cannot resolve a degenerate branch."""


class CaseError(RationalTilesError):
    """Raised when solving a tiling case fails; keeps the case id."""

    def __init__(self, case_id: str, message: str):
        super().__init__(f"case {case_id}: {message}")
        self.case_id = case_id


class GeometryError(RationalTilesError):
    """Raised when no simple a3b-quadrilateral realizes the given angles."""
