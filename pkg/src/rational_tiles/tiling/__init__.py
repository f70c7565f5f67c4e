"""From a vertex-combination case to verified rational angle tuples."""

from rational_tiles.tiling.angles import ANGLE_TAGS, INV_F, AngleForm, format_angles, mirror_angles
from rational_tiles.tiling.candidates import CandidateSolution, FamilySolution, decode_family, decode_point
from rational_tiles.tiling.cases import CaseSpec, case_parametrization, enumerate_cases, get_case
from rational_tiles.tiling.exponential import ExponentialForm, derive_scalings, exponentialize
from rational_tiles.tiling.filters import FamilyAdmissibility, geometric_filter, scan_family, verify_exact
from rational_tiles.tiling.pipeline import CaseResult, Dismissal, FamilyResult, solve_case
from rational_tiles.tiling.trig import (
    TrigExpr,
    build_trig_equation,
    compatibility_residual,
    compatibility_residual_exact,
)

__all__ = [
    "ANGLE_TAGS",
    "INV_F",
    "AngleForm",
    "CandidateSolution",
    "CaseResult",
    "CaseSpec",
    "Dismissal",
    "ExponentialForm",
    "FamilyAdmissibility",
    "FamilyResult",
    "FamilySolution",
    "TrigExpr",
    "build_trig_equation",
    "case_parametrization",
    "compatibility_residual",
    "compatibility_residual_exact",
    "decode_family",
    "decode_point",
    "derive_scalings",
    "enumerate_cases",
    "exponentialize",
    "format_angles",
    "geometric_filter",
    "get_case",
    "mirror_angles",
    "scan_family",
    "solve_case",
    "verify_exact",
]
