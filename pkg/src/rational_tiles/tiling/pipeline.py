"""Solve one vertex-combination case end to end.

equation → polynomial → cyclotomic points and families → angle tuples →
exact check → necessary conditions → balance annotation.

The comparison eliminants behind the solver are only needed for reports;
:attr:`CaseResult.branches` computes them on first access.
"""

from dataclasses import dataclass, field
from functools import cached_property
import time

from rational_tiles.algebra.elimination import rationalize_coefficients
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.combinatorics.vertices import BalanceResult, balance_feasible
from rational_tiles.errors import CaseError, InconsistencyError, RationalTilesError
from rational_tiles.settings import DEFAULT_SETTINGS, SolverSettings
from rational_tiles.solver import EliminationBranch, cyclotomic_points, elimination_branches
from rational_tiles.solver.roots import CyclotomicPoint
from rational_tiles.tiling.angles import AngleForm
from rational_tiles.tiling.candidates import CandidateSolution, FamilySolution, decode_family, decode_point
from rational_tiles.tiling.cases import CaseSpec, case_parametrization
from rational_tiles.tiling.exponential import ExponentialForm, exponentialize, header_discrepancies
from rational_tiles.tiling.filters import FamilyAdmissibility, geometric_filter, scan_family, verify_exact
from rational_tiles.tiling.trig import TrigExpr, build_trig_equation
from rational_tiles.utils.logger import logger

__all__ = ["CaseResult", "Dismissal", "FamilyResult", "solve_case"]

FAKE = "fake"
FAMILY_SAMPLES = 20


@dataclass(frozen=True)
class Dismissal:
    """A decoded candidate that was dropped, with every reason found."""

    candidate: CandidateSolution
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class FamilyResult:
    family: FamilySolution
    admissibility: FamilyAdmissibility


@dataclass
class CaseResult:
    """Everything one case produced, including what it threw away."""

    case: CaseSpec
    parametrization: dict[str, AngleForm] = field(default_factory=dict)
    equation: TrigExpr | None = None
    form: ExponentialForm | None = None
    rationalized: SparsePoly | None = None
    accepted: list[CandidateSolution] = field(default_factory=list)
    families: list[FamilyResult] = field(default_factory=list)
    balance: dict[CandidateSolution, BalanceResult] = field(default_factory=dict)
    dismissed: list[Dismissal] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)
    sources: dict[CandidateSolution, CyclotomicPoint] = field(default_factory=dict)
    seconds: float = 0.0
    error: str | None = None

    @property
    def case_id(self) -> str:
        return self.case.case_id

    @property
    def tilings(self) -> list[CandidateSolution]:
        """Accepted solutions that pass the balance test."""
        return [s for s in self.accepted if self.balance[s].feasible]

    @property
    def no_tiling(self) -> list[CandidateSolution]:
        return [s for s in self.accepted if not self.balance[s].feasible]

    @cached_property
    def branches(self) -> list[EliminationBranch]:
        """Comparison eliminants of the case polynomial (empty if the case failed early)."""
        if self.form is None:
            return []
        logger.info(f"Computing elimination branches for case {self.case_id}")
        return elimination_branches(self.form.poly)

    def branch_labels(self, solution: CandidateSolution) -> list[str]:
        """Comparison branches whose eliminant vanishes at the projection of the solution's point."""
        point = self.sources.get(solution)
        if point is None:
            return []
        rest = point.fractions[1:]
        return [
            b.label for b in self.branches if b.resultant is not None and b.resultant.evaluate_roots(rest).is_zero()
        ]


def _fakes(form: ExponentialForm, points: set[CyclotomicPoint], families) -> tuple[SparsePoly | None, list]:
    """Points of the rationalized polynomial that are not points of the original one."""
    if form.poly.is_rational() or form.nvars != 2:
        return None, []
    rational = rationalize_coefficients(form.poly)
    rational_points, _ = cyclotomic_points(rational)
    extra = [p for p in sorted(rational_points) if p not in points and not any(f.contains(p) for f in families)]
    return rational, extra


def _screen(
    result: CaseResult, candidates: list[CandidateSolution], accepted: set[CandidateSolution]
) -> None:
    for cand in candidates:
        if not verify_exact(cand):
            raise InconsistencyError(f"{cand} decoded from a zero of the case polynomial fails the equation")
        passed, reasons = geometric_filter(cand)
        if passed:
            accepted.add(cand)
        else:
            result.dismissed.append(Dismissal(cand, tuple(reasons)))
            logger.debug(f"{result.case_id}: dismissed {cand} ({', '.join(reasons)})")


def _solve(case: CaseSpec, settings: SolverSettings) -> CaseResult:
    result = CaseResult(case)
    result.parametrization = params = case_parametrization(case)
    result.equation = build_trig_equation(case)
    result.form = form = exponentialize(result.equation, case)
    result.discrepancies.extend(header_discrepancies(form, case))
    points, families = cyclotomic_points(form.poly)
    result.rationalized, fakes = _fakes(form, points, families)

    accepted: set[CandidateSolution] = set()
    for point in sorted(points):
        candidates = decode_point(point, form, params)
        _screen(result, candidates, accepted)
        for cand in candidates:
            if cand in accepted:
                result.sources.setdefault(cand, point)
    for point in fakes:
        for cand in decode_point(point, form, params, f"point {point} of the rationalized polynomial"):
            if not verify_exact(cand):
                result.dismissed.append(Dismissal(cand, (FAKE,)))

    for torsion in sorted(families, key=str):
        for family in decode_family(torsion, form, params):
            scan = scan_family(family, settings.f_max)
            if not scan.passing:
                logger.debug(f"{case.case_id}: family {family} has no admissible member")
                continue
            for f in scan.passing[:FAMILY_SAMPLES]:
                if not verify_exact(family.at(f)):
                    raise CaseError(case.case_id, f"family {family} fails the equation at f={f}")
            if scan.infinite:
                result.families.append(FamilyResult(family, scan))
                accepted.update(family.at(f) for f in scan.isolated)
            else:
                accepted.update(family.at(f) for f in scan.passing)

    result.accepted = sorted(accepted)
    for cand in result.accepted:
        result.balance[cand] = balance_feasible(cand.angles, cand.f)
        if not result.balance[cand].feasible:
            logger.info(f"{case.case_id}: {cand} is good but admits no tiling ({result.balance[cand].explanation})")
    return result


def solve_case(case: CaseSpec, settings: SolverSettings | None = None) -> CaseResult:
    """Run one case.

    Raises
    ------
    CaseError
        Wrapping any other failure, with the case id attached.
    InconsistencyError
        If a decoded zero of the case polynomial fails the exact check.
    """
    settings = settings or DEFAULT_SETTINGS
    logger.info(f"=== Solving case {case.case_id} ===")
    start = time.perf_counter()
    try:
        result = _solve(case, settings)
    except (CaseError, InconsistencyError):
        raise
    except RationalTilesError as exc:
        raise CaseError(case.case_id, str(exc)) from exc
    except Exception as exc:
        logger.exception(f"Unexpected failure in case {case.case_id}")
        raise CaseError(case.case_id, f"{type(exc).__name__}: {exc}") from exc
    result.seconds = time.perf_counter() - start
    logger.info(
        f"Case {case.case_id}: {len(result.accepted)} solutions, {len(result.families)} families, "
        f"{len(result.dismissed)} dismissed in {result.seconds:.1f}s"
    )
    return result
