"""Run every case and merge the results into the final classification.

Solutions are compared up to the reflection α↔δ, β↔γ; the first case in
enumeration order that produces a solution fixes the orientation reported.
Concrete solutions equal to a member of an infinite family are absorbed
into it. Solutions whose vertex counts admit no balanced tiling are kept in
a separate list.

Public API
----------
Classification, SporadicSolution, FamilyEntry
run_cases(cases, settings) -> list[CaseResult]
merge_into_families(results) -> Classification
classify(settings, case_ids=None) -> Classification
"""

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from rational_tiles.combinatorics.vertices import BalanceResult, balance_feasible, parse_spectrum
from rational_tiles.errors import CaseError, GeometryError, InconsistencyError
from rational_tiles.geometry.quadrilateral import QuadGeometry, solve_edge_lengths
from rational_tiles.settings import DEFAULT_SETTINGS, SolverSettings
from rational_tiles.tables import FAMILIES, NO_TILING, SPORADIC, in_bin, parse_angles
from rational_tiles.tiling.candidates import CandidateSolution, FamilySolution
from rational_tiles.tiling.cases import CaseSpec, enumerate_cases, get_case
from rational_tiles.tiling.filters import FamilyAdmissibility
from rational_tiles.tiling.pipeline import CaseResult, solve_case
from rational_tiles.utils.logger import logger

__all__ = [
    "Classification",
    "FamilyEntry",
    "SporadicSolution",
    "classify",
    "cross_check",
    "merge_into_families",
    "run_cases",
]


@dataclass
class SporadicSolution:
    """A concrete solution with where it came from and what it admits."""

    solution: CandidateSolution
    cases: list[str]
    balance: BalanceResult
    geometry: QuadGeometry | None = None


@dataclass
class FamilyEntry:
    family: FamilySolution
    admissibility: FamilyAdmissibility
    cases: list[str]
    absorbed: list[CandidateSolution] = field(default_factory=list)


@dataclass
class Classification:
    """The merged outcome of a run."""

    results: list[CaseResult]
    sporadic: list[SporadicSolution] = field(default_factory=list)
    families: list[FamilyEntry] = field(default_factory=list)
    no_tiling: list[SporadicSolution] = field(default_factory=list)
    discrepancies: list[str] = field(default_factory=list)

    @property
    def failed_cases(self) -> list[CaseResult]:
        return [r for r in self.results if r.error]


def _solve_safely(case: CaseSpec, settings: SolverSettings) -> CaseResult:
    """Solve a case, recording any failure except an inconsistency on the result."""
    try:
        return solve_case(case, settings)
    except CaseError as exc:
        logger.error(str(exc))
        return CaseResult(case, error=str(exc))
    except InconsistencyError:
        raise
    except Exception as exc:
        logger.exception(f"Case {case.case_id} failed")
        return CaseResult(case, error=f"case {case.case_id}: {type(exc).__name__}: {exc}")


def run_cases(cases: Sequence[CaseSpec], settings: SolverSettings | None = None) -> list[CaseResult]:
    """Solve independent cases, in worker processes when ``settings.jobs`` > 1.

    A failing case is recorded with its error and does not stop the others.
    Results come back in the order of ``cases``.
    """
    settings = settings or DEFAULT_SETTINGS
    if settings.jobs <= 1 or len(cases) <= 1:
        return [_solve_safely(case, settings) for case in cases]
    logger.info(f"Solving {len(cases)} cases on {settings.jobs} workers")
    with ProcessPoolExecutor(max_workers=settings.jobs) as pool:
        return list(pool.map(_solve_safely, cases, [settings] * len(cases)))


def _orientation(angles, seen: dict) -> tuple | None:
    mirror = (angles[3], angles[2], angles[1], angles[0])
    if angles in seen:
        return angles
    if mirror in seen:
        return mirror
    return None


def _family_key(family: FamilySolution) -> str:
    return family.text


def _absorbing(families: list[FamilyEntry], sol: CandidateSolution) -> FamilyEntry | None:
    for entry in families:
        member = entry.family.at(sol.f)
        if member.angles in (sol.angles, sol.mirrored().angles):
            return entry
    return None


def merge_into_families(results: Iterable[CaseResult]) -> Classification:
    """Fold case results into sporadic solutions and families, in case order."""
    results = list(results)
    classification = Classification(results)
    families: dict[str, FamilyEntry] = {}
    for result in results:
        classification.discrepancies.extend(result.discrepancies)
        for found in result.families:
            key = _family_key(found.family)
            mirror_key = _family_key(found.family.mirrored())
            entry = families.get(key) or families.get(mirror_key)
            if entry is None:
                families[key] = FamilyEntry(found.family, found.admissibility, [result.case_id])
            elif result.case_id not in entry.cases:
                entry.cases.append(result.case_id)
    classification.families = list(families.values())

    concrete: dict[tuple, SporadicSolution] = {}
    for result in results:
        for sol in result.accepted:
            entry = _absorbing(classification.families, sol)
            if entry is not None:
                if sol not in entry.absorbed and sol.mirrored() not in entry.absorbed:
                    entry.absorbed.append(sol)
                continue
            key = _orientation(sol.angles, concrete)
            if key is None:
                concrete[sol.angles] = SporadicSolution(sol, [result.case_id], result.balance[sol])
            elif result.case_id not in concrete[key].cases:
                concrete[key].cases.append(result.case_id)
    for item in concrete.values():
        (classification.sporadic if item.balance.feasible else classification.no_tiling).append(item)
    classification.sporadic.sort(key=lambda s: (s.solution.f, s.solution.angles))
    classification.no_tiling.sort(key=lambda s: (s.solution.f, s.solution.angles))
    logger.info(
        f"Merged: {len(classification.sporadic)} sporadic, {len(classification.families)} families, "
        f"{len(classification.no_tiling)} without tiling"
    )
    return classification


def _attach_geometry(classification: Classification) -> None:
    for item in classification.sporadic:
        try:
            item.geometry = solve_edge_lengths(item.solution.angles)
        except GeometryError as exc:
            classification.discrepancies.append(f"{item.solution}: {exc}")
            logger.warning(f"{item.solution}: {exc}")


def _same_up_to_mirror(a: tuple, b: tuple) -> bool:
    return a == b or a == (b[3], b[2], b[1], b[0])


def cross_check(classification: Classification) -> list[str]:
    """Compare a full run with the reference tables; one note per mismatch."""
    notes = []
    found = [(s.solution.angles, s.solution.f) for s in classification.sporadic]
    for row in SPORADIC:
        angles = parse_angles(row.angles)
        match = [
            s
            for s in classification.sporadic
            if s.solution.f == row.f and _same_up_to_mirror(s.solution.angles, angles)
        ]
        if not match:
            notes.append(f"reference solution {row.angles}, f={row.f} was not produced")
            continue
        geometry = match[0].geometry
        realizations = [] if geometry is None else [(geometry.a, geometry.b), *geometry.alternatives]
        if geometry is not None and not any(in_bin(a, row.a) and in_bin(b, row.b) for a, b in realizations):
            notes.append(
                f"{row.angles}: edge lengths a={geometry.a:.4f}, b={geometry.b:.4f}, reference says {row.a}, {row.b}"
            )
        for spectrum_text in row.spectra:
            # Spectra are written against the reference orientation.
            if not parse_spectrum(spectrum_text, row.f).is_consistent(angles):
                notes.append(f"reference spectrum {spectrum_text} of {row.angles} fails the counting equations")
    reference = {(parse_angles(r.angles), r.f) for r in SPORADIC}
    for angles, f in found:
        if not any(f == rf and _same_up_to_mirror(angles, ra) for ra, rf in reference):
            notes.append(f"solution {angles}, f={f} is not in the reference list")
    texts = {e.family.text: e for e in classification.families}
    texts.update({e.family.mirrored().text: e for e in classification.families})
    for row in FAMILIES:
        entry = texts.get(row.angles)
        if entry is None:
            notes.append(f"reference family {row.angles} was not produced")
        elif entry.admissibility.threshold != row.threshold:
            notes.append(
                f"family {row.angles}: admissible from f={entry.admissibility.threshold}, reference says {row.threshold}"
            )
    if len(classification.families) != len(FAMILIES):
        notes.append(f"{len(classification.families)} families produced, reference has {len(FAMILIES)}")
    dismissed = [(s.solution.angles, s.solution.f) for s in classification.no_tiling]
    for text, f in NO_TILING:
        angles = parse_angles(text)
        if not any(f == df and _same_up_to_mirror(da, angles) for da, df in dismissed):
            result = balance_feasible(angles, f)
            detail = f"counting finds {result.witness}" if result.feasible else "it was not produced"
            notes.append(f"{text}, f={f} is dismissed by balance in the reference but {detail}")
    for note in notes:
        logger.warning(note)
    return notes


def classify(settings: SolverSettings | None = None, case_ids: Sequence[str] | None = None) -> Classification:
    """Run the given cases (default: all 36), merge, attach geometry and cross-check."""
    settings = settings or DEFAULT_SETTINGS
    cases = [get_case(c) for c in case_ids] if case_ids else enumerate_cases()
    logger.info(f"=== Classifying with {len(cases)} cases (f_max={settings.f_max}) ===")
    classification = merge_into_families(run_cases(cases, settings))
    _attach_geometry(classification)
    for result in classification.failed_cases:
        classification.discrepancies.append(f"case {result.case_id} failed: {result.error}")
    if not case_ids:
        classification.discrepancies.extend(cross_check(classification))
    return classification
