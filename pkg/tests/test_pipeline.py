"""End-to-end solving of single cases."""

import pytest

from rational_tiles import classification
from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.classification import run_cases
from rational_tiles.errors import AlgebraError, CaseError, InconsistencyError
from rational_tiles.tables import CASE_OUTCOMES
from rational_tiles.tiling import pipeline
from rational_tiles.tiling.cases import enumerate_cases, get_case
from rational_tiles.tiling.filters import FILTER_REASONS, verify_exact
from rational_tiles.tiling.pipeline import FAKE, solve_case

P_NORM_TEXT = (
    "x^12 - x^10*y^2 + x^8*y^4 + 12*x^10*y + 5*x^10 + 43*x^8*y^2 + 5*x^6*y^4 + 12*x^8*y"
    " + 48*x^6*y^3 + 24*x^8 + 24*x^6*y^2 + 24*x^4*y^4 + 48*x^6*y + 12*x^4*y^3 + 5*x^6"
    " + 43*x^4*y^2 + 5*x^2*y^4 + 12*x^2*y^3 + x^4 - x^2*y^2 + y^4"
)

TWO_VARIABLE_CASES = [case.case_id for case in enumerate_cases() if case.nvars == 2]


def _unit(poly):
    return poly.normalized()[1].scaled_to_unit()


def _outcome(result) -> set[tuple[str, int]]:
    return {(sol.text, sol.f) for sol in result.accepted}


def test_b3_a4_solutions(b3_a4):
    assert b3_a4.error is None
    assert _outcome(b3_a4) == {("(3,4,8,1)/6", 6), ("(3,4,6,2)/6", 8)}
    assert [(s.text, s.f) for s in b3_a4.tilings] == [("(3,4,8,1)/6", 6)]
    assert [(s.text, s.f) for s in b3_a4.no_tiling] == [("(3,4,6,2)/6", 8)]
    assert b3_a4.families == []


def test_b3_a4_provenance(b3_a4):
    for sol in b3_a4.accepted:
        assert sol.case_id == "b3+a4"
        assert sol.provenance.startswith("point ")


def test_b3_a4_rationalized_polynomial(b3_a4):
    assert b3_a4.rationalized is not None
    assert _unit(b3_a4.rationalized) == _unit(parse_polynomial(P_NORM_TEXT, 2))
    assert len(b3_a4.branches) == 7


def test_b3_a4_dismissals(b3_a4):
    assert b3_a4.dismissed
    fakes = [d for d in b3_a4.dismissed if d.reasons == (FAKE,)]
    for dismissal in fakes:
        assert not verify_exact(dismissal.candidate)
    for dismissal in b3_a4.dismissed:
        if dismissal.reasons != (FAKE,):
            assert set(dismissal.reasons) <= set(FILTER_REASONS)
            assert verify_exact(dismissal.candidate)


def test_b3_a4_header_notes(b3_a4):
    assert len(b3_a4.discrepancies) == 2


@pytest.mark.parametrize("case_id", TWO_VARIABLE_CASES)
def test_two_variable_case_outcomes(case_results, case_id):
    result = case_results[case_id]
    assert result.error is None
    assert _outcome(result) == set(CASE_OUTCOMES.get(case_id, ()))


def test_abd_solves_without_rationalizing(abd):
    assert abd.error is None
    assert abd.rationalized is None
    assert len(abd.families) == 3


def test_package_errors_carry_the_case_id(monkeypatch):
    def broken(poly):
        raise AlgebraError("no luck")

    monkeypatch.setattr(pipeline, "cyclotomic_points", broken)
    with pytest.raises(CaseError) as info:
        solve_case(get_case("b3+a4"))
    assert info.value.case_id == "b3+a4"
    assert "no luck" in str(info.value)


def test_failed_exact_check_is_an_inconsistency(monkeypatch):
    monkeypatch.setattr(pipeline, "verify_exact", lambda cand: False)
    with pytest.raises(InconsistencyError):
        solve_case(get_case("b3+a4"))


def test_failing_case_does_not_stop_the_run(monkeypatch):
    def broken(case, settings=None):
        raise CaseError(case.case_id, "boom")

    monkeypatch.setattr(classification, "solve_case", broken)
    (result,) = run_cases([get_case("b3+a4")])
    assert result.error == "case b3+a4: boom"
    assert result.accepted == []


def test_mirrored_case_id_resolves(b3_a4):
    mirror = solve_case(get_case("c3+d4"))
    assert mirror.case_id == "c3+d4"
    assert set(mirror.accepted) == {sol.mirrored() for sol in b3_a4.accepted}


@pytest.mark.parametrize("case_id", sorted(CASE_OUTCOMES))
def test_mirrored_cases_give_mirrored_solutions(case_results, case_id):
    original = case_results[case_id]
    mirror = solve_case(original.case.mirrored())
    assert mirror.error is None
    assert set(mirror.accepted) == {sol.mirrored() for sol in original.accepted}
    assert {r.family.text for r in mirror.families} == {r.family.mirrored().text for r in original.families}


def test_unexpected_errors_become_case_errors(monkeypatch):
    def broken(case):
        raise ValueError("bad stage")

    monkeypatch.setattr(pipeline, "build_trig_equation", broken)
    with pytest.raises(CaseError) as info:
        solve_case(get_case("b3+a4"))
    assert "ValueError: bad stage" in str(info.value)
    assert isinstance(info.value.__cause__, ValueError)


def test_classification_survives_a_crashing_case(monkeypatch, case_results):
    def flaky(case, settings=None):
        if case.case_id == "a2b+b3":
            raise ValueError("crash")
        return case_results[case.case_id]

    monkeypatch.setattr(classification, "solve_case", flaky)
    result = classification.classify()
    assert len(result.results) == 36
    assert [r.case_id for r in result.failed_cases] == ["a2b+b3"]
    assert "ValueError: crash" in result.failed_cases[0].error
    assert len([r for r in result.results if r.error is None]) == 35
    assert any("a2b+b3 failed" in note for note in result.discrepancies)


def test_solving_does_not_compute_branches(monkeypatch):
    def refuse(poly):
        raise RuntimeError("branches computed while solving")

    monkeypatch.setattr(pipeline, "elimination_branches", refuse)
    result = solve_case(get_case("b3+a4"))
    assert result.accepted
    with pytest.raises(RuntimeError):
        _ = result.branches
