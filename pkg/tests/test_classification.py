"""Merging case results into the final classification."""

from rational_tiles.classification import cross_check, merge_into_families
from rational_tiles.tables import ABD_CASE, FAMILIES, NO_TILING, SPORADIC, parse_angles


def _mirror(angles):
    return (angles[3], angles[2], angles[1], angles[0])


def _matches(items, rows) -> bool:
    """Same (angles, f) pairs, each compared up to the α↔δ, β↔γ reflection."""
    found = [(item.solution.angles, item.solution.f) for item in items]
    if len(found) != len(rows):
        return False
    for text, f in rows:
        angles = parse_angles(text)
        if not any(f == ff and fa in (angles, _mirror(angles)) for fa, ff in found):
            return False
    return True


def test_abd_case_alone(abd):
    merged = merge_into_families([abd])
    assert _matches(merged.sporadic, ABD_CASE)
    assert merged.no_tiling == []
    assert len(merged.families) == 3
    assert all(entry.cases == ["abd"] for entry in merged.families)


def test_family_members_are_absorbed(abd):
    merged = merge_into_families([abd])
    sporadic = {(item.solution.angles, item.solution.f) for item in merged.sporadic}
    for entry in merged.families:
        for sol in entry.absorbed:
            assert entry.family.at(sol.f).angles in (sol.angles, _mirror(sol.angles))
            assert (sol.angles, sol.f) not in sporadic


def test_full_run_completes(full_classification):
    assert full_classification.failed_cases == []
    assert len(full_classification.results) == 36


def test_full_run_fits_the_time_budget(full_classification):
    seconds = [r.seconds for r in full_classification.results]
    assert all(s > 0 for s in seconds)
    assert sum(seconds) < 600


def test_full_run_sporadic_solutions(full_classification):
    rows = [(row.angles, row.f) for row in SPORADIC]
    assert _matches(full_classification.sporadic, rows)
    assert all(item.balance.feasible for item in full_classification.sporadic)
    assert all(item.geometry is not None for item in full_classification.sporadic)


def test_full_run_families(full_classification):
    by_text = {}
    for entry in full_classification.families:
        by_text[entry.family.text] = entry
        by_text[entry.family.mirrored().text] = entry
    assert len(full_classification.families) == len(FAMILIES)
    for row in FAMILIES:
        assert by_text[row.angles].admissibility.threshold == row.threshold
        assert by_text[row.angles].admissibility.infinite


def test_full_run_balance_dismissals(full_classification):
    assert _matches(full_classification.no_tiling, NO_TILING)
    for item in full_classification.no_tiling:
        assert not item.balance.feasible
        assert item.balance.explanation


def test_full_run_agrees_with_reference(full_classification):
    assert cross_check(full_classification) == []


def test_solutions_remember_their_cases(full_classification):
    quarter = [
        item
        for item in full_classification.sporadic
        if (item.solution.f, item.solution.text) in {(16, "(1,4,2,2)/4"), (16, "(2,2,4,1)/4")}
    ]
    (item,) = quarter
    assert {"bd2+bc2", "bc2+d4", "bd2+a2bc", "bd2+c4"} <= set(item.cases)
