"""Necessary conditions on candidate angle tuples and family scans."""

from fractions import Fraction

import pytest

from rational_tiles.tables import FAMILIES, SPORADIC, parse_angles
from rational_tiles.tiling.angles import INV_F, AngleForm
from rational_tiles.tiling.candidates import CandidateSolution, FamilySolution
from rational_tiles.tiling.filters import FILTER_REASONS, geometric_filter, scan_family, verify_exact


def _candidate(text: str, f: int) -> CandidateSolution:
    return CandidateSolution.of(parse_angles(text), f)


def _form(constant, slope) -> AngleForm:
    return AngleForm.build(Fraction(constant), {INV_F: Fraction(slope)})


# (4,f-4,4,f)/f, (6,4f-4,12,2f-2)/3f, (6,2f-4,12,4f-2)/3f
REFERENCE_FAMILIES = (
    FamilySolution((_form(0, 4), _form(1, -4), _form(0, 4), _form(1, 0))),
    FamilySolution(
        (_form(0, 2), _form(Fraction(4, 3), Fraction(-4, 3)), _form(0, 4), _form(Fraction(2, 3), Fraction(-2, 3)))
    ),
    FamilySolution(
        (_form(0, 2), _form(Fraction(2, 3), Fraction(-4, 3)), _form(0, 4), _form(Fraction(4, 3), Fraction(-2, 3)))
    ),
)


def test_good_solution_passes():
    passed, reasons = geometric_filter(_candidate("(3,4,8,1)/6", 6))
    assert passed and reasons == []
    assert verify_exact(_candidate("(3,4,8,1)/6", 6))


@pytest.mark.parametrize(
    ("text", "f", "reason"),
    [
        ("(3,4,-4,11)/6", 12, "angle-range"),
        ("(3,4,4,3)/6", 12, "symmetric"),
        ("(3,4,3,4)/6", 12, "beta-delta"),
        ("(3,4,8,1)/6", 5, "tile-count"),
        ("(3,4,8,1)/6", 8, "angle-sum"),
        ("(4,4,4,8)/8", 8, "order-mismatch"),
        ("(2,7,2,9)/6", 6, "two-large-angles"),
    ],
)
def test_dismissal_reasons(text, f, reason):
    passed, reasons = geometric_filter(_candidate(text, f))
    assert not passed
    assert reason in reasons
    assert set(reasons) <= set(FILTER_REASONS)


def test_reasons_are_all_reported():
    _, reasons = geometric_filter(_candidate("(3,4,-4,11)/6", 11))
    assert {"angle-range", "tile-count", "angle-sum"} <= set(reasons)


@pytest.mark.parametrize("row", SPORADIC, ids=lambda r: r.angles)
def test_reference_solutions_are_good(row):
    sol = _candidate(row.angles, row.f)
    assert geometric_filter(sol) == (True, [])
    assert verify_exact(sol)


@pytest.mark.parametrize(("family", "row"), list(zip(REFERENCE_FAMILIES, FAMILIES, strict=True)))
def test_family_thresholds(family, row):
    assert family.text == row.angles
    scan = scan_family(family, f_max=120)
    assert scan.infinite
    assert scan.threshold == row.threshold
    assert scan.condition == f"all even f >= {row.threshold}"
    assert scan.isolated == ()
    assert all(verify_exact(family.at(f)) for f in (row.threshold, 40, 120))


def test_family_member_and_mirror():
    family = REFERENCE_FAMILIES[0]
    member = family.at(10)
    assert member.text == "(2,3,2,5)/5"
    assert member.f == 10
    assert family.mirrored().at(10) == member.mirrored()
