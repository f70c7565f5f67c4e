"""The compatibility equation and its exponential polynomial form."""

from fractions import Fraction

import pytest

from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.errors import AlgebraError
from rational_tiles.tables import FAMILIES, SPORADIC, parse_angles
from rational_tiles.tiling.angles import DELTA, INV_F
from rational_tiles.tiling.cases import enumerate_cases, get_case
from rational_tiles.tiling.exponential import derive_scalings, exponentialize, header_discrepancies
from rational_tiles.tiling.trig import (
    build_trig_equation,
    compatibility_residual,
    compatibility_residual_exact,
)

B3_A4_POLY = (
    "zeta(12)^4*x^3 + zeta(12)^3*x^2*y - (zeta(12)^5 - zeta(12))*x^2"
    " + (zeta(12)^4 - 1)*x*y + zeta(12)^2*x + zeta(12)*y"
)
ABD_POLY = "x^3*y*z - x^2*y*z - x^2*z + x*y*z + x^2 - x*y - x + 1"


def _unit(poly):
    return poly.normalized()[1].scaled_to_unit()


@pytest.mark.parametrize("row", SPORADIC, ids=lambda r: r.angles)
def test_reference_solutions_satisfy_the_equation(row):
    angles = parse_angles(row.angles)
    assert compatibility_residual_exact(angles).is_zero()
    assert abs(compatibility_residual(angles)) < 1e-12


def test_family_members_satisfy_the_equation():
    # (4,f-4,4,f)/f at f = 14
    f = 14
    angles = (Fraction(4, f), Fraction(f - 4, f), Fraction(4, f), Fraction(1))
    assert compatibility_residual_exact(angles).is_zero()
    assert FAMILIES[0].angles == "(4,f-4,4,f)/f"


def test_fake_solution_fails_the_equation():
    residual = compatibility_residual_exact(parse_angles("(3,4,2,5)/6"))
    assert not residual.is_zero()
    # four times 3/4 - 1/2
    assert residual == 1
    assert abs(compatibility_residual(parse_angles("(3,4,2,5)/6")) - 0.25) < 1e-12


def test_case_equation_uses_the_free_angle():
    expr = build_trig_equation(get_case("b3+a4"))
    assert expr.variables() == (DELTA, INV_F)
    value = expr.evaluate_exact({DELTA: Fraction(1, 6), INV_F: Fraction(1, 6)})
    assert value.is_zero()


def test_b3_a4_polynomial():
    case = get_case("b3+a4")
    form = exponentialize(build_trig_equation(case), case)
    assert form.variables == (DELTA, INV_F)
    assert form.scalings == (1, 4)
    assert form.substitution_text() == "x = e^{iπ·δ}, y = e^{4iπ/f}"
    assert _unit(form.poly) == _unit(parse_polynomial(B3_A4_POLY, 2))
    assert not form.poly.is_rational()
    assert form.point_of([Fraction(1, 6), Fraction(1, 6)]) == (Fraction(1, 12), Fraction(1, 3))
    assert form.poly.evaluate_roots(form.point_of([Fraction(1, 6), Fraction(1, 6)])).is_zero()


def test_b3_a4_header_scalings_are_reported():
    case = get_case("b3+a4")
    form = exponentialize(build_trig_equation(case), case)
    notes = header_discrepancies(form, case)
    assert len(notes) == 2
    assert "needs scaling 1, header prints 2" in notes[0]
    assert "needs scaling 4, header prints 8" in notes[1]


def test_header_scalings_that_skip_exponents_are_rejected():
    case = get_case("b3+a4")
    with pytest.raises(AlgebraError):
        exponentialize(build_trig_equation(case), case, scalings=case.header_scalings)


def test_abd_polynomial():
    case = get_case("abd")
    expr = build_trig_equation(case)
    assert derive_scalings(expr, case.variables) == (1, 2, 4)
    form = exponentialize(expr, case)
    assert form.poly == parse_polynomial(ABD_POLY, 3)
    notes = header_discrepancies(form, case)
    assert len(notes) == 1 and "(β)" in notes[0]


def test_every_case_exponentializes():
    for case in enumerate_cases():
        form = exponentialize(build_trig_equation(case), case)
        assert form.nvars == case.nvars
        assert not form.poly.is_monomial(), case.case_id


@pytest.mark.parametrize("case", [c for c in enumerate_cases() if c.nvars == 2], ids=lambda c: c.case_id)
def test_two_variable_substitution_and_header_notes(case):
    form = exponentialize(build_trig_equation(case), case)
    x_part, y_part = form.substitution_text().split(", ")
    assert x_part.startswith("x = e^{") and case.free[0] in x_part
    assert y_part.startswith("y = e^{") and y_part.endswith("iπ/f}")
    notes = header_discrepancies(form, case)
    mismatched = [name for name, s, h in zip("xy", form.scalings, case.header_scalings, strict=True) if s != h]
    assert [note.split(": ")[1][0] for note in notes] == mismatched


def test_a2b_b3_renders_with_two_variables():
    case = get_case("a2b+b3")
    form = exponentialize(build_trig_equation(case), case)
    assert form.substitution_text().startswith("x = e^{")
    assert "z =" not in form.substitution_text()
    assert all(note.startswith("a2b+b3: ") for note in header_discrepancies(form, case))
