"""Polynomial text parsing and sparse Laurent arithmetic."""

from fractions import Fraction

import pytest

from rational_tiles.algebra.cyclotomic import zeta
from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.algebra.sparse import SparsePoly, galois_conjugate
from rational_tiles.errors import AlgebraError, PolynomialParseError

P_TEXT = (
    "zeta(12)^4*x^3 + zeta(12)^3*x^2*y - (zeta(12)^5 - zeta(12))*x^2"
    " + (zeta(12)^4 - 1)*x*y + zeta(12)^2*x + zeta(12)*y"
)


def test_parse_builds_expected_terms():
    poly = parse_polynomial("3*x^2*y - x + 2", 2)
    assert poly.nvars == 2
    assert poly.terms == {(2, 1): 3, (1, 0): -1, (0, 0): 2}
    assert poly.degree(0) == 2


def test_arity_is_inferred_from_highest_variable():
    assert parse_polynomial("x + 1").nvars == 1
    assert parse_polynomial("y + 1").nvars == 2
    assert parse_polynomial("x*z").nvars == 3


def test_str_round_trips_through_parser():
    poly = parse_polynomial(P_TEXT, 2)
    assert parse_polynomial(str(poly), 2) == poly
    laurent = parse_polynomial("x^(-2)*y + 3*y^-1", 2)
    assert parse_polynomial(str(laurent), 2) == laurent


def test_cyclotomic_coefficients():
    poly = parse_polynomial(P_TEXT, 2)
    assert poly.order == 12
    assert poly.coefficient((3, 0)) == zeta(3)
    assert poly.coefficient((1, 1)) == zeta(3) - 1
    assert not poly.is_rational()


def test_negative_power_of_monomial():
    poly = parse_polynomial("(2*x*y)^(-1) + x/y", 2)
    assert poly.terms == {(-1, -1): Fraction(1, 2), (1, -1): 1}


@pytest.mark.parametrize(
    ("text", "nvars", "position"),
    [
        ("x +* y", 2, 3),
        ("x + z", 2, 4),
        ("x + $", 1, 4),
        ("(x + 1", 1, 6),
        ("1/(x + 1)", 1, 1),
        ("(x + 1)^-2", 1, 7),
        ("x^y", 2, 2),
    ],
)
def test_parse_errors_carry_positions(text, nvars, position):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(text, nvars)
    assert info.value.position == position


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_polynomial("x", 4)


def test_transform_applies_signs_and_powers():
    poly = parse_polynomial("x^3 + x*y + 1", 2)
    assert poly.transform([(-1, 1), (1, 1)]) == parse_polynomial("-x^3 - x*y + 1", 2)
    assert poly.transform([(1, 2), (-1, 2)]) == parse_polynomial("x^6 - x^2*y^2 + 1", 2)


def test_normalized_and_scaled_to_unit():
    shift, poly = parse_polynomial("2*x^(-1)*y + 4*y^2", 2).normalized()
    assert shift == (-1, 1)
    assert poly == parse_polynomial("2 + 4*x*y", 2)
    assert poly.scaled_to_unit() == parse_polynomial("1 + 2*x*y", 2)


def test_evaluate_roots_is_exact():
    poly = parse_polynomial("x^2 + 1", 1)
    assert poly.evaluate_roots([Fraction(1, 4)]).is_zero()
    assert poly.evaluate_roots([Fraction(0)]) == 2
    curve = parse_polynomial("x*y - 1", 2)
    assert curve.evaluate_roots([Fraction(1, 3), Fraction(2, 3)]).is_zero()


def test_evaluate_roots_matches_complex_value():
    poly = parse_polynomial(P_TEXT, 2)
    point = [Fraction(1, 12), Fraction(1, 3)]
    exact = poly.evaluate_roots(point).to_complex()
    numeric = poly.evaluate_complex([zeta(12).to_complex(), zeta(3).to_complex()])
    assert abs(exact - numeric) < 1e-9


def test_specialize_drops_a_variable():
    poly = parse_polynomial("x*y - 1", 2)
    line = poly.specialize(1, Fraction(1, 4))
    assert line.nvars == 1
    assert line == SparsePoly(1, {(1,): zeta(4), (0,): -1})


def test_galois_conjugate_and_derivative():
    poly = SparsePoly(1, {(1,): zeta(5), (0,): 1})
    assert galois_conjugate(poly, 2).coefficient((1,)) == zeta(5, 2)
    with pytest.raises(AlgebraError):
        galois_conjugate(poly, 5)
    assert parse_polynomial("x^3*y + y", 2).derivative(0) == parse_polynomial("3*x^2*y", 2)


def test_arity_bounds():
    with pytest.raises(AlgebraError):
        SparsePoly(4, {})
    assert SparsePoly.constant(2, 0).is_zero()
