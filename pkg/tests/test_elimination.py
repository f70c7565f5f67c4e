"""Galois norms, resultants and factorization over Q."""

import pytest

from rational_tiles.algebra.cyclotomic import zeta
from rational_tiles.algebra.elimination import (
    exact_quotient,
    irreducible_factors,
    poly_gcd,
    rationalize_coefficients,
    resultant_eliminate,
    squarefree_part,
)
from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError

P_TEXT = (
    "zeta(12)^4*x^3 + zeta(12)^3*x^2*y - (zeta(12)^5 - zeta(12))*x^2"
    " + (zeta(12)^4 - 1)*x*y + zeta(12)^2*x + zeta(12)*y"
)
P_NORM_TEXT = (
    "x^12 - x^10*y^2 + x^8*y^4 + 12*x^10*y + 5*x^10 + 43*x^8*y^2 + 5*x^6*y^4 + 12*x^8*y"
    " + 48*x^6*y^3 + 24*x^8 + 24*x^6*y^2 + 24*x^4*y^4 + 48*x^6*y + 12*x^4*y^3 + 5*x^6"
    " + 43*x^4*y^2 + 5*x^2*y^4 + 12*x^2*y^3 + x^4 - x^2*y^2 + y^4"
)
L_TEXT = (
    "x^4*y^4 - x^5*y^2 + 5*x^3*y^4 + x^6 + 12*x^5*y + 43*x^4*y^2 + 48*x^3*y^3 + 24*x^2*y^4"
    " + 5*x^5 + 12*x^4*y + 24*x^3*y^2 + 12*x^2*y^3 + 5*x*y^4 + 24*x^4 + 48*x^3*y"
    " + 43*x^2*y^2 + 12*x*y^3 + y^4 + 5*x^3 - x*y^2 + x^2"
)


def _unit(poly: SparsePoly) -> SparsePoly:
    return poly.normalized()[1].scaled_to_unit()


@pytest.fixture(scope="module")
def curve():
    return parse_polynomial(L_TEXT, 2)


def test_norm_of_twelfth_root_polynomial():
    rational = rationalize_coefficients(parse_polynomial(P_TEXT, 2))
    assert rational.is_rational()
    assert _unit(rational) == _unit(parse_polynomial(P_NORM_TEXT, 2))


def test_product_and_resultant_norms_agree():
    poly = parse_polynomial(P_TEXT, 2)
    by_product = rationalize_coefficients(poly, method="product")
    by_norm = rationalize_coefficients(poly, method="norm")
    assert _unit(by_product) == _unit(by_norm)


def test_norm_of_rational_polynomial_with_declared_order():
    poly = parse_polynomial("x + 1", 1)
    assert rationalize_coefficients(poly) == poly
    assert rationalize_coefficients(poly, order=5) == poly**4


def test_norm_rejects_unknown_method_and_small_order():
    poly = SparsePoly(1, {(1,): zeta(8), (0,): 1})
    with pytest.raises(AlgebraError):
        rationalize_coefficients(poly, method="guess")
    with pytest.raises(AlgebraError):
        rationalize_coefficients(poly, order=12)


def test_resultant_against_sign_change_in_x(curve):
    mirrored = curve.transform([(-1, 1), (1, 1)])
    res = resultant_eliminate(curve, mirrored, 0)
    expected = parse_polynomial(
        "256*x^8*(25*x^8 + 998*x^6 + 1923*x^4 + 998*x^2 + 25)^2"
        "*(11*x^8 + 6*x^7 - 1217*x^6 - 4182*x^5 - 5112*x^4 - 4182*x^3 - 1217*x^2 + 6*x + 11)^2",
        1,
    )
    assert res.nvars == 1
    assert _unit(res) == _unit(expected)


def test_resultant_against_sign_change_in_y(curve):
    mirrored = curve.transform([(1, 1), (-1, 1)])
    res = resultant_eliminate(curve, mirrored, 0)
    for text in (
        "4*x^8 + 67*x^6 + 114*x^4 + 67*x^2 + 4",
        "x^8 + 72*x^6 + 110*x^4 + 72*x^2 + 1",
        "x^2 + 1",
    ):
        factor = parse_polynomial(text, 1)
        assert _unit(poly_gcd(res, factor)) == _unit(factor)
    assert squarefree_part(res).normalized()[1].degree(0) == 18


def test_one_variable_resultant_is_an_element():
    p = parse_polynomial("x^2 - 2", 1)
    q = parse_polynomial("x - 1", 1)
    assert resultant_eliminate(p, q, 0) == -1


def test_resultant_with_cyclotomic_coefficients():
    # Res_x(x - i, x + i) = -2i
    p = SparsePoly(1, {(1,): 1, (0,): -zeta(4)})
    q = SparsePoly(1, {(1,): 1, (0,): zeta(4)})
    assert resultant_eliminate(p, q, 0) == 2 * zeta(4)


def test_resultant_rejects_missing_variable():
    p = parse_polynomial("x + 1", 2)
    with pytest.raises(AlgebraError):
        resultant_eliminate(p, p, 1)


def test_gcd_quotient_and_factors():
    a = parse_polynomial("(x*y - 1)*(x + y + 1)", 2)
    b = parse_polynomial("(x*y - 1)*(x - y)", 2)
    assert _unit(poly_gcd(a, b)) == _unit(parse_polynomial("x*y - 1", 2))
    assert exact_quotient(a, parse_polynomial("x*y - 1", 2)) == parse_polynomial("x + y + 1", 2)
    factors = irreducible_factors(parse_polynomial("x*(x^2 - 1)^2", 1))
    assert sorted(multiplicity for _, multiplicity in factors) == [2, 2]
    assert {_unit(f) for f, _ in factors} == {_unit(parse_polynomial(t, 1)) for t in ("x - 1", "x + 1")}


def test_rational_only_operations_reject_cyclotomic_input():
    poly = SparsePoly(1, {(1,): zeta(3), (0,): 1})
    with pytest.raises(AlgebraError):
        squarefree_part(poly)
