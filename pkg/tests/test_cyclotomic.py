"""Exact arithmetic in cyclotomic fields."""

from fractions import Fraction

import pytest

from rational_tiles.algebra.cyclotomic import ONE, ZERO, CyclotomicElement, euler_phi, zeta
from rational_tiles.errors import AlgebraError


def test_zeta_powers_and_minimal_order():
    assert zeta(4) ** 2 == -1
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(12, 4) == zeta(3)
    assert zeta(6).order == 3
    assert zeta(10, 5) == -1
    assert zeta(7, 7) == ONE


def test_rational_elements_compare_with_numbers():
    half = CyclotomicElement.rational(Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert half.is_rational()
    assert half.to_fraction() == Fraction(1, 2)
    assert (zeta(4) * zeta(4, 3)).is_rational()


def test_sqrt2_from_eighth_roots():
    root2 = zeta(8) + zeta(8, 7)
    assert root2 * root2 == 2
    assert abs(root2.to_complex() - 2**0.5) < 1e-12


def test_inverse_and_division():
    x = 2 + zeta(5)
    assert x * x.inverse() == 1
    assert (x / x) == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_norm_and_conjugates():
    assert (1 + zeta(4)).norm() == 2
    assert zeta(8).norm() == 1
    assert zeta(5).conjugate(2) == zeta(5, 2)
    with pytest.raises(AlgebraError):
        zeta(6).conjugate(3)


def test_to_complex_matches_exponential():
    value = zeta(12, 5).to_complex()
    assert abs(value - complex(-(3**0.5) / 2, 0.5)) < 1e-12


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 12, 15)] == [1, 1, 2, 2, 4, 8]
    with pytest.raises(AlgebraError):
        euler_phi(0)


def test_constructor_reduces_order_two_mod_four():
    element = CyclotomicElement(6, [0, 1])
    assert element == zeta(6)
    assert element.order == 3
