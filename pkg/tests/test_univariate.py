"""Roots of unity of one-variable polynomials, checked against brute force."""

from fractions import Fraction
import math
import random

import pytest

from rational_tiles.algebra.cyclotomic import zeta
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.algebra.unipoly import UniPoly, cyclotomic_polynomial, poly_gcd_univariate
from rational_tiles.errors import AlgebraError
from rational_tiles.solver.roots import RootOfUnity
from rational_tiles.solver.univariate import (
    cyclotomic_roots_univariate,
    inverse_totient,
    orders_with_phi_at_most,
)

NON_CYCLOTOMIC = (
    UniPoly([-2, 1]),
    UniPoly([1, -3, 1]),
    UniPoly([2, 1, 2]),  # roots on the unit circle, not roots of unity
    UniPoly([-1, -1, 0, 1]),
    UniPoly([2, 1, 1]),
)


def _primitive(n: int) -> set[RootOfUnity]:
    return {RootOfUnity.of(k, n) for k in range(n) if math.gcd(k, n) == 1}


def test_unipoly_arithmetic():
    f = UniPoly([1, 1])
    g = UniPoly([-1, 1])
    assert f * g == UniPoly([-1, 0, 1])
    q, r = UniPoly([-1, 0, 1]).divmod(g)
    assert q == f and r.is_zero()
    assert UniPoly([0, 0, 3]).derivative() == UniPoly([0, 6])
    assert poly_gcd_univariate(f * g, g * g) == g


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == UniPoly([-1, 1])
    assert cyclotomic_polynomial(6) == UniPoly([1, -1, 1])
    assert cyclotomic_polynomial(12).degree == 4


def test_inverse_totient():
    assert inverse_totient(4) == frozenset({5, 8, 10, 12})
    assert inverse_totient(1) == frozenset({1, 2})
    assert inverse_totient(14) == frozenset()
    assert 7 in orders_with_phi_at_most(6)


def test_simple_roots():
    assert cyclotomic_roots_univariate(UniPoly([1, 0, 1])) == _primitive(4)
    assert cyclotomic_roots_univariate(UniPoly([-1, 0, 0, 0, 0, 0, 1])) == set().union(
        *(_primitive(d) for d in (1, 2, 3, 6))
    )
    assert cyclotomic_roots_univariate(UniPoly([-2, 1])) == set()


def test_repeated_and_laurent_factors():
    f = cyclotomic_polynomial(3) * cyclotomic_polynomial(3) * UniPoly([0, 0, 1])
    assert cyclotomic_roots_univariate(f) == _primitive(3)


def test_cyclotomic_coefficients_are_confirmed_on_the_input():
    # zeta(4)*x - 1 vanishes only at x = -i
    poly = SparsePoly(1, {(1,): zeta(4), (0,): -1})
    assert cyclotomic_roots_univariate(poly) == {RootOfUnity(Fraction(3, 4))}


def test_zero_polynomial_is_rejected():
    with pytest.raises(AlgebraError):
        cyclotomic_roots_univariate(UniPoly([]))


def test_random_products_match_trial_division():
    rng = random.Random(2024)
    orders = [n for n in range(1, 40) if cyclotomic_polynomial(n).degree <= 8]
    for _ in range(200):
        f = UniPoly([1])
        expected: set[RootOfUnity] = set()
        while True:
            if rng.random() < 0.7:
                n = rng.choice(orders)
                factor = cyclotomic_polynomial(n)
                roots = _primitive(n)
            else:
                factor = rng.choice(NON_CYCLOTOMIC)
                roots = set()
            if f.degree + factor.degree > 20:
                break
            f = f * factor
            expected |= roots
        if f.degree < 1:
            continue
        assert cyclotomic_roots_univariate(f) == expected
