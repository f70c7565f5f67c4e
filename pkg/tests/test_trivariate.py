"""Comparison surfaces of the αβδ polynomial and their eliminants."""

import math

import pytest

from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.algebra.sparse import SparsePoly
from rational_tiles.errors import AlgebraError
from rational_tiles.solver import cyclotomic_points
from rational_tiles.solver.trivariate import TRIVARIATE_PATTERNS, elimination_branches
from rational_tiles.tables import TRIVARIATE_FACTORS

# (-x, -y, -z): the reference factors are written after a change of variables
SUBSTITUTED_BRANCH = 6


def _unit(poly: SparsePoly) -> SparsePoly:
    return poly.normalized()[1].scaled_to_unit()


def _in_y_z(text: str) -> SparsePoly:
    poly = parse_polynomial(text, 3)
    return _unit(SparsePoly(2, {e[1:]: c for e, c in poly.terms.items()}))


def test_fifteen_patterns():
    assert len(TRIVARIATE_PATTERNS) == 15
    labels = [label for label, _ in TRIVARIATE_PATTERNS]
    assert labels[0] == "(-x, y, z)"
    assert labels[7] == "(x^2, y^2, z^2)"
    assert labels[-1] == "(-x^2, -y^2, -z^2)"


def test_abd_has_fifteen_branches(abd):
    assert len(abd.branches) == 15
    assert [b.number for b in abd.branches] == list(range(1, 16))


@pytest.mark.parametrize(
    "index", [i for i in range(len(TRIVARIATE_FACTORS)) if i != SUBSTITUTED_BRANCH]
)
def test_branch_factors_match_reference(abd, index):
    branch = abd.branches[index]
    found = {_unit(factor) for factor, _ in branch.factors}
    expected = {_in_y_z(text) for text in TRIVARIATE_FACTORS[index]}
    assert found == expected


def test_branches_are_recomputed_identically(abd):
    again = elimination_branches(abd.form.poly)
    assert [b.factor_text() for b in again] == [b.factor_text() for b in abd.branches]


def test_branches_need_two_or_three_variables():
    with pytest.raises(AlgebraError):
        elimination_branches(parse_polynomial("x^2 + 1", 1))


def test_abd_solutions_are_galois_closed(abd):
    points, families = cyclotomic_points(abd.form.poly)
    assert points and len(families) >= 3
    for point in points:
        for j in range(1, point.order):
            if math.gcd(j, point.order) != 1:
                continue
            image = point.galois(j)
            assert image in points or any(f.contains(image) for f in families), (point, j)
    for family in families:
        assert family.galois(-1) in families
