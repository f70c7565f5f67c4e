"""Exponent lattices and monomial changes of variables."""

from fractions import Fraction

import pytest

from rational_tiles.algebra.parser import parse_polynomial
from rational_tiles.errors import AlgebraError
from rational_tiles.solver import cyclotomic_points
from rational_tiles.solver.lattice import (
    apply_monomial_substitution,
    hermite_normal_form,
    lattice_fullness,
    lattice_preimages,
    map_point,
    orthogonal_lattice,
    primitive_vector,
    reduce_to_full_lattice,
    unimodular_completion,
)
from rational_tiles.solver.roots import CyclotomicPoint


def test_hermite_normal_form():
    assert hermite_normal_form([[2, 0], [0, 3], [2, 3]], 2) == [[2, 0], [0, 3]]
    assert hermite_normal_form([[0, 0], [-1, 2]], 2) == [[1, -2]]


@pytest.mark.parametrize(
    ("text", "full", "rank", "index"),
    [
        ("x + y + 1", True, 2, 1),
        ("x^2 + y^2 + 1", False, 2, 4),
        ("x*y - 1", False, 1, 0),
    ],
)
def test_lattice_fullness(text, full, rank, index):
    is_full, basis = lattice_fullness(parse_polynomial(text, 2))
    assert is_full is full
    assert basis.rank == rank
    assert basis.index == index


def test_monomial_has_no_lattice():
    with pytest.raises(AlgebraError):
        lattice_fullness(parse_polynomial("x^2*y", 2))


def test_monomial_substitution():
    poly = parse_polynomial("x*y - 1", 2)
    # x -> u, y -> v/u
    result = apply_monomial_substitution(poly, [[1, 0], [-1, 1]])
    assert result == parse_polynomial("y - 1", 2).normalized()[1]
    with pytest.raises(AlgebraError):
        apply_monomial_substitution(poly, [[1, 1], [2, 2]])
    with pytest.raises(AlgebraError):
        apply_monomial_substitution(poly, [[1]])


@pytest.mark.parametrize("direction", [(2, 3), (1, -1, 0), (3, 5, 7)])
def test_unimodular_completion(direction):
    u, w = unimodular_completion(direction)
    k = len(direction)
    assert [sum(u[0][j] * direction[j] for j in range(k))] == [1]
    assert all(sum(u[i][j] * direction[j] for j in range(k)) == 0 for i in range(1, k))
    assert tuple(w[i][0] for i in range(k)) == tuple(direction)
    identity = [[sum(u[i][m] * w[m][j] for m in range(k)) for j in range(k)] for i in range(k)]
    assert identity == [[int(i == j) for j in range(k)] for i in range(k)]


def test_completion_needs_a_primitive_vector():
    with pytest.raises(AlgebraError):
        unimodular_completion((2, 4))


def test_orthogonal_lattice():
    rows = orthogonal_lattice((1, 1, 0))
    assert len(rows) == 2
    assert all(r[0] + r[1] == 0 for r in rows)


def test_reduce_and_lift():
    reduced, rows = reduce_to_full_lattice(parse_polynomial("x^2 + y^2 + 1", 2))
    assert lattice_fullness(reduced)[0]
    assert sorted(map(tuple, rows)) == [(0, 2), (2, 0)]
    preimages = lattice_preimages([Fraction(1, 3), Fraction(2, 3)], [[2, 0], [0, 2]])
    assert set(preimages) == {
        (Fraction(1, 6), Fraction(1, 3)),
        (Fraction(1, 6), Fraction(5, 6)),
        (Fraction(2, 3), Fraction(1, 3)),
        (Fraction(2, 3), Fraction(5, 6)),
    }
    with pytest.raises(AlgebraError):
        reduce_to_full_lattice(parse_polynomial("x*y - 1", 2))


def test_map_point_and_primitive_vector():
    assert map_point((Fraction(1, 2), Fraction(1, 3)), [[1, 1], [0, 1]]) == (Fraction(5, 6), Fraction(1, 3))
    assert primitive_vector((Fraction(-2, 3), Fraction(4, 3))) == (1, -2)
    assert primitive_vector((0, 6, -9)) == (0, 2, -3)


def test_substitution_maps_points_to_points():
    poly = parse_polynomial("(x^2*y - 1)*(x + y + 1)", 2)
    # x -> u, y -> u*v
    matrix = [[1, 0], [1, 1]]
    points, families = cyclotomic_points(poly)
    new_points, new_families = cyclotomic_points(apply_monomial_substitution(poly, matrix))
    assert {CyclotomicPoint.from_fractions(map_point(p.fractions, matrix)) for p in new_points} == points
    assert len(new_families) == len(families)
