"""Vertex types, spectra and the counting dismissals."""

from fractions import Fraction

import pytest

from rational_tiles.combinatorics.vertices import (
    VertexSpectrum,
    VertexType,
    balance_feasible,
    degree3_constraint_check,
    enumerate_vertex_types,
    parse_spectrum,
)
from rational_tiles.tables import NO_TILING, SPORADIC, parse_angles


@pytest.mark.parametrize("row", SPORADIC, ids=lambda r: r.angles)
def test_reference_spectra_are_consistent(row):
    angles = parse_angles(row.angles)
    for text in row.spectra:
        spectrum = parse_spectrum(text, row.f)
        assert spectrum.is_consistent(angles), text


@pytest.mark.parametrize("row", SPORADIC, ids=lambda r: r.angles)
def test_reference_solutions_balance(row):
    angles = parse_angles(row.angles)
    result = balance_feasible(angles, row.f)
    assert result.feasible
    assert result.witness.is_consistent(angles)
    assert result.explanation == str(result.witness)


@pytest.mark.parametrize(("text", "f"), NO_TILING)
def test_balance_dismissals(text, f):
    result = balance_feasible(parse_angles(text), f)
    assert not result.feasible
    assert result.witness is None
    assert result.explanation


def test_vertex_types_of_a_solution():
    types = enumerate_vertex_types(parse_angles("(6,3,4,3)/6"))
    assert VertexType.parse("abd") in types
    assert VertexType.parse("c3") in types
    assert all(t.angle_sum(parse_angles("(6,3,4,3)/6")) == 2 for t in types)
    assert all((t.counts[0] + t.counts[3]) % 2 == 0 for t in types)
    with pytest.raises(ValueError):
        enumerate_vertex_types((Fraction(0), Fraction(1), Fraction(1), Fraction(1)))


def test_spectrum_counts():
    spectrum = parse_spectrum("8bd2+8a2bc+2c4", 16)
    assert spectrum.multiplicities[VertexType.parse("bd2")] == 8
    assert spectrum.angle_totals() == (16, 16, 16, 16)
    assert spectrum.degree_counts() == {3: 8, 4: 10}
    assert spectrum.is_consistent(parse_angles("(1,4,2,2)/4"))


def test_unbalanced_spectrum_is_inconsistent():
    spectrum = VertexSpectrum({VertexType.parse("abd"): 6}, 6)
    assert spectrum.angle_totals() == (6, 6, 0, 6)
    assert not spectrum.is_consistent()


def test_degree3_constraints():
    assert degree3_constraint_check(parse_angles("(6,3,4,3)/6"))
    # every angle 1/3: no vertex of degree three
    assert not degree3_constraint_check((Fraction(1, 3),) * 4)
