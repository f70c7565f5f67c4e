"""Vertex-combination cases and their angle parametrizations."""

from fractions import Fraction

import pytest

from rational_tiles.combinatorics.vertices import VertexType
from rational_tiles.errors import CaseError
from rational_tiles.tiling.angles import ALPHA, BETA, DELTA, GAMMA, INV_F, AngleForm, format_angles
from rational_tiles.tiling.cases import case_parametrization, enumerate_cases, get_case


def test_thirty_six_distinct_cases():
    cases = enumerate_cases()
    assert len(cases) == 36
    assert len({c.case_id for c in cases}) == 36
    assert cases[0].case_id == "abd"
    assert sum(len(c.vertices) == 2 and c.group == "two degree-3 vertices" for c in cases) == 7
    assert all(len(c.header_scalings) == c.nvars for c in cases)


def test_only_abd_has_two_free_angles():
    free = {c.case_id: c.free for c in enumerate_cases() if len(c.free) != 1}
    assert free == {"abd": (BETA, DELTA)}


def test_every_parametrization_satisfies_its_vertices():
    for case in enumerate_cases():
        params = case_parametrization(case)
        total = params[ALPHA] + params[BETA] + params[GAMMA] + params[DELTA]
        assert total == AngleForm.build(2, {INV_F: 4}), case.case_id
        for vertex in case.vertices:
            value = sum(
                (n * params[t] for n, t in zip(vertex.counts, (ALPHA, BETA, GAMMA, DELTA), strict=True)),
                AngleForm.build(0),
            )
            assert value == AngleForm.build(2), (case.case_id, vertex.code())


def test_b3_a4_parametrization():
    params = case_parametrization(get_case("b3+a4"))
    assert params[ALPHA] == AngleForm.build(Fraction(1, 2))
    assert params[BETA] == AngleForm.build(Fraction(2, 3))
    assert params[GAMMA] == AngleForm.build(Fraction(5, 6), {DELTA: -1, INV_F: 4})
    assert params[DELTA] == AngleForm.variable(DELTA)
    assignment = {DELTA: Fraction(1, 6), INV_F: Fraction(1, 6)}
    values = [params[t].evaluate(assignment) for t in (ALPHA, BETA, GAMMA, DELTA)]
    assert format_angles(values) == "(3,4,8,1)/6"


def test_abd_parametrization():
    params = case_parametrization(get_case("abd"))
    assert params[ALPHA] == AngleForm.build(2, {BETA: -1, DELTA: -1})
    assert params[GAMMA] == AngleForm.build(0, {INV_F: 4})
    assert str(params[ALPHA]) == "2 - β - δ"


def test_mirrored_ids_resolve():
    acd = get_case("acd")
    assert acd.vertices == (VertexType.parse("acd"),)
    assert acd.free == (GAMMA, ALPHA)
    mirror = get_case("c3+d4")
    assert mirror.case_id == "c3+d4"
    assert mirror.free == (ALPHA,)
    assert mirror.header.startswith("mirror of b3+a4")


def test_unknown_case_id():
    with pytest.raises(CaseError) as info:
        get_case("a5")
    assert info.value.case_id == "a5"
    assert "unknown case id" in str(info.value)


def test_vertex_notation():
    vertex = VertexType.parse("a2bc")
    assert vertex.counts == (2, 1, 1, 0)
    assert vertex.degree == 4
    assert vertex.code() == "a2bc"
    assert str(vertex) == "α²βγ"
    assert vertex.mirrored().code() == "bcd2"
    with pytest.raises(ValueError):
        VertexType.parse("ae")
