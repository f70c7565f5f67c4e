"""Vertex counting for candidate tiles: vertex types, balance, degree-3 combinations."""

from rational_tiles.combinatorics.vertices import (
    BalanceResult,
    VertexSpectrum,
    VertexType,
    balance_feasible,
    degree3_constraint_check,
    enumerate_vertex_types,
    parse_spectrum,
)

__all__ = [
    "BalanceResult",
    "VertexSpectrum",
    "VertexType",
    "balance_feasible",
    "degree3_constraint_check",
    "enumerate_vertex_types",
    "parse_spectrum",
]
