"""Numeric spherical geometry of a³b-quadrilaterals."""

from rational_tiles.geometry.quadrilateral import QuadGeometry, interior_angles, solve_edge_lengths, walk_vertices

__all__ = ["QuadGeometry", "interior_angles", "solve_edge_lengths", "walk_vertices"]
