"""Edge lengths of the spherical quadrilateral with given angles.

Vertices A, B, C, D carry the angles α, β, γ, δ; AB = BC = CD = a and DA = b.
Starting at A = (0, 0, 1) heading along t₀ = (1, 0, 0) we walk the boundary
counterclockwise, turning left by π minus the interior angle at B, C and D.
The walk closes when the end point returns to A, which gives two equations in
(a, b). They are solved by damped Newton iterations from a grid of starting
points, all at once with numpy.

Lengths and angles are in π-units throughout the public API.
"""

from collections.abc import Sequence
from dataclasses import dataclass, field
import math

import numpy as np

from rational_tiles.errors import GeometryError
from rational_tiles.tiling.trig import compatibility_residual
from rational_tiles.utils.logger import logger

__all__ = ["QuadGeometry", "interior_angles", "solve_edge_lengths", "walk_vertices"]

GRID_STEP = 0.02
DEDUPE_TOL = 1e-8
CLOSURE_TOL = 1e-11
ANGLE_TOL = 1e-9
RESIDUAL_TOL = 1e-10

_A = np.array([0.0, 0.0, 1.0])
_T0 = np.array([1.0, 0.0, 0.0])


@dataclass(frozen=True)
class QuadGeometry:
    """A realization of an angle tuple; ``alternatives`` lists further simple (a, b) roots."""

    angles: tuple[float, float, float, float]
    a: float
    b: float
    convex: bool
    simple: bool
    vertices: np.ndarray = field(repr=False, compare=False)
    alternatives: tuple[tuple[float, float], ...] = ()

    @property
    def ambiguous(self) -> bool:
        return bool(self.alternatives)


def _move(p: np.ndarray, t: np.ndarray, length: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c = np.cos(length)[:, None]
    s = np.sin(length)[:, None]
    return c * p + s * t, -s * p + c * t


def _turn(p: np.ndarray, t: np.ndarray, angle: float) -> np.ndarray:
    return math.cos(angle) * t + math.sin(angle) * np.cross(p, t)


def _walk(a: np.ndarray, b: np.ndarray, angles: Sequence[float]):
    """Vertices B, C, D, the end point and the final heading for each (a, b) pair (radians)."""
    n = len(a)
    p = np.tile(_A, (n, 1))
    t = np.tile(_T0, (n, 1))
    corners = []
    for length, interior in ((a, angles[1]), (a, angles[2]), (a, angles[3])):
        p, t = _move(p, t, length)
        corners.append(p)
        t = _turn(p, t, math.pi - interior)
    p, t = _move(p, t, b)
    return corners, p, t


def _closure(x: np.ndarray, angles: Sequence[float]) -> np.ndarray:
    _, end, _ = _walk(x[:, 0], x[:, 1], angles)
    return end[:, :2]


def _newton(starts: np.ndarray, angles: Sequence[float], iterations: int = 60) -> tuple[np.ndarray, np.ndarray]:
    x = starts.copy()
    h = 1e-7
    for _ in range(iterations):
        r = _closure(x, angles)
        jac = np.empty((len(x), 2, 2))
        for j in range(2):
            shifted = x.copy()
            shifted[:, j] += h
            jac[:, :, j] = (_closure(shifted, angles) - r) / h
        det = jac[:, 0, 0] * jac[:, 1, 1] - jac[:, 0, 1] * jac[:, 1, 0]
        ok = np.abs(det) > 1e-14
        step = np.zeros_like(x)
        if ok.any():
            step[ok] = np.einsum("nij,nj->ni", np.linalg.inv(jac[ok]), -r[ok])
        norm = np.linalg.norm(step, axis=1, keepdims=True)
        step = np.where(norm > 0.1, step * 0.1 / np.maximum(norm, 1e-300), step)
        x = x + step
    return x, np.linalg.norm(_closure(x, angles), axis=1)


def walk_vertices(a: float, b: float, angles: Sequence[float]) -> np.ndarray:
    """The four vertices A, B, C, D (rows) for edge lengths and angles in π-units."""
    rad = [math.pi * float(x) for x in angles]
    corners, _, _ = _walk(np.array([math.pi * a]), np.array([math.pi * b]), rad)
    return np.vstack([_A, *(c[0] for c in corners)])


def _angle_at(prev: np.ndarray, here: np.ndarray, nxt: np.ndarray) -> float:
    """Counterclockwise angle at ``here`` from the direction to ``nxt`` to the direction to ``prev``."""

    def tangent(target):
        v = target - np.dot(target, here) * here
        return v / np.linalg.norm(v)

    out, back = tangent(nxt), tangent(prev)
    value = math.atan2(np.dot(here, np.cross(out, back)), np.dot(out, back))
    return (value % (2 * math.pi)) / math.pi


def interior_angles(vertices: np.ndarray) -> tuple[float, float, float, float]:
    """Interior angles (π-units) of a counterclockwise spherical quadrilateral."""
    return tuple(_angle_at(vertices[i - 1], vertices[i], vertices[(i + 1) % 4]) for i in range(4))


def _arcs_cross(p1, p2, q1, q2) -> bool:
    n1, n2 = np.cross(p1, p2), np.cross(q1, q2)
    line = np.cross(n1, n2)
    if np.linalg.norm(line) < 1e-14:
        return False
    line = line / np.linalg.norm(line)
    for x in (line, -line):
        on_first = np.dot(np.cross(p1, x), n1) >= 0 and np.dot(np.cross(x, p2), n1) >= 0
        on_second = np.dot(np.cross(q1, x), n2) >= 0 and np.dot(np.cross(x, q2), n2) >= 0
        if on_first and on_second:
            return True
    return False


def _is_simple(vertices: np.ndarray) -> bool:
    a, b, c, d = vertices
    return not (_arcs_cross(a, b, c, d) or _arcs_cross(b, c, d, a))


def solve_edge_lengths(angles: Sequence) -> QuadGeometry:
    """Find (a, b) in π-units realizing ``angles`` = (α, β, γ, δ).

    Raises
    ------
    GeometryError
        If the angles violate the compatibility equation or no simple
        quadrilateral with 0 < a < 1, 0 < b ≤ 1 has them.
    """
    values = tuple(float(x) for x in angles)
    residual = compatibility_residual(values)
    if abs(residual) > RESIDUAL_TOL:
        raise GeometryError(f"angles {values} miss the compatibility equation by {residual:.3g}")
    rad = [math.pi * x for x in values]
    grid = np.arange(GRID_STEP, 1.0, GRID_STEP)
    starts = math.pi * np.array([(a, b) for a in grid for b in grid])
    roots, norms = _newton(starts, rad)
    keep = norms < CLOSURE_TOL
    _, end, heading = _walk(roots[:, 0], roots[:, 1], rad)
    keep &= end[:, 2] > 0
    found: list[tuple[float, float]] = []
    for (a, b), ok, tin in zip(roots / math.pi, keep, heading, strict=True):
        if not ok or not (0 < a < 1 and 0 < b <= 1 + DEDUPE_TOL):
            continue
        w = -tin
        alpha = (math.atan2(np.dot(_A, np.cross(_T0, w)), np.dot(_T0, w)) % (2 * math.pi)) / math.pi
        if abs(alpha - values[0]) > ANGLE_TOL:
            continue
        if any(abs(a - a0) < DEDUPE_TOL and abs(b - b0) < DEDUPE_TOL for a0, b0 in found):
            continue
        found.append((float(a), float(min(b, 1.0))))
    simple = [(a, b) for a, b in sorted(found) if _is_simple(walk_vertices(a, b, values))]
    if not simple:
        raise GeometryError(f"no simple quadrilateral with angles {values} ({len(found)} closed walks)")
    if len(simple) > 1:
        logger.warning(f"angles {values} have {len(simple)} simple realizations: {simple}")
    a, b = simple[0]
    return QuadGeometry(
        angles=values,
        a=a,
        b=b,
        convex=all(x < 1 for x in values),
        simple=True,
        vertices=walk_vertices(a, b, values),
        alternatives=tuple(simple[1:]),
    )
