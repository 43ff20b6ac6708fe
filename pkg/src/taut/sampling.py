"""Polyline resampling that preserves the traced curve.

Spacing consecutive points at most half the minimum obstacle distance
guarantees a triangle of three consecutive points can never trap more
than one obstacle (the diameter of such a triangle stays below the
minimum obstacle separation).
"""

from __future__ import annotations

import math

from .geometry import Point, bbox
from .spatial_index import ObstacleSet


def min_obstacle_distance(obstacles: ObstacleSet) -> float | None:
    """Exact minimum pairwise obstacle distance; None with fewer than two obstacles."""
    return obstacles.min_dist


def resample(polyline: list[Point], h: float) -> list[Point]:
    """Subdivide every segment into equal pieces no longer than h.

    Output points lie exactly on the input segments and in order, every
    original vertex is kept unchanged, so the traced curve (and with it the
    homotopy class) is untouched.
    """
    if h <= 0:
        raise ValueError("spacing h must be positive")
    if len(polyline) < 2:
        raise ValueError("resample needs at least two points")
    out: list[Point] = [polyline[0]]
    for u, v in zip(polyline, polyline[1:]):
        seg = math.dist(u, v)
        pieces = max(1, math.ceil(seg / h))
        for j in range(1, pieces):
            f = j / pieces
            out.append((u[0] + f * (v[0] - u[0]), u[1] + f * (v[1] - u[1])))
        out.append(v)
    return out


def default_spacing(points: list[Point]) -> float:
    """Fallback spacing when no obstacle distance exists: 1% of the bbox diagonal."""
    if not points:
        return 1.0
    min_x, min_y, max_x, max_y = bbox(points)
    diag = math.hypot(max_x - min_x, max_y - min_y)
    return diag * 0.01 if diag > 0 else 1.0
