"""Shared generators and small geometry helpers for the test suite.

Everything is seeded; no test depends on global random state.
"""

from __future__ import annotations

import math
import random

from taut import ObstacleSet, build, resample

MIN_SEPARATION = 0.08


def separated_points(rng: random.Random, n: int, lo: float = 0.0,
                     hi: float = 1.0, sep: float = MIN_SEPARATION) -> list[tuple[float, float]]:
    """n points in [lo, hi]^2 with pairwise separation at least sep."""
    pts: list[tuple[float, float]] = []
    tries = 0
    while len(pts) < n and tries < 50_000:
        tries += 1
        cand = (rng.uniform(lo, hi), rng.uniform(lo, hi))
        if all(math.dist(cand, p) >= sep for p in pts):
            pts.append(cand)
    return pts


def point_segment_distance(p, a, b) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx, dy = bx - ax, by - ay
    den = dx * dx + dy * dy
    if den == 0.0:
        return math.dist(p, a)
    t = max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / den))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def path_clear_of(path, points, margin: float) -> bool:
    """True when every obstacle stays at least margin away from the polyline."""
    for a, b in zip(path, path[1:]):
        for p in points:
            if point_segment_distance(p, a, b) < margin:
                return False
    return True


def random_path(rng: random.Random, obstacles, n_waypoints: int | None = None,
                margin: float = 1e-3) -> list[tuple[float, float]]:
    """Left-to-right wiggly polyline across the scene, clear of the obstacles."""
    n_way = n_waypoints if n_waypoints is not None else rng.randint(3, 6)
    for _ in range(200):
        xs = sorted(rng.uniform(-0.1, 1.1) for _ in range(n_way))
        path = [(-0.25, rng.uniform(0.1, 0.9))]
        path += [(x, rng.uniform(-0.3, 1.3)) for x in xs]
        path.append((1.25, rng.uniform(0.1, 0.9)))
        if path_clear_of(path, obstacles, margin):
            return path
    raise RuntimeError("could not place a clear path")


def random_scene(seed: int, n_obstacles: int | None = None,
                 dense: bool = True) -> tuple[ObstacleSet, list[tuple[float, float]]]:
    """Seeded obstacle set plus an initial path, optionally d/2-resampled."""
    rng = random.Random(seed)
    n = n_obstacles if n_obstacles is not None else rng.randint(5, 50)
    obstacles = build(separated_points(rng, n))
    path = random_path(rng, obstacles.points)
    if dense and obstacles.min_dist is not None:
        path = resample(path, obstacles.min_dist / 2.0)
    return obstacles, path


def dist_to_polygon(p, poly) -> float:
    """Distance from p to the boundary of a closed polygon."""
    return min(point_segment_distance(p, a, b)
               for a, b in zip(poly, poly[1:] + poly[:1]))


def point_in_polygon(p, poly) -> bool:
    """Ray-casting containment for an arbitrary simple polygon."""
    x, y = p
    inside = False
    n = len(poly)
    for i in range(n):
        x0, y0 = poly[i]
        x1, y1 = poly[(i + 1) % n]
        if (y0 > y) != (y1 > y):
            xint = (x1 - x0) * (y - y0) / (y1 - y0) + x0
            if x < xint:
                inside = not inside
    return inside
