"""Planar primitives shared by every other module.

All containment predicates are closed (boundary points count as inside),
and collinearity is decided with a tolerance relative to the bounding box
of the points involved, so results do not depend on absolute coordinate
scale.
"""

from __future__ import annotations

import math

Point = tuple[float, float]
Triangle = tuple[Point, Point, Point]

# Relative collinearity tolerance, applied to signed areas as TOL * scale^2
# where scale is the bounding-box extent of the points being tested.
TOL = 1e-12


def orient(a: Point, b: Point, c: Point) -> int:
    """Turn direction of a->b->c: +1 counter-clockwise, -1 clockwise, 0 collinear."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    w = max(ax, bx, cx) - min(ax, bx, cx)
    h = max(ay, by, cy) - min(ay, by, cy)
    s = w if w > h else h
    if abs(cross) <= TOL * s * s:
        return 0
    return 1 if cross > 0.0 else -1


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """Closed test: does p lie on segment a-b (within the collinearity tolerance)?"""
    px, py = p
    ax, ay = a
    bx, by = b
    w = max(px, ax, bx) - min(px, ax, bx)
    h = max(py, ay, by) - min(py, ay, by)
    s = w if w > h else h
    dx = bx - ax
    dy = by - ay
    len2 = dx * dx + dy * dy
    if len2 == 0.0:
        return math.dist(p, a) <= TOL * s
    cross = dx * (py - ay) - dy * (px - ax)
    tau = TOL * s * s
    if abs(cross) > tau:
        return False
    dot = dx * (px - ax) + dy * (py - ay)
    return -tau <= dot <= len2 + tau


def point_in_triangle(p: Point, t: Triangle) -> bool:
    """Closed containment; a degenerate triangle degrades to its spanning segment."""
    a, b, c = t
    if orient(a, b, c) == 0:
        lo = min(a, b, c)
        hi = max(a, b, c)
        return on_segment(p, lo, hi)
    s1 = orient(a, b, p)
    s2 = orient(b, c, p)
    if s1 * s2 < 0:
        return False
    s3 = orient(c, a, p)
    if (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0):
        return True
    return False


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed intersection test between segments a-b and c-d (touching counts)."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return False


def convex_hull(points: list[Point]) -> list[Point]:
    """Convex hull in counter-clockwise order, without interior or collinear vertices.

    A single point hulls to itself; an all-collinear input collapses to its
    two extreme points.
    """
    if not points:
        raise ValueError("convex_hull requires at least one point")
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points collinear collapse into the chain ends
        return [pts[0], pts[-1]]
    return hull


def centroid(points: list[Point]) -> Point:
    """Arithmetic mean of the coordinates."""
    if not points:
        raise ValueError("centroid requires at least one point")
    sx = sy = 0.0
    for x, y in points:
        sx += x
        sy += y
    n = len(points)
    return (sx / n, sy / n)


def polyline_length(pts: list[Point], closed: bool = False) -> float:
    """Total Euclidean length of the polyline, wrapping around when closed."""
    need = 3 if closed else 2
    if len(pts) < need:
        raise ValueError(f"polyline needs at least {need} points")
    total = 0.0
    for u, v in zip(pts, pts[1:]):
        total += math.dist(u, v)
    if closed:
        total += math.dist(pts[-1], pts[0])
    return total


def in_adjacent_partition(p: Point, q_prev: Point, q_i: Point, q_next: Point,
                          c: Point) -> bool:
    """Is p in the part of triangle (q_prev, q_i, q_next) adjacent to q_i?

    The segments q_prev-c and q_next-c split the triangle in two; the side
    touching q_i is the closed quadrilateral (q_prev, q_i, q_next, c).
    Points exactly on either splitting segment count as adjacent.
    """
    tri = (q_prev, q_i, q_next)
    if not point_in_triangle(p, tri):
        raise ValueError("p must lie inside the processor triangle")
    if not point_in_triangle(c, tri):
        raise ValueError("partition point must lie inside the processor triangle")
    if not point_in_triangle(p, (q_prev, c, q_next)):
        return True
    return on_segment(p, q_prev, c) or on_segment(p, c, q_next)


def bbox(points: list[Point]) -> tuple[float, float, float, float]:
    """(min_x, min_y, max_x, max_y) of a non-empty point sequence."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)
