"""Structural repair for triangles that trap several obstacles at once.

Sparse sampling can leave two or more obstacles inside one processor
triangle, where moving the middle processor could drag the path across an
obstacle. The repair: split the trapped obstacles by the segments joining
the neighbours to their centroid, take the convex hull of the part on the
middle processor's side, and replace that processor with one new processor
per hull vertex, each placed just outside the hull inside the wedge formed
by extending the vertex's two edges. Points in those wedges are on the
outer side of both incident edge lines, so the chain threaded through them
in hull order cannot cut a hull edge. The threading direction that keeps
the detour in the original homotopy class is verified against the crossing
word, with the reverse threading as a one-shot fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .geometry import (Point, centroid, convex_hull, in_adjacent_partition,
                       orient, point_in_triangle)
from .homotopy import HomotopyViolationError, loop_signature, signature
from .spatial_index import ObstacleSet

if TYPE_CHECKING:
    from .tightening import StringConfig


@dataclass(frozen=True)
class MultiResolution:
    """Record of one repair: which processor went, what replaced it."""

    removed_index: int
    inserted: tuple[Point, ...]
    hull_vertices: tuple[Point, ...]


def _unit(dx: float, dy: float) -> tuple[float, float] | None:
    n = math.hypot(dx, dy)
    if n == 0.0:
        return None
    return dx / n, dy / n


def adjacent_obstacles(q_prev: Point, q_i: Point, q_next: Point,
                       ids: list[int], obstacles: ObstacleSet) -> list[int]:
    """Trapped obstacles on the q_i side of the centroid split.

    The split segments run from q_prev and q_next to the centroid of all
    trapped obstacles; boundary points count as adjacent. The mean of
    points inside the triangle cannot be a vertex of their own hull-side
    region, so the result is never empty.
    """
    if len(ids) < 2:
        raise ValueError("the split needs at least two trapped obstacles")
    tri = (q_prev, q_i, q_next)
    pts = [obstacles.points[j] for j in ids]
    for p in pts:
        if not point_in_triangle(p, tri):
            raise ValueError("all trapped obstacles must lie inside the triangle")
    c = centroid(pts)
    adj = [j for j, p in zip(ids, pts)
           if in_adjacent_partition(p, q_prev, q_i, q_next, c)]
    return adj if adj else list(ids)


def _chain_order(hull: list[Point], q_prev: Point, q_next: Point,
                 q_i: Point) -> list[int]:
    """Hull-vertex visiting order: start nearest q_prev, end nearest q_next.

    Of the two ways around the hull, prefer the one reaching the exit
    vertex last, which routes the walk over the q_i side; ties fall back
    to whichever direction leaves the start-exit chord on q_i's side.
    """
    m = len(hull)
    s = min(range(m), key=lambda i: math.dist(hull[i], q_prev))
    e = min(range(m), key=lambda i: math.dist(hull[i], q_next))
    forward = [(s + j) % m for j in range(m)]
    if m == 1 or s == e:
        return forward
    backward = [(s - j) % m for j in range(m)]
    pos_f = (e - s) % m
    pos_b = (s - e) % m
    if pos_f != pos_b:
        return forward if pos_f > pos_b else backward
    side = orient(hull[s], hull[e], q_i)
    first = hull[(s + 1) % m]
    return forward if orient(hull[s], hull[e], first) == side else backward


def insertion_points(hull: list[Point], q_prev: Point, q_next: Point,
                     q_i: Point, delta: float) -> list[Point]:
    """One new processor position per hull vertex, offset distance delta.

    Regular vertices are pushed along the outward continuation of their
    two incident edges (inside the safe wedge); a single-point hull is
    pushed toward q_i and a two-point hull perpendicular to itself on the
    q_i side. The output is ordered so walking q_prev, points..., q_next
    follows the hull boundary (see _chain_order).
    """
    if delta <= 0:
        raise ValueError("insertion offset delta must be positive")
    m = len(hull)
    if m == 1:
        v = hull[0]
        d = _unit(q_i[0] - v[0], q_i[1] - v[1])
        if d is None:
            mid = ((q_prev[0] + q_next[0]) / 2.0, (q_prev[1] + q_next[1]) / 2.0)
            d = _unit(v[0] - mid[0], v[1] - mid[1]) or (0.0, 1.0)
        return [(v[0] + delta * d[0], v[1] + delta * d[1])]
    if m == 2:
        a, b = hull
        t = _unit(b[0] - a[0], b[1] - a[1])
        n = (-t[1], t[0])
        if orient(a, b, q_i) < 0:
            n = (-n[0], -n[1])
        pts = [(a[0] + delta * n[0], a[1] + delta * n[1]),
               (b[0] + delta * n[0], b[1] + delta * n[1])]
        if math.dist(b, q_prev) < math.dist(a, q_prev):
            pts.reverse()
        return pts
    offsets: list[Point] = []
    for idx, v in enumerate(hull):
        before = hull[idx - 1]
        after = hull[(idx + 1) % m]
        d1 = _unit(v[0] - before[0], v[1] - before[1])
        d2 = _unit(v[0] - after[0], v[1] - after[1])
        d = _unit(d1[0] + d2[0], d1[1] + d2[1])
        offsets.append((v[0] + delta * d[0], v[1] + delta * d[1]))
    return [offsets[i] for i in _chain_order(hull, q_prev, q_next, q_i)]


def resolve_multi(cfg: "StringConfig", i: int, ids: list[int],
                  obstacles: ObstacleSet, delta: float) -> MultiResolution:
    """Replace processor i with a verified detour around its obstacle cluster.

    delta is an upper bound on the offset; it is shrunk to 5% of the hull
    diagonal when the hull is large enough for that to matter, keeping the
    new processors close to the cluster. The configuration is edited in
    place and the record of the edit returned. Raises
    HomotopyViolationError when neither threading direction preserves the
    path's crossing word.
    """
    if len(ids) < 2:
        raise ValueError("resolve_multi needs at least two trapped obstacles")
    w = cfg.weights
    k = len(w)
    if cfg.closed:
        a = w[i - 1] if i else w[k - 1]
        c = w[(i + 1) % k]
    else:
        if i <= 0 or i >= k - 1:
            raise ValueError("terminal processors cannot be replaced")
        a, c = w[i - 1], w[i + 1]
    adj = adjacent_obstacles(a, w[i], c, ids, obstacles)
    hull = convex_hull([obstacles.points[j] for j in adj])
    eff = delta
    if len(hull) >= 2:
        xs = [p[0] for p in hull]
        ys = [p[1] for p in hull]
        diag = math.hypot(max(xs) - min(xs), max(ys) - min(ys))
        if diag > 0:
            eff = min(delta, 0.05 * diag)
    chain = insertion_points(hull, a, c, w[i], eff)
    # A repair that fires next to an earlier repair of the same cluster
    # regenerates near-identical offsets; dropping chain points that sit
    # within the offset scale of a nearby existing vertex keeps repairs
    # idempotent instead of piling up duplicates.
    window = w[max(0, i - 3):i] + w[i + 1:i + 4]
    if cfg.closed:
        window += [w[(i + j) % k] for j in (-3, -2, -1, 1, 2, 3)]
    kept = [p for p in chain
            if all(math.dist(p, q) >= eff for q in window)]
    if not kept:
        kept = [min(chain, key=lambda p: math.dist(p, w[i]))]
    chain = kept
    sig_of = loop_signature if cfg.closed else signature
    before = sig_of(w, obstacles)
    for cand in (chain, list(reversed(chain))):
        trial = w[:i] + cand + w[i + 1:]
        if sig_of(trial, obstacles) == before:
            w[i:i + 1] = cand
            return MultiResolution(i, tuple(cand), tuple(hull))
    raise HomotopyViolationError(
        "no hull threading preserves the path class around the cluster")
