"""Brute-force reference implementations used as independent test oracles.

Only meant for desk-scale instances; everything here trades speed for
being obviously correct and structurally unrelated to the fast paths it
cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .geometry import Point, Triangle, point_in_triangle
from .homotopy import PathThroughObstacleError, signature
from .spatial_index import ObstacleSet


@dataclass(frozen=True)
class ShortestPathResult:
    """Outcome of the exhaustive shortest-homotopic-path search.

    ``path`` has its interior vertices exactly at obstacle points;
    ``representative`` is the same path nudged off obstacle contact, so its
    crossing word is well defined and equals the input's. status is "ok"
    or "depth-exceeded" when no candidate within the via budget matched.
    """

    path: list[Point] | None
    length: float | None
    status: str
    representative: list[Point] | None = None


def _unit(dx: float, dy: float) -> tuple[float, float] | None:
    n = math.hypot(dx, dy)
    if n == 0.0:
        return None
    return dx / n, dy / n


def _realizations(seq: list[int], start: Point, end: Point,
                  pts: list[Point], eta: float, rho: float):
    """Near-contact polylines realizing the via sequence, one per variant.

    Each visited obstacle becomes a vertex pushed distance eta off the
    elbow (away from the bend, the side a taut wrap can be peeled toward);
    straight-through visits are ambiguous and yield one variant per side.
    Consecutive revisits of the same obstacle become small standoff loops
    of radius rho, one variant per winding direction.
    """
    runs: list[tuple[int, int]] = []
    for j in seq:
        if runs and runs[-1][0] == j:
            runs[-1] = (j, runs[-1][1] + 1)
        else:
            runs.append((j, 1))
    anchors = [start] + [pts[j] for j, _ in runs] + [end]
    per_run_options: list[list[list[Point]]] = []
    for idx, (j, count) in enumerate(runs):
        v = pts[j]
        prev_a = anchors[idx]
        next_a = anchors[idx + 2]
        u1 = _unit(prev_a[0] - v[0], prev_a[1] - v[1])
        u2 = _unit(next_a[0] - v[0], next_a[1] - v[1])
        if u1 is None or u2 is None:
            dirs = [(1.0, 0.0), (-1.0, 0.0)]
        else:
            bis = _unit(u1[0] + u2[0], u1[1] + u2[1])
            if bis is None:
                perp = _unit(-(next_a[1] - prev_a[1]), next_a[0] - prev_a[0])
                perp = perp or (0.0, 1.0)
                dirs = [perp, (-perp[0], -perp[1])]
            else:
                # a taut wrap peels away from the bend; windings also need
                # the entry on the other side, so try both for revisits
                dirs = [(-bis[0], -bis[1])]
                if count > 1:
                    dirs.append((bis[0], bis[1]))
        options: list[list[Point]] = []
        ccw = [(rho, 0.0), (0.0, rho), (-rho, 0.0), (0.0, -rho)]
        cw = [(rho, 0.0), (0.0, -rho), (-rho, 0.0), (0.0, rho)]
        for dx, dy in dirs:
            base = (v[0] + eta * dx, v[1] + eta * dy)
            if count == 1:
                options.append([base])
            else:
                for circle in (ccw, cw):
                    verts = [base]
                    for _ in range(count - 1):
                        verts.extend((v[0] + ox, v[1] + oy) for ox, oy in circle)
                        verts.append(base)
                    options.append(verts)
        per_run_options.append(options)
    for combo in product(*per_run_options):
        yield [start] + [p for chunk in combo for p in chunk] + [end]


def oracle_shortest_homotopic(path: list[Point], obstacles: ObstacleSet,
                              max_via: int = 3) -> ShortestPathResult:
    """Exhaustively search the shortest path in the input's class.

    Enumerates every sequence of at most max_via obstacle via-points
    (repeats allowed, realized as standoff loops for windings), keeps the
    candidates whose crossing word matches the input's, and returns the
    shortest survivor. Branches whose partial length already exceeds the
    incumbent are pruned.
    """
    n = len(obstacles)
    if n > 10 or max_via > 4:
        raise ValueError("oracle is restricted to <=10 obstacles and <=4 vias")
    target = signature(path, obstacles)
    start, end = path[0], path[-1]
    pts = obstacles.points
    corners = pts + [start, end]
    xs = [p[0] for p in corners]
    ys = [p[1] for p in corners]
    scale = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    rho = 1e-4 * scale

    best: tuple[float, list[Point], list[Point]] | None = None

    def consider(seq: list[int]) -> None:
        nonlocal best
        exact = [start] + [pts[j] for j in seq] + [end]
        exact_len = sum(math.dist(a, b) for a, b in zip(exact, exact[1:]))
        has_loops = any(a == b for a, b in zip(seq, seq[1:]))
        if best is not None and exact_len >= best[0] - 1e-12:
            return
        for eta in (1e-7 * scale, 1e-4 * scale):
            matched = None
            try:
                for rep in _realizations(seq, start, end, pts, eta, rho):
                    if signature(rep, obstacles) == target:
                        matched = rep
                        break
            except PathThroughObstacleError:
                continue
            if matched is not None:
                length = exact_len
                if has_loops:
                    length = sum(math.dist(a, b)
                                 for a, b in zip(matched, matched[1:]))
                if best is None or length < best[0]:
                    best = (length, exact, matched)
            break

    def search(seq: list[int], tail: Point, part_len: float) -> None:
        if len(seq) == max_via:
            return
        for j in range(n):
            step = part_len + math.dist(tail, pts[j])
            if best is not None and step + math.dist(pts[j], end) >= best[0] - 1e-12:
                continue
            seq.append(j)
            consider(seq)
            search(seq, pts[j], step)
            seq.pop()

    consider([])
    search([], start, 0.0)
    if best is None:
        return ShortestPathResult(None, None, "depth-exceeded")
    length, exact, rep = best
    return ShortestPathResult(exact, length, "ok", rep)


def oracle_hull(points: list[Point]) -> list[Point]:
    """Gift-wrapping convex hull, counter-clockwise, extreme vertices only."""
    if not points:
        raise ValueError("oracle_hull requires at least one point")
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    start = min(pts, key=lambda p: (p[1], p[0]))
    hull = [start]
    cur = start
    for _ in range(len(pts) + 1):
        nxt = None
        for p in pts:
            if p == cur:
                continue
            if nxt is None:
                nxt = p
                continue
            ax, ay = cur
            turn = (nxt[0] - ax) * (p[1] - ay) - (nxt[1] - ay) * (p[0] - ax)
            if turn < 0:
                nxt = p
            elif turn == 0 and math.dist(cur, p) > math.dist(cur, nxt):
                nxt = p
        if nxt == start or nxt is None:
            break
        hull.append(nxt)
        cur = nxt
    return hull


def oracle_query_triangle(obstacles: ObstacleSet, t: Triangle) -> list[int]:
    """Linear-scan reference for the indexed triangle query."""
    return [i for i, p in enumerate(obstacles.points) if point_in_triangle(p, t)]
