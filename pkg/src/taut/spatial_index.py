"""Static spatial index over point obstacles.

Answers "which obstacles lie inside this closed triangle" by retrieving
candidates around the triangle's bounding box from a kd-tree, then
filtering with the exact containment predicate.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy.spatial import cKDTree

from .geometry import Point, Triangle, point_in_triangle


class ObstacleSet:
    """Immutable collection of distinct point obstacles.

    Obstacle ids are indices into ``points`` (input order, first occurrence
    wins; exact duplicates are dropped with a warning). ``min_dist`` is the
    exact minimum pairwise distance, or None with fewer than two obstacles.
    ``extent`` is the larger bounding-box dimension (0.0 when degenerate).
    """

    __slots__ = ("points", "coords", "min_dist", "extent", "_tree")

    def __init__(self, points: list[Point]):
        seen: set[Point] = set()
        pts: list[Point] = []
        dropped = 0
        for p in points:
            q = (float(p[0]), float(p[1]))
            if q in seen:
                dropped += 1
                continue
            seen.add(q)
            pts.append(q)
        if dropped:
            warnings.warn(f"dropped {dropped} duplicate obstacle point(s)")
        self.points = pts
        self.coords = np.asarray(pts, dtype=float).reshape(len(pts), 2)
        if pts:
            self.extent = float(max(np.ptp(self.coords[:, 0]),
                                    np.ptp(self.coords[:, 1])))
        else:
            self.extent = 0.0
        if len(pts) >= 2:
            self._tree = cKDTree(self.coords)
            dists, _ = self._tree.query(self.coords, k=2)
            self.min_dist = float(dists[:, 1].min())
        elif len(pts) == 1:
            self._tree = cKDTree(self.coords)
            self.min_dist = None
        else:
            self._tree = None
            self.min_dist = None

    def __len__(self) -> int:
        return len(self.points)

    def query_triangle(self, t: Triangle) -> list[int]:
        """Ids of obstacles inside the closed triangle t, ascending.

        Degenerate triangles report obstacles lying on the spanned segment.
        """
        if self._tree is None:
            return []
        (ax, ay), (bx, by), (cx, cy) = t
        min_x = min(ax, bx, cx)
        max_x = max(ax, bx, cx)
        min_y = min(ay, by, cy)
        max_y = max(ay, by, cy)
        cx0 = (min_x + max_x) / 2.0
        cy0 = (min_y + max_y) / 2.0
        r = math.hypot(max_x - min_x, max_y - min_y) / 2.0
        cand = self._tree.query_ball_point((cx0, cy0), r * (1.0 + 1e-9) + 1e-300,
                                           return_sorted=False)
        pts = self.points
        hits = []
        for i in cand:
            px, py = pts[i]
            # cheap bounding-box cut before the exact test; the retrieval
            # circle circumscribes the box, so thin triangles over-scan
            if min_x <= px <= max_x and min_y <= py <= max_y \
                    and point_in_triangle(pts[i], t):
                hits.append(i)
        hits.sort()
        return hits


def build(points: list[Point]) -> ObstacleSet:
    """Construct an ObstacleSet (empty input allowed; queries return nothing)."""
    return ObstacleSet(points)


def query_triangle(obstacles: ObstacleSet, t: Triangle) -> list[int]:
    """Ids of obstacles inside the closed triangle t, ascending by id."""
    return obstacles.query_triangle(t)
