"""Crossing-word invariants deciding path equivalence among point obstacles.

Every obstacle casts a ray vertically downward from itself. A path's word
is the sequence of its transversal ray crossings in path order, signed +1
when the path crosses left-to-right and -1 otherwise, fully reduced by
cancelling adjacent inverse pairs. Two paths sharing both endpoints are
deformable into one another without crossing an obstacle exactly when
their reduced words are equal.

Degeneracies are resolved symbolically: a path vertex whose x-coordinate
equals a ray's is treated as displaced by an infinitesimal +dx, and rays
of obstacles sharing an x-coordinate are ordered by obstacle id, so every
crossing is transversal and the word is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import TOL, Point
from .spatial_index import ObstacleSet


class PathThroughObstacleError(ValueError):
    """A path segment passes through an obstacle point."""


class HomotopyViolationError(RuntimeError):
    """A step changed the homotopy class; indicates a geometry or tolerance bug."""


@dataclass(frozen=True)
class Signature:
    """Reduced crossing word: ordered (obstacle id, sign) pairs."""

    word: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return bool(self.word)


def _reduce(letters) -> tuple[tuple[int, int], ...]:
    word: list[tuple[int, int]] = []
    for j, s in letters:
        if word and word[-1][0] == j and word[-1][1] == -s:
            word.pop()
        else:
            word.append((j, s))
    return tuple(word)


def signature(path: list[Point], obstacles: ObstacleSet) -> Signature:
    """Reduced crossing word of an open polyline.

    Raises PathThroughObstacleError when a segment passes through an
    obstacle point (within the collinearity tolerance); the word is not
    defined there.
    """
    if len(path) < 2:
        raise ValueError("path needs at least two points")
    if len(obstacles) == 0:
        return Signature(())
    pts = np.asarray(path, dtype=float)
    obs = obstacles.coords
    u = pts[:-1]
    v = pts[1:]
    d = v - u

    # Reject paths running through an obstacle: distance from segment to
    # obstacle within tolerance of zero. The pair scale is taken from the
    # segment and offset lengths themselves, which tracks the bounding box
    # of the three points within a small constant factor.
    ap_x = obs[None, :, 0] - u[:, None, 0]
    ap_y = obs[None, :, 1] - u[:, None, 1]
    cross = d[:, None, 0] * ap_y - d[:, None, 1] * ap_x
    dot = d[:, None, 0] * ap_x + d[:, None, 1] * ap_y
    len2 = (d * d).sum(axis=1)[:, None]
    dist2 = ap_x * ap_x + ap_y * ap_y
    tau = TOL * np.maximum(len2, dist2)
    on_line = (np.abs(cross) <= tau) & (dot >= -tau) & (dot <= len2 + tau)
    degenerate = len2 <= 0.0
    hit = np.where(degenerate, dist2 == 0.0, on_line) if degenerate.any() \
        else on_line
    if hit.any():
        i, j = np.argwhere(hit)[0]
        raise PathThroughObstacleError(
            f"segment {int(i)} passes through obstacle {int(j)}")

    px = obs[:, 0]
    py = obs[:, 1]
    left_u = u[:, 0][:, None] < px[None, :]
    left_v = v[:, 0][:, None] < px[None, :]
    crossing = left_u != left_v
    if not crossing.any():
        return Signature(())
    with np.errstate(divide="ignore", invalid="ignore"):
        t = (px[None, :] - u[:, 0][:, None]) / d[:, 0][:, None]
        y_at = u[:, 1][:, None] + t * d[:, 1][:, None]
    mask = crossing & (y_at < py[None, :])
    rows, cols = np.nonzero(mask)
    if rows.size == 0:
        return Signature(())
    signs = np.where(left_u[rows, cols], 1, -1)
    # Within one segment, crossings are ordered along the direction of
    # travel; collinear rays (equal obstacle x) tie-break by id, reversed
    # for right-to-left travel so a dip-and-return cancels exactly.
    tie = np.where(signs > 0, cols, -cols)
    order = np.lexsort((tie, t[rows, cols], rows))
    letters = [(int(cols[i]), int(signs[i])) for i in order]
    return Signature(_reduce(letters))


def homotopic(path1: list[Point], path2: list[Point],
              obstacles: ObstacleSet) -> bool:
    """Do the two paths share endpoints and belong to the same class?"""
    if path1[0] != path2[0] or path1[-1] != path2[-1]:
        raise ValueError("paths must share both terminal points exactly")
    return signature(path1, obstacles) == signature(path2, obstacles)


def loop_signature(loop: list[Point], obstacles: ObstacleSet) -> Signature:
    """Conjugation-invariant word of a closed polyline.

    The loop is cut at its first vertex, reduced, then cyclically reduced
    and rotated to a canonical form, so the result does not depend on
    where along the loop the cut falls.
    """
    if len(loop) < 3:
        raise ValueError("a loop needs at least three points")
    word = list(signature(list(loop) + [loop[0]], obstacles).word)
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    if not word:
        return Signature(())
    rotations = [tuple(word[i:] + word[:i]) for i in range(len(word))]
    return Signature(min(rotations))
