"""Iterative string-tightening sweep engine.

A string is an ordered sequence of processors, each holding a planar
weight; the weights traced in order are the evolving path. One sweep
visits every non-fixed processor once in ascending index order and moves
it toward an attractor chosen from the triangle it spans with its two
neighbours (already-updated neighbours contribute their new positions):

* empty triangle: the attractor is the neighbour midpoint, taken at full
  rate, which straightens the path locally;
* exactly one obstacle inside: the attractor is that obstacle, approached
  at a slow scheduled rate so the path can keep sliding sideways off
  obstacles it does not need;
* two or more obstacles inside: the processor is replaced by a detour
  threaded around the obstacle cluster (see the insertion module).

Each non-structural move shortens the local length, so the total path
length never increases, and no move ever carries the path across an
obstacle, so the path's homotopy class is preserved. The run stops once
the largest per-sweep displacement falls below a tolerance derived from
the obstacle extent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import Point, bbox
from .homotopy import HomotopyViolationError, loop_signature, signature
from .insertion import MultiResolution, resolve_multi
from .spatial_index import ObstacleSet

CREATED = "created"
SELECTED = "selected"
MULTI = "multi"

CONVERGED = "converged"
SWEEP_LIMIT = "sweep-limit"


class SparseSamplingError(ValueError):
    """A triangle trapped several obstacles while structural insertion was off."""


@dataclass
class StringConfig:
    """Ordered processor weights plus topology.

    Open strings keep both terminals fixed (free-endpoint optimization is
    out of scope); closed strings wrap neighbours around and every
    processor is free.
    """

    weights: list[Point]
    closed: bool = False
    fixed_first: bool = True
    fixed_last: bool = True

    def __post_init__(self) -> None:
        if len(self.weights) < 3:
            raise ValueError("a string needs at least three processors")
        if not self.closed and not (self.fixed_first and self.fixed_last):
            raise ValueError("open strings require both terminals fixed")

    def copy(self) -> "StringConfig":
        return StringConfig(list(self.weights), self.closed,
                            self.fixed_first, self.fixed_last)


@dataclass(frozen=True)
class Feature:
    """Attractor presented to a processor, tagged by how it was obtained."""

    kind: str
    vector: Point | None
    obstacle_ids: tuple[int, ...] = ()


@dataclass(frozen=True)
class TightenParams:
    """Run parameters.

    beta is the learning constant for obstacle-selected moves and
    sweep_horizon the sweep count the schedule is normalised by; the
    selected rate beta * (1 + t / sweep_horizon) grows over time but is
    clamped at alpha_cap so long runs cannot degenerate into full-rate
    snapping onto obstacles. epsilon_pct is the convergence tolerance as a
    percentage of the obstacle extent. alpha_override pins the selected
    rate to a fixed value, bypassing the schedule; it exists to reproduce
    the known failure mode where a full-rate processor lands exactly on an
    obstacle it should have slid past and can never leave it again.
    """

    beta: float = 0.01
    sweep_horizon: int = 5000
    epsilon_pct: float = 0.001
    max_sweeps: int = 5000
    alpha_cap: float = 0.5
    homotopy_guard: bool = True
    alpha_override: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.beta < 0.5:
            raise ValueError("beta must lie strictly between 0 and 0.5")
        if self.sweep_horizon < 1:
            raise ValueError("sweep_horizon must be at least 1")
        if self.epsilon_pct <= 0.0:
            raise ValueError("epsilon_pct must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")
        if not self.beta <= self.alpha_cap < 1.0:
            raise ValueError("alpha_cap must satisfy beta <= alpha_cap < 1")
        if self.alpha_override is not None and not 0.0 < self.alpha_override <= 1.0:
            raise ValueError("alpha_override must lie in (0, 1]")


@dataclass(frozen=True)
class SweepRecord:
    sweep: int
    length: float
    phi: float
    max_disp: float
    k: int
    created: int
    selected: int
    multi: int


@dataclass
class SweepEvents:
    created: int = 0
    selected: int = 0
    multi: int = 0
    resolutions: list[MultiResolution] = field(default_factory=list)
    # True once any resolution changed the processor count; such a sweep
    # cannot count as converged no matter how small its displacements.
    structural: bool = False


@dataclass
class TightenResult:
    config: StringConfig
    trace: list[SweepRecord]
    status: str
    epsilon: float


def phi(cfg: StringConfig) -> float:
    """Sum of squared segment lengths (the quantity the updates descend on)."""
    w = cfg.weights
    total = 0.0
    for u, v in zip(w, w[1:]):
        total += (v[0] - u[0]) ** 2 + (v[1] - u[1]) ** 2
    if cfg.closed:
        u, v = w[-1], w[0]
        total += (v[0] - u[0]) ** 2 + (v[1] - u[1]) ** 2
    return total


def alpha(t: int, kind: str, params: TightenParams) -> float:
    """Learning rate for sweep t: full for created features, scheduled otherwise."""
    if kind == CREATED:
        return 1.0
    if params.alpha_override is not None:
        return params.alpha_override
    return min(params.beta * (1.0 + t / params.sweep_horizon), params.alpha_cap)


def update_weight(w: Point, x: Point, a: float) -> Point:
    """Move w the fraction a of the way to x; a == 1 lands exactly on x."""
    if a == 1.0:
        return x
    return (w[0] + a * (x[0] - w[0]), w[1] + a * (x[1] - w[1]))


def _triangle_obstacles(a: Point, b: Point, c: Point,
                        obstacles: ObstacleSet) -> list[int]:
    """Obstacles inside the processor triangle that the middle one can cross.

    An obstacle coinciding exactly with a neighbour vertex is excluded: the
    path runs through that vertex no matter where the middle processor
    goes, so it is not crossable here and must not trap the update (exact
    contact arises only from deliberate full-rate landings).
    """
    ids = obstacles.query_triangle((a, b, c))
    if not ids:
        return ids
    pts = obstacles.points
    return [j for j in ids if pts[j] != a and pts[j] != c]


def compute_feature(i: int, cfg: StringConfig, obstacles: ObstacleSet) -> Feature:
    """Attractor for processor i given the current (mid-sweep) weights."""
    w = cfg.weights
    k = len(w)
    if cfg.closed:
        a, c = w[(i - 1) % k], w[(i + 1) % k]
    else:
        a, c = w[i - 1], w[i + 1]
    ids = _triangle_obstacles(a, w[i], c, obstacles)
    if not ids:
        return Feature(CREATED, ((a[0] + c[0]) / 2.0, (a[1] + c[1]) / 2.0))
    if len(ids) == 1:
        return Feature(SELECTED, obstacles.points[ids[0]], (ids[0],))
    return Feature(MULTI, None, tuple(ids))


def sweep(cfg: StringConfig, obstacles: ObstacleSet, params: TightenParams,
          t: int, extension: bool = True, k_cap: int | None = None):
    """Run one full sweep in place.

    Returns (cfg, max_displacement, events). max_displacement is the
    largest move among processors that survive the sweep; processors
    replaced by a structural insertion do not contribute, and the freshly
    inserted ones are first updated on the next sweep.

    k_cap bounds the processor count: a repair that might push past it is
    skipped for this sweep (leaving a processor untouched is always safe),
    so a run can guarantee the count never exceeds its budget.

    Partial obstacle-selected moves stop a hair short of the obstacle
    itself (10^-9 of the obstacle extent), far below every convergence
    tolerance but enough to keep path vertices off obstacle points, where
    the crossing word stops being defined. A full-rate move (rate exactly
    1) does land on the obstacle and sticks there; such runs cannot be
    homotopy-guarded.
    """
    w = cfg.weights
    closed = cfg.closed
    pos = 0 if closed else 1
    remaining = len(w) if closed else len(w) - 2
    max_disp = 0.0
    events = SweepEvents()
    sel_rate = alpha(t, SELECTED, params)
    standoff = 1e-9 * obstacles.extent
    while remaining > 0:
        k = len(w)
        if closed:
            a = w[pos - 1] if pos else w[k - 1]
            c = w[(pos + 1) % k]
        else:
            a = w[pos - 1]
            c = w[pos + 1]
        b = w[pos]
        ids = _triangle_obstacles(a, b, c, obstacles)
        z = len(ids)
        if z >= 2:
            events.multi += 1
            if not extension:
                raise SparseSamplingError(
                    f"{z} obstacles inside one processor triangle; resample "
                    "more densely or enable insertion")
            if k_cap is not None and len(w) + z - 1 > k_cap:
                pos += 1
                remaining -= 1
                continue
            res = resolve_multi(cfg, pos, ids, obstacles, obstacles.min_dist / 4.0)
            events.resolutions.append(res)
            if len(res.inserted) == 1:
                # One-for-one replacement moves the path like a plain weight
                # update; let it count toward the displacement criterion so
                # a repair that has stopped moving can converge.
                disp = math.dist(b, res.inserted[0])
                if disp > max_disp:
                    max_disp = disp
            else:
                events.structural = True
            pos += len(res.inserted)
            remaining -= 1
            continue
        if z == 1:
            x = obstacles.points[ids[0]]
            nw = update_weight(b, x, sel_rate)
            gap = math.dist(nw, x)
            # Exact full-rate landings (gap == 0) are deliberate and sticky;
            # only partial approaches are kept off the obstacle.
            if 0.0 < gap < standoff:
                back = math.dist(b, x)
                if back > 0.0:
                    f = standoff / back
                    nw = (x[0] + f * (b[0] - x[0]), x[1] + f * (b[1] - x[1]))
                else:
                    nw = b
            events.selected += 1
        else:
            nw = ((a[0] + c[0]) / 2.0, (a[1] + c[1]) / 2.0)
            events.created += 1
        w[pos] = nw
        disp = math.dist(b, nw)
        if disp > max_disp:
            max_disp = disp
        pos += 1
        remaining -= 1
    return cfg, max_disp, events


def resolve_epsilon(params: TightenParams, obstacles: ObstacleSet,
                    path: list[Point]) -> float:
    """Absolute convergence tolerance: epsilon_pct of the obstacle extent.

    Scenes without a usable obstacle extent fall back to the path's own
    bounding box so the criterion stays defined.
    """
    extent = 0.0
    if len(obstacles) >= 1:
        min_x, min_y, max_x, max_y = bbox(obstacles.points)
        extent = max(max_x - min_x, max_y - min_y)
    if extent <= 0.0:
        min_x, min_y, max_x, max_y = bbox(path)
        extent = max(max_x - min_x, max_y - min_y)
    return params.epsilon_pct / 100.0 * extent


def _length_and_phi(cfg: StringConfig) -> tuple[float, float]:
    w = cfg.weights
    length = 0.0
    sq = 0.0
    pairs = zip(w, w[1:])
    for u, v in pairs:
        d2 = (v[0] - u[0]) ** 2 + (v[1] - u[1]) ** 2
        length += math.sqrt(d2)
        sq += d2
    if cfg.closed:
        u, v = w[-1], w[0]
        d2 = (v[0] - u[0]) ** 2 + (v[1] - u[1]) ** 2
        length += math.sqrt(d2)
        sq += d2
    return length, sq


def tighten(cfg0: StringConfig, obstacles: ObstacleSet, params: TightenParams,
            extension: bool = True) -> TightenResult:
    """Sweep until every processor moves less than the tolerance.

    The input configuration is left untouched. A sweep whose repairs
    changed the processor count never counts as converged, whatever its
    largest displacement, since the path just changed shape
    discontinuously; one-for-one repairs are judged by how far they moved
    the path, like any other update. With the homotopy guard on, the
    crossing word is checked after every sweep and a mismatch raises
    HomotopyViolationError (closed strings compare basepoint-independent
    loop words).
    """
    cfg = cfg0.copy()
    eps = resolve_epsilon(params, obstacles, cfg.weights)
    sig_of = loop_signature if cfg.closed else signature
    sig0 = sig_of(cfg.weights, obstacles) if params.homotopy_guard else None
    # Guarding every sweep is cheap on small configurations; big ones are
    # checked every few sweeps plus always on the final state.
    stride = 1 if len(cfg.weights) * max(len(obstacles), 1) <= 20_000 else 4
    trace: list[SweepRecord] = []
    status = SWEEP_LIMIT
    k_cap = len(cfg.weights) + len(obstacles)
    done = False
    for t in range(params.max_sweeps):
        _, max_disp, ev = sweep(cfg, obstacles, params, t, extension=extension,
                                k_cap=k_cap)
        length, sq = _length_and_phi(cfg)
        trace.append(SweepRecord(t, length, sq, max_disp, len(cfg.weights),
                                 ev.created, ev.selected, ev.multi))
        done = not ev.structural and max_disp < eps
        if sig0 is not None and (done or t % stride == 0) \
                and sig_of(cfg.weights, obstacles) != sig0:
            raise HomotopyViolationError(f"path class changed by sweep {t}")
        if done:
            status = CONVERGED
            break
    if sig0 is not None and not done \
            and sig_of(cfg.weights, obstacles) != sig0:
        raise HomotopyViolationError("path class changed by the final sweep")
    return TightenResult(cfg, trace, status, eps)
