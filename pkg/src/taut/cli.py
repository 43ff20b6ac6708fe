"""Command-line front end: load a scene, run one mode, emit artifacts.

Exit codes: 0 converged, 2 sweep limit reached, 3 invalid input,
4 homotopy guard violation. The final path is printed to stdout as a
re-ingestable scene document; a human summary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .geometry import Point, bbox, polyline_length
from .homotopy import HomotopyViolationError
from .oracle import oracle_hull, oracle_shortest_homotopic
from .output import write_svg, write_trace_csv
from .sampling import default_spacing, resample
from .scene import (Scene, SceneError, load_scene, scene_from_dict,
                    scene_to_dict)
from .spatial_index import ObstacleSet, build
from .tightening import (CONVERGED, SparseSamplingError, StringConfig,
                         SweepRecord, TightenParams, tighten)

EXIT_CONVERGED = 0
EXIT_SWEEP_LIMIT = 2
EXIT_INVALID = 3
EXIT_HOMOTOPY = 4

_MODE_EPSILON_PCT = {"tighten": 0.001, "smooth": 0.1, "hull": 0.001}


@dataclass
class RunResult:
    status: str
    exit_code: int
    initial_path: list[Point]
    final_path: list[Point]
    closed: bool
    trace: list[SweepRecord]
    epsilon: float
    params: TightenParams
    oracle_length: float | None = None


def params_for(scene: Scene, overrides: dict | None = None,
               guard: bool | None = None) -> TightenParams:
    """Merge mode defaults, scene config, and CLI overrides."""
    merged = {
        "beta": 0.01,
        "T": 5000,
        "epsilon_pct": _MODE_EPSILON_PCT[scene.mode],
        "max_sweeps": 5000,
    }
    merged.update(scene.config)
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value
    return TightenParams(
        beta=float(merged["beta"]),
        sweep_horizon=int(merged["T"]),
        epsilon_pct=float(merged["epsilon_pct"]),
        max_sweeps=int(merged["max_sweeps"]),
        homotopy_guard=True if guard is None else guard,
    )


def hull_loop(obstacles: ObstacleSet) -> list[Point]:
    """Initial enclosing loop: obstacle bbox inflated 5%, densely sampled."""
    min_x, min_y, max_x, max_y = bbox(obstacles.points)
    margin = 0.05 * max(max_x - min_x, max_y - min_y)
    corners = [(min_x - margin, min_y - margin), (max_x + margin, min_y - margin),
               (max_x + margin, max_y + margin), (min_x - margin, max_y + margin)]
    h = obstacles.min_dist / 2.0 if obstacles.min_dist else default_spacing(corners)
    ring = resample(corners + [corners[0]], h)
    return ring[:-1]


def run(scene: Scene, *, extension: bool = True, compute_oracle: bool = False,
        guard: bool | None = None, overrides: dict | None = None) -> RunResult:
    """Dispatch one scene through its mode and tighten to convergence."""
    obstacles = build(scene.obstacles)
    params = params_for(scene, overrides, guard)
    if scene.mode == "hull":
        initial = hull_loop(obstacles)
        cfg0 = StringConfig(initial, closed=True)
    else:
        if obstacles.min_dist is not None:
            h = obstacles.min_dist / 2.0
        else:
            h = default_spacing(list(scene.path) + scene.obstacles)
        initial = resample(scene.path, h)
        cfg0 = StringConfig(initial, closed=scene.closed)
    result = tighten(cfg0, obstacles, params, extension=extension)
    oracle_length = None
    if compute_oracle:
        if scene.mode == "hull":
            hull = oracle_hull(obstacles.points)
            oracle_length = (polyline_length(hull, closed=True)
                             if len(hull) >= 3 else 0.0)
        else:
            ref = oracle_shortest_homotopic(initial, obstacles, max_via=4)
            oracle_length = ref.length
    return RunResult(
        status=result.status,
        exit_code=EXIT_CONVERGED if result.status == CONVERGED else EXIT_SWEEP_LIMIT,
        initial_path=initial,
        final_path=list(result.config.weights),
        closed=cfg0.closed,
        trace=result.trace,
        epsilon=result.epsilon,
        params=params,
        oracle_length=oracle_length,
    )


def reinterpret_mode(scene: Scene, mode: str) -> Scene:
    """Re-validate a scene under a different mode."""
    doc = scene_to_dict(scene)
    doc["mode"] = mode
    if mode == "hull":
        doc.pop("path", None)
    return scene_from_dict(doc)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _Parser(prog="taut", description="Tighten, smooth, or hull a scene.")
    parser.add_argument("scene", help="scene JSON file")
    parser.add_argument("--mode", choices=("tighten", "smooth", "hull"),
                        help="override the scene's mode")
    parser.add_argument("--beta", type=float, help="learning constant")
    parser.add_argument("--big-t", type=int, dest="big_t",
                        help="sweep horizon the learning schedule is scaled by")
    parser.add_argument("--epsilon-pct", type=float,
                        help="convergence tolerance, percent of obstacle extent")
    parser.add_argument("--max-sweeps", type=int, help="sweep budget")
    parser.add_argument("--trace", metavar="FILE", help="write per-sweep CSV")
    parser.add_argument("--svg", metavar="FILE", help="write an overlay figure")
    parser.add_argument("--no-extension", action="store_true",
                        help="disable structural insertion (needs dense sampling)")
    parser.add_argument("--oracle", action="store_true",
                        help="also run the brute-force reference (small scenes)")
    parser.add_argument("--guard", action=argparse.BooleanOptionalAction,
                        default=None, help="runtime homotopy check (default on)")
    args = parser.parse_args(argv)

    try:
        scene = load_scene(args.scene)
        if args.mode:
            scene = reinterpret_mode(scene, args.mode)
        overrides = {"beta": args.beta, "T": args.big_t,
                     "epsilon_pct": args.epsilon_pct,
                     "max_sweeps": args.max_sweeps}
        result = run(scene, extension=not args.no_extension,
                     compute_oracle=args.oracle, guard=args.guard,
                     overrides=overrides)
    except HomotopyViolationError as exc:
        print(f"taut: homotopy violation: {exc}", file=sys.stderr)
        return EXIT_HOMOTOPY
    except (SceneError, SparseSamplingError, ValueError) as exc:
        print(f"taut: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.trace:
        write_trace_csv(result.trace, args.trace)
    if args.svg:
        write_svg(args.svg, scene.obstacles, result.initial_path,
                  result.final_path, closed=result.closed)

    out = Scene(scene.obstacles, result.final_path, result.closed, scene.mode,
                {"beta": result.params.beta, "T": result.params.sweep_horizon,
                 "epsilon_pct": result.params.epsilon_pct,
                 "max_sweeps": result.params.max_sweeps})
    print(json.dumps(scene_to_dict(out)))

    length = result.trace[-1].length if result.trace else float("nan")
    summary = (f"taut: mode={scene.mode} status={result.status} "
               f"sweeps={len(result.trace)} length={length:.9g}")
    if result.oracle_length is not None:
        summary += f" oracle={result.oracle_length:.9g}"
    print(summary, file=sys.stderr)
    return result.exit_code



if __name__ == "__main__":
    sys.exit(main())
