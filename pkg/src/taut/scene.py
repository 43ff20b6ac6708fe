"""Scene documents: parsing, validation, serialization.

A scene is a single JSON object:

    {"obstacles": [[x, y], ...],
     "path": [[x, y], ...],          # absent in hull mode
     "closed": false,
     "mode": "tighten",              # or "smooth" or "hull"
     "config": {"beta": 0.01, "T": 5000,
                "epsilon_pct": 0.001, "max_sweeps": 5000}}

All config keys are optional and fall back to the mode defaults.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path as FilePath

from .geometry import Point

MODES = ("tighten", "smooth", "hull")
_TOP_KEYS = {"obstacles", "path", "closed", "mode", "config"}
_CONFIG_KEYS = {"beta", "T", "epsilon_pct", "max_sweeps"}


class SceneError(ValueError):
    """The scene document failed validation."""


@dataclass
class Scene:
    obstacles: list[Point]
    path: list[Point] | None
    closed: bool = False
    mode: str = "tighten"
    config: dict = field(default_factory=dict)


def _point_list(raw, what: str) -> list[Point]:
    if not isinstance(raw, list):
        raise SceneError(f"{what} must be a list of [x, y] pairs")
    pts: list[Point] = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(v, (int, float)) for v in item)):
            raise SceneError(f"{what} entries must be [x, y] number pairs")
        x, y = float(item[0]), float(item[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise SceneError(f"{what} coordinates must be finite")
        pts.append((x, y))
    return pts


def scene_from_dict(doc: dict) -> Scene:
    if not isinstance(doc, dict):
        raise SceneError("scene document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise SceneError(f"unknown scene keys: {sorted(unknown)}")
    mode = doc.get("mode", "tighten")
    if mode not in MODES:
        raise SceneError(f"mode must be one of {MODES}")
    obstacles = _point_list(doc.get("obstacles", []), "obstacles")
    deduped: list[Point] = []
    seen: set[Point] = set()
    for p in obstacles:
        if p in seen:
            continue
        seen.add(p)
        deduped.append(p)
    if len(deduped) < len(obstacles):
        warnings.warn(f"scene: dropped {len(obstacles) - len(deduped)} "
                      "duplicate obstacle(s)")
    path = None
    if doc.get("path") is not None:
        path = _point_list(doc["path"], "path")
    closed = doc.get("closed", False)
    if not isinstance(closed, bool):
        raise SceneError("closed must be a boolean")
    config = doc.get("config", {})
    if not isinstance(config, dict):
        raise SceneError("config must be an object")
    bad = set(config) - _CONFIG_KEYS
    if bad:
        raise SceneError(f"unknown config keys: {sorted(bad)}")
    for key, value in config.items():
        if not isinstance(value, (int, float)) or not math.isfinite(value):
            raise SceneError(f"config.{key} must be a finite number")

    if mode == "hull":
        if path is not None:
            raise SceneError("hull mode takes no path")
        if len(deduped) < 3:
            raise SceneError("hull mode needs at least 3 distinct obstacles")
    else:
        if path is None or len(path) < 2:
            raise SceneError(f"{mode} mode needs a path with at least 2 points")
        if closed and len(path) < 3:
            raise SceneError("a closed path needs at least 3 points")
    return Scene(deduped, path, closed, mode, dict(config))


def load_scene(file) -> Scene:
    """Parse and validate a scene from a path or file object."""
    try:
        if hasattr(file, "read"):
            doc = json.load(file)
        else:
            doc = json.loads(FilePath(file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SceneError(f"cannot read scene: {exc}") from exc
    return scene_from_dict(doc)


def scene_to_dict(scene: Scene) -> dict:
    doc = {
        "obstacles": [[x, y] for x, y in scene.obstacles],
        "closed": scene.closed,
        "mode": scene.mode,
        "config": dict(scene.config),
    }
    if scene.path is not None:
        doc["path"] = [[x, y] for x, y in scene.path]
    return doc
