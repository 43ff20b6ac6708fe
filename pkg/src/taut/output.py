"""Trace CSV and SVG emission."""

from __future__ import annotations

from pathlib import Path as FilePath

from .geometry import Point, bbox
from .tightening import SweepRecord

TRACE_HEADER = "sweep,length,phi,max_disp,k,created,selected,multi"


def format_trace(records: list[SweepRecord]) -> str:
    """One CSV row per executed sweep; floats use shortest round-trip repr."""
    lines = [TRACE_HEADER]
    for r in records:
        lines.append(f"{r.sweep},{r.length!r},{r.phi!r},{r.max_disp!r},"
                     f"{r.k},{r.created},{r.selected},{r.multi}")
    return "\n".join(lines) + "\n"


def write_trace_csv(records: list[SweepRecord], path) -> None:
    FilePath(path).write_text(format_trace(records))


def _polyline_svg(pts, transform, color, width, close: bool) -> str:
    coords = " ".join(f"{transform(p)[0]:.2f},{transform(p)[1]:.2f}" for p in pts)
    tag = "polygon" if close else "polyline"
    return (f'<{tag} points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{width}" stroke-linejoin="round"/>')


def render_svg(obstacles: list[Point], initial: list[Point],
               final: list[Point], closed: bool = False,
               size: int = 640) -> str:
    """Obstacles as circles, initial path light, final path dark."""
    everything = list(obstacles) + list(initial) + list(final)
    min_x, min_y, max_x, max_y = bbox(everything)
    span = max(max_x - min_x, max_y - min_y) or 1.0
    margin = 0.05 * span
    scale = size / (span + 2 * margin)

    def tr(p: Point) -> tuple[float, float]:
        return ((p[0] - min_x + margin) * scale,
                (max_y - p[1] + margin) * scale)

    height = round((max_y - min_y + 2 * margin) * scale, 2)
    width = round((max_x - min_x + 2 * margin) * scale, 2)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">',
             f'<rect width="{width}" height="{height}" fill="white"/>']
    if initial:
        parts.append(_polyline_svg(initial, tr, "#bbbbbb", 1.5, closed))
    if final:
        parts.append(_polyline_svg(final, tr, "#222222", 2.0, closed))
    r = max(2.0, 0.004 * size)
    for p in obstacles:
        x, y = tr(p)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" '
                     'fill="none" stroke="#d62728" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(path, obstacles, initial, final, closed: bool = False) -> None:
    FilePath(path).write_text(render_svg(obstacles, initial, final, closed))
