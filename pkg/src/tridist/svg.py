"""Deterministic SVG rendering of lattice configurations.

Lattice point (a, b) is drawn at Cartesian (a + b/2, -b*sqrt(3)/2), i.e.
with the y axis flipped so pictures read the usual way up.  Output is plain
SVG 1.1 text, byte-identical across runs and platforms for equal inputs:
points are sorted before emission and every coordinate is formatted with a
fixed precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import Point

_SQRT3_2 = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 40.0
    point_radius: float = 6.0
    show_removed_hull: bool = False

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.point_radius <= 0:
            raise ValueError(f"point_radius must be positive, got {self.point_radius}")


def lattice_to_xy(p: Point) -> tuple[float, float]:
    a, b = p
    return a + b / 2.0, -b * _SQRT3_2


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def render_svg(
    points: Iterable[Point],
    options: RenderOptions | None = None,
    hull: Sequence[Point] | None = None,
) -> str:
    """Render the configuration as an SVG 1.1 document string.

    hull, when given together with options.show_removed_hull, is a point
    cycle (e.g. hexagon corners) drawn as an outline behind the dots.
    """
    opts = options or RenderOptions()
    pts = sorted(set(points))
    if not pts:
        raise ValueError("nothing to render: empty point set")

    xys = [lattice_to_xy(p) for p in pts]
    hull_xys = [lattice_to_xy(p) for p in hull] if hull else []
    all_xys = xys + hull_xys
    margin = opts.point_radius + 0.75 * opts.scale
    min_x = min(x for x, _ in all_xys) * opts.scale
    min_y = min(y for _, y in all_xys) * opts.scale
    max_x = max(x for x, _ in all_xys) * opts.scale
    max_y = max(y for _, y in all_xys) * opts.scale
    width = max_x - min_x + 2 * margin
    height = max_y - min_y + 2 * margin
    ox = margin - min_x
    oy = margin - min_y

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if hull_xys and opts.show_removed_hull:
        path = "M" + " L".join(
            f"{_fmt(x * opts.scale + ox)} {_fmt(y * opts.scale + oy)}"
            for x, y in hull_xys
        ) + " Z"
        lines.append(
            f'<path d="{path}" fill="none" stroke="#999999" '
            f'stroke-width="{_fmt(opts.point_radius / 3.0)}" '
            f'stroke-dasharray="6 4"/>'
        )
    for x, y in xys:
        lines.append(
            f'<circle cx="{_fmt(x * opts.scale + ox)}" '
            f'cy="{_fmt(y * opts.scale + oy)}" '
            f'r="{_fmt(opts.point_radius)}" fill="#1f4e79"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
