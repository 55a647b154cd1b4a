"""Matplotlib figure output for constructions and size tables."""

from __future__ import annotations

from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .lattice import Point
from .search import TableRow
from .svg import lattice_to_xy


def save_construction_figure(
    points: Iterable[Point],
    path,
    title: str | None = None,
    hull: Sequence[Point] | None = None,
) -> None:
    """Scatter plot of a lattice configuration, saved to an image file."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("nothing to plot: empty point set")
    xs, ys = zip(*(lattice_to_xy(p) for p in pts))
    fig, ax = plt.subplots(figsize=(5, 5))
    if hull:
        hx, hy = zip(*(lattice_to_xy(p) for p in list(hull) + [hull[0]]))
        ax.plot(hx, hy, color="0.6", linestyle="--", linewidth=1)
    ax.scatter(xs, ys, s=60, color="#1f4e79", zorder=3)
    ax.set_aspect("equal")
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_size_figure(rows: Sequence[TableRow], path) -> None:
    """Clique vs hexagon sizes over m, with stars where the hexagon wins."""
    if not rows:
        raise ValueError("no rows to plot")
    ms = [r.m for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ms, [r.clique_size for r in rows], "o-", label="smallest-menu clique")
    ax.plot(ms, [r.hexagon_size for r in rows], "s--", label="hexagon")
    starred = [r for r in rows if r.star]
    if starred:
        ax.scatter(
            [r.m for r in starred],
            [r.hexagon_size for r in starred],
            marker="*",
            s=180,
            color="crimson",
            zorder=3,
            label="hexagon strictly larger",
        )
    ax.set_xlabel("number of distances m")
    ax.set_ylabel("construction size")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
