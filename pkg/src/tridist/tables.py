"""Result tables (CSV/JSON) and the point-list file format.

Point files hold one "a b" pair per line; blank lines and '#' comments are
allowed, so the files stay hand-editable for checking constructions.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable, Sequence

from .lattice import Point
from .search import TableRow

TABLE_FIELDS = (
    "m",
    "clique_size",
    "hexagon_size",
    "best",
    "star",
    "clique_optimal",
    "hexagon_optimal",
)


def _row_values(row: TableRow) -> dict:
    return {
        "m": row.m,
        "clique_size": row.clique_size,
        "hexagon_size": row.hexagon_size,
        "best": row.best,
        "star": "*" if row.star else "",
        "clique_optimal": row.clique_optimal,
        "hexagon_optimal": row.hexagon_optimal,
    }


def emit_table(rows: Sequence[TableRow], fmt: str = "csv") -> str:
    """Serialize table rows as CSV (header, LF endings) or a JSON array."""
    if not rows:
        raise ValueError("no rows to emit")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_FIELDS)
        for row in rows:
            values = _row_values(row)
            writer.writerow(
                [
                    str(values[f]).lower() if isinstance(values[f], bool)
                    else values[f]
                    for f in TABLE_FIELDS
                ]
            )
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([_row_values(r) for r in rows], indent=2) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def save_points(points: Iterable[Point], path, comment: str | None = None) -> None:
    """Write a point list, one "a b" pair per line, sorted."""
    pts = sorted(set(points))
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.extend(f"{a} {b}" for a, b in pts)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_points(path) -> tuple[Point, ...]:
    """Read a point list written by save_points (or by hand)."""
    pts = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'a b', got {raw!r}")
        try:
            pts.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: non-integer coordinates in {raw!r}")
    return tuple(sorted(set(pts)))
