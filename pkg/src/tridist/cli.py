"""Command-line interface.

Subcommands: solve (run one m), table (range comparison as CSV/JSON, with
optional matplotlib figures), render (SVG of a construction), multiplicity
(per-distance pair counts), verify (inspect a point-list file).

Exit codes: 0 success, 1 invalid arguments or input, 2 when
--require-optimal is set and a budgeted run came back non-optimal.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cache import cache_load, cache_store
from .hexagons import Hexagon, hexagon_corners, hexagon_points, trim_to_m
from .lattice import Point, apply_symmetry, canonical_map, distance_set
from .search import (
    METHOD_CLIQUE,
    METHOD_HEXAGON,
    SearchReport,
    compare_range,
    hexagon_construction,
    row_from_comparison,
    solve_smallest_menu,
)
from .svg import RenderOptions, render_svg
from .tables import emit_table, load_points, save_points

DEFAULT_CACHE_DIR = ".tridist-cache"


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--cache-dir", default=DEFAULT_CACHE_DIR, help="result cache directory"
    )
    shared.add_argument(
        "--threads", type=int, default=1, help="solver worker processes (default 1)"
    )
    shared.add_argument(
        "--seed-lower-bounds",
        action="store_true",
        help="seed clique searches with cached (m-1) sizes",
    )
    shared.add_argument(
        "--require-optimal",
        action="store_true",
        help="exit with status 2 if any result is not proven optimal",
    )
    return shared


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tridist", description=__doc__)
    shared = _shared_flags()
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", parents=[shared], help="solve one m")
    p_solve.add_argument("--m", type=int, required=True)
    p_solve.add_argument(
        "--method", choices=("clique", "hexagon", "both"), default="clique"
    )
    p_solve.add_argument("--budget", type=float, help="solver budget in seconds")
    p_solve.add_argument("--points-out", help="also write the construction points")
    p_solve.set_defaults(func=_cmd_solve)

    p_table = sub.add_parser(
        "table", parents=[shared], help="method comparison over a range of m"
    )
    p_table.add_argument("--from", dest="m_lo", type=int, required=True)
    p_table.add_argument("--to", dest="m_hi", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", help="write the table here instead of stdout")
    p_table.add_argument(
        "--figures", help="directory for per-m construction figures and a size plot"
    )
    p_table.add_argument("--budget", type=float, help="per-m solver budget in seconds")
    p_table.set_defaults(func=_cmd_table)

    p_render = sub.add_parser("render", parents=[shared], help="render a construction")
    p_render.add_argument("--m", type=int, required=True)
    p_render.add_argument("--method", choices=("clique", "hexagon"), default="clique")
    p_render.add_argument("--out", required=True, help="output SVG path")
    p_render.add_argument("--budget", type=float)
    p_render.add_argument("--scale", type=float, default=40.0)
    p_render.add_argument("--point-radius", type=float, default=6.0)
    p_render.add_argument(
        "--hull",
        action="store_true",
        help="outline the source hexagon of a trimmed construction",
    )
    p_render.set_defaults(func=_cmd_render)

    p_mult = sub.add_parser(
        "multiplicity", parents=[shared], help="print a multiplicity array"
    )
    p_mult.add_argument("--m", type=int, required=True)
    p_mult.add_argument("--method", choices=("clique", "hexagon"), default="clique")
    p_mult.add_argument("--budget", type=float)
    p_mult.set_defaults(func=_cmd_multiplicity)

    p_verify = sub.add_parser(
        "verify", parents=[shared], help="inspect a point-list file"
    )
    p_verify.add_argument("--points", required=True, help="point-list file to read")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _get_report(m: int, method: str, args) -> SearchReport:
    cached = cache_load(m, method, args.cache_dir)
    if cached is not None:
        return cached
    if method == METHOD_CLIQUE:
        seed_dir = args.cache_dir if args.seed_lower_bounds else None
        report = solve_smallest_menu(
            m,
            budget=getattr(args, "budget", None),
            threads=args.threads,
            cache_dir=seed_dir,
        )
    else:
        report = hexagon_construction(m)
    cache_store(report, args.cache_dir)
    return report


def _summary(report: SearchReport) -> str:
    line = (
        f"m={report.m} {report.method}: size={report.size}, "
        f"optimal={_bool(report.optimal)}, distances={len(distance_set(report.points))}, "
        f"elapsed={report.elapsed:.2f}s"
    )
    if report.hexagon:
        line += f", source={report.hexagon}"
    if report.overshoot:
        line += ", overshoot"
    return line


def hexagon_hull(report: SearchReport) -> tuple[Point, ...] | None:
    """Corners of the source hexagon, moved into the report's canonical frame."""
    if not report.hexagon:
        return None
    spec = Hexagon.from_label(report.hexagon)
    raw = hexagon_points(spec)
    if report.size < spec.point_count:
        raw = trim_to_m(raw, report.m).points
    g, (ta, tb) = canonical_map(raw)
    corners = []
    for c in hexagon_corners(spec):
        ga, gb = apply_symmetry(g, c)
        corners.append((ga + ta, gb + tb))
    return tuple(corners)


def _cmd_solve(args) -> int:
    methods = [args.method] if args.method != "both" else [METHOD_CLIQUE, METHOD_HEXAGON]
    reports = []
    for method in methods:
        report = _get_report(args.m, method, args)
        reports.append(report)
        print(_summary(report))
    if len(reports) == 2:
        winner = METHOD_HEXAGON if reports[1].size > reports[0].size else METHOD_CLIQUE
        print(f"winner: {winner}")
    if args.points_out:
        best = max(reports, key=lambda r: r.size)
        save_points(
            best.points,
            args.points_out,
            comment=f"m={best.m} {best.method} construction, {best.size} points",
        )
    if args.require_optimal and not all(r.optimal for r in reports):
        return 2
    return 0


def _cmd_table(args) -> int:
    comps = compare_range(
        args.m_lo, args.m_hi, budget=args.budget, threads=args.threads
    )
    for comp in comps:
        cache_store(comp.clique, args.cache_dir)
        cache_store(comp.hexagon, args.cache_dir)
    rows = [row_from_comparison(c) for c in comps]
    text = emit_table(rows, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.figures:
        from .figures import save_construction_figure, save_size_figure

        directory = Path(args.figures)
        directory.mkdir(parents=True, exist_ok=True)
        for comp in comps:
            best = comp.hexagon if comp.winner == METHOD_HEXAGON else comp.clique
            hull = hexagon_hull(best) if best.method == METHOD_HEXAGON else None
            save_construction_figure(
                best.points,
                directory / f"m{best.m:02d}_{best.method}.png",
                title=f"m={best.m}: {best.size} points ({best.method})",
                hull=hull,
            )
        save_size_figure(rows, directory / "sizes.png")
    if args.require_optimal and not all(
        r.clique_optimal and r.hexagon_optimal for r in rows
    ):
        return 2
    return 0


def _cmd_render(args) -> int:
    report = _get_report(args.m, args.method, args)
    opts = RenderOptions(
        scale=args.scale,
        point_radius=args.point_radius,
        show_removed_hull=args.hull,
    )
    hull = hexagon_hull(report) if args.hull else None
    Path(args.out).write_text(render_svg(report.points, opts, hull), encoding="utf-8")
    print(f"wrote {args.out}: {report.size} points")
    if args.require_optimal and not report.optimal:
        return 2
    return 0


def _cmd_multiplicity(args) -> int:
    report = _get_report(args.m, args.method, args)
    print(f"m={report.m} {report.method} menu: {list(report.menu)}")
    print(list(report.multiplicities))
    if args.require_optimal and not report.optimal:
        return 2
    return 0


def _cmd_verify(args) -> int:
    points = load_points(args.points)
    menu = distance_set(points) if len(points) >= 2 else []
    print(f"{len(points)} points, {len(menu)} distances")
    print("menu: " + " ".join(map(str, menu)))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"tridist: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
