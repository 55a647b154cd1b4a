"""Exact search for large m-distance sets on the triangular lattice."""

from .cache import cache_load, cache_store
from .cliques import (
    ANCHOR_A,
    ANCHOR_B,
    CliqueResult,
    CompatGraph,
    brute_force_clique,
    build_graph,
    candidate_vertices,
    max_clique,
    prune_by_degree,
    verify_clique,
)
from .hexagons import (
    Hexagon,
    MenuMismatch,
    TrimResult,
    diameter_pairs,
    hexagon_corners,
    hexagon_menu,
    hexagon_points,
    menu_mismatch,
    trim_to_m,
)
from .lattice import (
    Point,
    canonicalize,
    delta_norm,
    distance_set,
    is_loeschian,
    loeschian_sequence,
    multiplicity_array,
    norm,
    symmetry_axes,
)
from .search import (
    METHOD_CLIQUE,
    METHOD_HEXAGON,
    MethodComparison,
    SearchReport,
    TableRow,
    compare_methods,
    compare_range,
    hexagon_construction,
    solve_menu,
    solve_smallest_menu,
    table_range,
)
from .svg import RenderOptions, render_svg
from .tables import emit_table, load_points, save_points

__version__ = "0.1.0"
