"""End-to-end drivers for the two construction methods.

Method "clique": build the candidate graph for the m smallest lattice
distances, prune, and solve maximum clique exactly; the construction is the
clique plus the two anchors.  Method "hexagon": take the smallest hexagon
whose distance menu has at least m values and greedily trim diameter points
down to m distances, also considering the next-smaller hexagon untrimmed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cliques import (
    ANCHOR_A,
    ANCHOR_B,
    build_graph,
    candidate_vertices,
    max_clique,
    prune_by_degree,
    verify_clique,
)
from .hexagons import Hexagon, hexagon_menu, hexagon_points, trim_to_m
from .lattice import (
    Point,
    canonicalize,
    distance_set,
    loeschian_sequence,
    multiplicity_array,
    validate_menu,
)

METHOD_CLIQUE = "clique"
METHOD_HEXAGON = "hexagon"
METHODS = (METHOD_CLIQUE, METHOD_HEXAGON)


@dataclass(frozen=True)
class SearchReport:
    """One solved instance: what was built, how large, and how."""

    m: int
    method: str
    menu: tuple[int, ...]
    points: tuple[Point, ...]
    size: int
    multiplicities: tuple[int, ...]
    optimal: bool
    elapsed: float
    clique: tuple[Point, ...] = ()
    nodes_explored: int = 0
    hexagon: str | None = None
    overshoot: bool = False


def solve_menu(
    menu: Iterable[int],
    lower_bound: int = 0,
    budget: float | None = None,
    threads: int = 1,
) -> SearchReport:
    """Clique method for an arbitrary menu containing distance 1.

    lower_bound is a clique-size promise (not a construction size); it feeds
    both the degree pruning and the solver's starting incumbent.
    """
    start = time.monotonic()
    values = validate_menu(menu, require_unit=True)
    graph = build_graph(candidate_vertices(values), values)
    graph = prune_by_degree(graph, lower_bound)
    result = max_clique(graph, lower_bound=lower_bound, budget=budget, threads=threads)
    assert verify_clique(graph, result.clique)
    points = canonicalize(result.clique + (ANCHOR_A, ANCHOR_B))
    counts = multiplicity_array(points, values)
    return SearchReport(
        m=len(values),
        method=METHOD_CLIQUE,
        menu=values,
        points=points,
        size=len(points),
        multiplicities=tuple(counts),
        optimal=result.optimal,
        elapsed=time.monotonic() - start,
        clique=result.clique,
        nodes_explored=result.nodes_explored,
    )


def solve_smallest_menu(
    m: int,
    budget: float | None = None,
    threads: int = 1,
    cache_dir=None,
) -> SearchReport:
    """Clique method with the m smallest distances.

    When a cache directory is given and holds the (m-1)-result, its clique
    size seeds the solver; correctness never depends on the cache.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    lower = 0
    if cache_dir is not None and m > 1:
        from .cache import cache_load

        prev = cache_load(m - 1, METHOD_CLIQUE, cache_dir)
        if prev is not None:
            lower = max(0, prev.size - 2)
    return solve_menu(
        loeschian_sequence(m), lower_bound=lower, budget=budget, threads=threads
    )


def hexagon_scan() -> Iterator[Hexagon]:
    """Hexagons in increasing distance-count order: R(1), E(1), R(2), E(2), ..."""
    k = 1
    while True:
        yield Hexagon.regular(k)
        yield Hexagon.equiangular(k)
        k += 1


def hexagon_construction(m: int) -> SearchReport:
    """Hexagon method: trim the smallest hexagon with at least m distances.

    The next-smaller hexagon (untrimmed, hence at most m distances already)
    is evaluated as well, and the larger construction wins; ties go to the
    untrimmed smaller hexagon, which uses strictly smaller distances.
    """
    if m < 3:
        raise ValueError(f"hexagon construction needs m >= 3, got {m}")
    start = time.monotonic()
    previous: Hexagon | None = None
    for spec in hexagon_scan():
        if len(hexagon_menu(spec)) >= m:
            primary = spec
            break
        previous = spec

    trimmed = trim_to_m(hexagon_points(primary), m)
    chosen_points = trimmed.points
    chosen_spec = primary
    overshoot = trimmed.overshoot
    if previous is not None:
        alt = hexagon_points(previous)
        if len(alt) >= len(trimmed.points):
            chosen_points = alt
            chosen_spec = previous
            overshoot = False

    points = canonicalize(chosen_points)
    menu = tuple(distance_set(points))
    counts = multiplicity_array(points, menu)
    return SearchReport(
        m=m,
        method=METHOD_HEXAGON,
        menu=menu,
        points=points,
        size=len(points),
        multiplicities=tuple(counts),
        optimal=True,
        elapsed=time.monotonic() - start,
        hexagon=chosen_spec.label,
        overshoot=overshoot,
    )


@dataclass(frozen=True)
class MethodComparison:
    clique: SearchReport
    hexagon: SearchReport
    winner: str


def compare_methods(
    m: int,
    budget: float | None = None,
    threads: int = 1,
    lower_bound: int = 0,
) -> MethodComparison:
    """Run both methods; the hexagon wins only when strictly larger."""
    if m < 3:
        raise ValueError(f"method comparison needs m >= 3, got {m}")
    clique = solve_menu(
        loeschian_sequence(m), lower_bound=lower_bound, budget=budget, threads=threads
    )
    hexagon = hexagon_construction(m)
    winner = METHOD_HEXAGON if hexagon.size > clique.size else METHOD_CLIQUE
    return MethodComparison(clique, hexagon, winner)


@dataclass(frozen=True)
class TableRow:
    m: int
    clique_size: int
    hexagon_size: int
    best: int
    star: bool
    clique_optimal: bool
    hexagon_optimal: bool


def row_from_comparison(comp: MethodComparison) -> TableRow:
    return TableRow(
        m=comp.clique.m,
        clique_size=comp.clique.size,
        hexagon_size=comp.hexagon.size,
        best=max(comp.clique.size, comp.hexagon.size),
        star=comp.hexagon.size > comp.clique.size,
        clique_optimal=comp.clique.optimal,
        hexagon_optimal=comp.hexagon.optimal,
    )


def compare_range(
    m_lo: int,
    m_hi: int,
    budget: float | None = None,
    threads: int = 1,
) -> list[MethodComparison]:
    """compare_methods over a range, chaining clique sizes as lower bounds."""
    if not 3 <= m_lo <= m_hi:
        raise ValueError(f"need 3 <= m_lo <= m_hi, got {m_lo}..{m_hi}")
    comps = []
    lower = 0
    for m in range(m_lo, m_hi + 1):
        comp = compare_methods(m, budget=budget, threads=threads, lower_bound=lower)
        # Only an optimal run proves a clique of that size exists in the
        # next, larger menu; a budget-limited size is still a valid clique,
        # hence a valid promise.
        lower = max(lower, comp.clique.size - 2)
        comps.append(comp)
    return comps


def table_range(
    m_lo: int,
    m_hi: int,
    budget: float | None = None,
    threads: int = 1,
) -> list[TableRow]:
    """Best sizes per m with a star where the hexagon strictly wins."""
    return [row_from_comparison(c) for c in compare_range(m_lo, m_hi, budget, threads)]
