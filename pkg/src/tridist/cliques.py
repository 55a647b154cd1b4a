"""Candidate compatibility graphs and an exact maximum-clique solver.

The candidate set is anchored on the unit edge A=(0,0), B=(0,1): a point is
a candidate iff its squared distance to both anchors lies in the menu, and
two candidates share an edge iff their mutual squared distance does too.
Any clique W then makes W + {A, B} a set whose pairwise distances all come
from the menu.

The solver is depth-first branch and bound over bitmask candidate sets
(Python ints as bitsets).  Vertices are pre-sorted by non-increasing degree
with point-order tie-breaks, a branch dies when depth + |candidates| cannot
beat the incumbent, and a greedy-coloring bound on each subproblem tightens
that cut.  The coloring only prunes subtrees that cannot strictly improve
the incumbent, so it changes node counts but never the returned clique.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

from .lattice import Point, validate_menu

ANCHOR_A: Point = (0, 0)
ANCHOR_B: Point = (0, 1)

_TIME_CHECK_MASK = 0x3FF  # budget checked every 1024 search nodes


@dataclass(frozen=True)
class CompatGraph:
    """Candidate vertices with bitset adjacency rows under a distance menu."""

    vertices: tuple[Point, ...]
    adjacency: tuple[int, ...]
    menu: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return self.adjacency[i].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)


@dataclass(frozen=True)
class CliqueResult:
    clique: tuple[Point, ...]
    size: int
    optimal: bool
    nodes_explored: int
    elapsed: float


def candidate_vertices(menu: Iterable[int]) -> list[Point]:
    """All points whose distances to both anchors lie in the menu.

    The menu must contain 1, otherwise the anchor edge itself would be
    illegal.  The scan covers the full disk of squared radius max(menu)
    around A; nothing outside it can qualify.
    """
    values = validate_menu(menu, require_unit=True)
    allowed = frozenset(values)
    rmax = values[-1]
    span = isqrt(4 * rmax // 3) + 2
    out = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if (a, b) == ANCHOR_A or (a, b) == ANCHOR_B:
                continue
            da = a * a + a * b + b * b
            if da > rmax or da not in allowed:
                continue
            bb = b - 1
            if a * a + a * bb + bb * bb in allowed:
                out.append((a, b))
    return sorted(out)


def build_graph(vertices: Sequence[Point], menu: Iterable[int]) -> CompatGraph:
    """Adjacency under the menu: edge iff the pair distance is allowed."""
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError("vertex list contains duplicates")
    values = validate_menu(menu)
    allowed = frozenset(values)
    n = len(verts)
    rows = [0] * n
    for i in range(n):
        ai, bi = verts[i]
        for j in range(i + 1, n):
            da = ai - verts[j][0]
            db = bi - verts[j][1]
            if da * da + da * db + db * db in allowed:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return CompatGraph(verts, tuple(rows), values)


def prune_by_degree(g: CompatGraph, t: int) -> CompatGraph:
    """Iterated deletion of vertices of degree < t-1 (a (t-1)-core).

    Sound for clique search whenever the graph holds a clique of size >= t:
    each member of such a clique keeps degree >= t-1 throughout, so the
    whole clique survives.
    """
    n = g.n
    alive = (1 << n) - 1
    need = t - 1
    changed = True
    while changed:
        changed = False
        for i in range(n):
            if alive >> i & 1 and (g.adjacency[i] & alive).bit_count() < need:
                alive &= ~(1 << i)
                changed = True
    if alive == (1 << n) - 1:
        return g
    keep = [i for i in range(n) if alive >> i & 1]
    remap = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = g.adjacency[old] & alive
        packed = 0
        while row:
            low = row & -row
            packed |= 1 << remap[low.bit_length() - 1]
            row ^= low
        rows.append(packed)
    return CompatGraph(tuple(g.vertices[i] for i in keep), tuple(rows), g.menu)


def _greedy_seed(adj: Sequence[int], n: int) -> list[int]:
    """Best greedy clique over all start vertices (deterministic)."""
    best: list[int] = []
    for s in range(n):
        clique = [s]
        cand = adj[s]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            clique.append(v)
            cand = (cand ^ low) & adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def _search_block(
    adj: Sequence[int],
    root_mask: int,
    prefix: list[int],
    threshold: int,
    deadline: float | None,
):
    """Branch and bound over cliques prefix+C with C inside root_mask.

    Returns (best_clique_or_None, nodes, timed_out); only cliques strictly
    larger than threshold are recorded.
    """
    best_size = threshold
    best: list[int] | None = None
    path = list(prefix)
    depth0 = len(prefix)
    nodes = 0
    timed_out = False

    def color_bound(cand: int, limit: int) -> int:
        # Greedy coloring of the candidate subgraph; bails out as soon as
        # the class count exceeds limit (no pruning possible then).
        colors = 0
        rest = cand
        while rest:
            colors += 1
            if colors > limit:
                return colors
            q = rest
            while q:
                low = q & -q
                rest ^= low
                q = (q ^ low) & ~adj[low.bit_length() - 1]
        return colors

    def expand(cand: int, depth: int):
        nonlocal best_size, best, nodes, timed_out
        nodes += 1
        if deadline is not None and nodes & _TIME_CHECK_MASK == 0 \
                and time.monotonic() > deadline:
            timed_out = True
        if depth + cand.bit_count() <= best_size:
            return
        if depth + color_bound(cand, best_size - depth) <= best_size:
            return
        while cand:
            if timed_out:
                return
            if depth + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            sub = cand & adj[v]
            path.append(v)
            if sub:
                expand(sub, depth + 1)
            elif depth + 1 > best_size:
                best_size = depth + 1
                best = path.copy()
            path.pop()

    if root_mask:
        expand(root_mask, depth0)
    elif depth0 > threshold:
        best = path.copy()
        nodes = 1
    return best, nodes, timed_out


# Worker state for the process pool (set once per worker via the initializer).
_POOL_ADJ: tuple[int, ...] = ()


def _pool_init(adj):
    global _POOL_ADJ
    _POOL_ADJ = adj


def _pool_task(args):
    root, upper_mask, threshold, deadline = args
    adj = _POOL_ADJ
    sub = upper_mask & adj[root]
    return _search_block(adj, sub, [root], threshold, deadline)


def max_clique(
    g: CompatGraph,
    lower_bound: int = 0,
    budget: float | None = None,
    threads: int = 1,
) -> CliqueResult:
    """Exact maximum clique by branch and bound.

    lower_bound is a promise that a clique of that size exists (e.g. carried
    over from a smaller menu); it tightens pruning but a clique of exactly
    that size can still be found and returned, so the answer never shrinks.
    With a budget (seconds) the best clique found so far is returned and
    flagged non-optimal if time runs out.

    threads > 1 splits root branches over a process pool.  Every branch is
    searched with the same initial threshold and the results are combined by
    size then lexicographic order, so the outcome does not depend on the
    worker count (completed runs only; a budgeted abort is timing-dependent
    by nature).
    """
    start = time.monotonic()
    deadline = start + budget if budget is not None else None
    n = g.n
    if n == 0:
        return CliqueResult((), 0, True, 0, time.monotonic() - start)

    order = sorted(range(n), key=lambda i: (-g.degree(i), g.vertices[i]))
    pos = {old: new for new, old in enumerate(order)}
    adj = []
    for old in order:
        row = g.adjacency[old]
        packed = 0
        while row:
            low = row & -row
            packed |= 1 << pos[low.bit_length() - 1]
            row ^= low
        adj.append(packed)
    adj = tuple(adj)

    seed = _greedy_seed(adj, n)
    threshold = max(lower_bound - 1, 0)
    best: list[int] | None = None
    if len(seed) > threshold:
        threshold = len(seed)
        best = seed

    full = (1 << n) - 1
    if threads <= 1:
        found, nodes, timed_out = _search_block(adj, full, [], threshold, deadline)
        if found is not None:
            best = found
    else:
        best, nodes, timed_out = _parallel_roots(
            adj, n, threshold, deadline, threads, best, g.vertices, order
        )

    if best is None:
        # The promised lower bound exceeded the true maximum (e.g. a stale
        # cache); fall back to an unseeded exact run rather than guess.
        found, extra, timed_out = _search_block(adj, full, [], 0, deadline)
        nodes += extra
        best = found if found is not None else []

    points = tuple(sorted(g.vertices[order[v]] for v in best))
    return CliqueResult(
        points, len(points), not timed_out, nodes, time.monotonic() - start
    )


def _parallel_roots(adj, n, threshold, deadline, threads, seed_best, vertices, order):
    from concurrent.futures import ProcessPoolExecutor

    tasks = []
    for root in range(n):
        upper = ((1 << n) - 1) >> (root + 1) << (root + 1)
        if 1 + (upper & adj[root]).bit_count() > threshold:
            tasks.append((root, upper, threshold, deadline))

    results = []
    with ProcessPoolExecutor(
        max_workers=threads, initializer=_pool_init, initargs=(adj,)
    ) as pool:
        results = list(pool.map(_pool_task, tasks, chunksize=1))

    nodes = sum(r[1] for r in results)
    timed_out = any(r[2] for r in results)
    best = seed_best
    best_points = None if best is None else sorted(vertices[order[v]] for v in best)
    for found, _, _ in results:
        if found is None:
            continue
        pts = sorted(vertices[order[v]] for v in found)
        if best is None or len(found) > len(best) \
                or (len(found) == len(best) and pts < best_points):
            best = found
            best_points = pts
    return best, nodes, timed_out


def brute_force_clique(g: CompatGraph) -> CliqueResult:
    """Exhaustive enumeration oracle for small graphs (tests only).

    Visits every clique once via feasibility-only extension; no bounds, no
    ordering tricks.  Refuses graphs with more than 30 vertices.
    """
    if g.n > 30:
        raise ValueError(f"brute-force oracle is capped at 30 vertices, got {g.n}")
    start = time.monotonic()
    n = g.n
    adj = g.adjacency
    best: list[int] = []
    path: list[int] = []
    nodes = 0

    def visit(cand: int):
        nonlocal best, nodes
        nodes += 1
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            path.append(v)
            if len(path) > len(best):
                best = path.copy()
            visit(cand & adj[v])
            path.pop()

    if n:
        visit((1 << n) - 1)
    points = tuple(sorted(g.vertices[v] for v in best))
    return CliqueResult(points, len(points), True, nodes, time.monotonic() - start)


def verify_clique(g: CompatGraph, clique: Iterable[Point]) -> bool:
    """True iff the given points are graph vertices and pairwise adjacent."""
    index = {p: i for i, p in enumerate(g.vertices)}
    ids = []
    for p in clique:
        i = index.get(p)
        if i is None:
            raise ValueError(f"point {p} is not a vertex of the graph")
        ids.append(i)
    for x in range(len(ids)):
        for y in range(x + 1, len(ids)):
            if not g.has_edge(ids[x], ids[y]):
                return False
    return True
