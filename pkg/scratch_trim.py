"""Prototype: trim via exact minimum vertex cover of the top-k pair graph."""
import sys
sys.setrecursionlimit(100000)
from tridist.lattice import distance_set, delta_norm
from tridist.hexagons import Hexagon, hexagon_points, hexagon_menu


def top_pairs(pts, targets):
    tset = set(targets)
    edges = []
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            if delta_norm(p, q) in tset:
                edges.append((p, q))
    return edges


def min_cover_size(edges):
    best = len({p for e in edges for p in e})

    def bnb(edges, size):
        nonlocal best
        if size >= best:
            return
        if not edges:
            best = size
            return
        u, v = edges[0]
        bnb([e for e in edges if u not in e], size + 1)
        bnb([e for e in edges if v not in e and u not in (e[0], e[1])] if False else [e for e in edges if v not in e], size + 1)

    bnb(edges, 0)
    return best


def all_min_covers(edges, c):
    out = set()

    def rec(edges, chosen):
        if len(chosen) > c:
            return
        if not edges:
            out.add(frozenset(chosen))
            return
        u, v = edges[0]
        rec([e for e in edges if u not in e], chosen | {u})
        rec([e for e in edges if v not in e], chosen | {v})

    rec(edges, frozenset())
    return [s for s in out if len(s) == c]


def trim_cover(spec, m):
    pts = sorted(hexagon_points(spec))
    menu = distance_set(pts)
    if len(menu) <= m:
        return pts, len(menu)
    targets = menu[m:]  # kill everything above the m-th smallest? NO: top k = count-m largest
    k = len(menu) - m
    targets = sorted(menu, reverse=True)[:k]
    edges = top_pairs(pts, targets)
    c = min_cover_size(edges)
    covers = all_min_covers(edges, c)
    cands = []
    for R in covers:
        final = [p for p in pts if p not in R]
        cnt = len(distance_set(final))
        cands.append((-cnt, tuple(final)))
    cands.sort()
    best = cands[0]
    return list(best[1]), -best[0], c, len(covers)


for m, spec in [(24, Hexagon.equiangular(4)), (25, Hexagon.equiangular(4)),
                (26, Hexagon.equiangular(4)), (27, Hexagon.equiangular(4)),
                (30, Hexagon.regular(5)), (31, Hexagon.regular(5)),
                (32, Hexagon.regular(5)), (33, Hexagon.regular(5)),
                (29, Hexagon.regular(5)),
                (20, Hexagon.regular(4)), (21, Hexagon.regular(4)),
                (22, Hexagon.regular(4)),
                (16, Hexagon.equiangular(3)), (17, Hexagon.equiangular(3)),
                (18, Hexagon.equiangular(3)),
                (12, Hexagon.regular(3)), (13, Hexagon.regular(3)),
                (14, Hexagon.regular(3)),
                (9, Hexagon.equiangular(2)), (10, Hexagon.equiangular(2)),
                (7, Hexagon.regular(2)),
                (4, Hexagon.equiangular(1)), (6, Hexagon.regular(2))]:
    pts, cnt, c, ncov = trim_cover(spec, m)
    print(f"trim({spec}, {m}): size={len(pts)} distances={cnt} cover={c} mincovers={ncov}")
