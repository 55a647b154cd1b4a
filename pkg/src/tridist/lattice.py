"""Exact geometry on the triangular lattice.

A lattice point is an integer pair (a, b) standing for the plane position
a*(1, 0) + b*(1/2, sqrt(3)/2).  The squared Euclidean distance between two
points is the integer quadratic form a^2 + a*b + b^2 of their difference,
so every geometric predicate in this module is exact integer arithmetic.
Distances are always handled as their squares (1, 3, 4, 7, ... rather than
1, sqrt(3), 2, sqrt(7), ...); the possible values are the Loeschian numbers.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable

Point = tuple[int, int]


def norm(p: Point) -> int:
    """Squared Euclidean length of the lattice vector p = (a, b)."""
    a, b = p
    return a * a + a * b + b * b


def delta_norm(p: Point, q: Point) -> int:
    """Squared Euclidean distance between lattice points p and q."""
    da = p[0] - q[0]
    db = p[1] - q[1]
    return da * da + da * db + db * db


def is_loeschian(n: int) -> bool:
    """True iff n = a^2 + a*b + b^2 has an integer solution.

    Uses the factorization criterion (n is representable iff every prime
    congruent to 2 mod 3 divides n to an even power), which is independent
    of the direct enumeration in loeschian_sequence and so can serve as its
    oracle.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if p % 3 == 2 and e % 2 == 1:
            return False
    p = 5
    while p * p <= n:
        for q in (p, p + 2):  # 6k-1, 6k+1
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            if q % 3 == 2 and e % 2 == 1:
                return False
        p += 6
    # leftover n is 1 or a prime
    return n == 1 or n % 3 != 2


def _loeschian_up_to(bound: int) -> list[int]:
    # Every nonzero value has a representative with a >= b >= 0, so scanning
    # that sector alone produces no gaps below the bound.
    found = set()
    for a in range(1, isqrt(bound) + 1):
        aa = a * a
        for b in range(a + 1):
            v = aa + a * b + b * b
            if v > bound:
                break
            found.add(v)
    return sorted(found)


def loeschian_sequence(m: int) -> list[int]:
    """The m smallest positive Loeschian numbers, ascending."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    bound = max(16, 4 * m)
    while True:
        values = _loeschian_up_to(bound)
        if len(values) >= m:
            return values[:m]
        bound *= 2


def validate_menu(values: Iterable[int], require_unit: bool = False) -> tuple[int, ...]:
    """Check distance-menu invariants and return the menu as a tuple.

    A menu is a nonempty strictly increasing list of positive Loeschian
    squared distances.  With require_unit, distance 1 must be present.
    """
    menu = tuple(values)
    if not menu:
        raise ValueError("distance menu is empty")
    if menu[0] < 1 or any(x >= y for x, y in zip(menu, menu[1:])):
        raise ValueError(f"menu must be strictly increasing and positive: {menu}")
    for v in menu:
        if not is_loeschian(v):
            raise ValueError(f"menu entry {v} is not a Loeschian number")
    if require_unit and 1 not in menu:
        raise ValueError("menu must contain squared distance 1")
    return menu


def distance_set(points: Iterable[Point]) -> list[int]:
    """Sorted distinct squared distances over all unordered point pairs."""
    pts = sorted(set(points))
    if len(pts) < 2:
        raise ValueError(f"need at least 2 points, got {len(pts)}")
    seen = set()
    for i, (ai, bi) in enumerate(pts):
        for aj, bj in pts[i + 1:]:
            da = ai - aj
            db = bi - bj
            seen.add(da * da + da * db + db * db)
    return sorted(seen)


def multiplicity_array(points: Iterable[Point], menu: Iterable[int]) -> list[int]:
    """Per-menu-entry counts of point pairs realizing each squared distance.

    Every pairwise distance of the configuration must appear in the menu;
    the counts sum to n*(n-1)/2.
    """
    pts = sorted(set(points))
    index = {d: i for i, d in enumerate(menu)}
    counts = [0] * len(index)
    for i, (ai, bi) in enumerate(pts):
        for aj, bj in pts[i + 1:]:
            da = ai - aj
            db = bi - bj
            d = da * da + da * db + db * db
            k = index.get(d)
            if k is None:
                raise ValueError(
                    f"pair ({ai},{bi})--({aj},{bj}) at squared distance {d} "
                    f"is not in the menu"
                )
            counts[k] += 1
    return counts


# The 12-element point-symmetry group of the lattice: rotations by 60 degrees
# ((a, b) -> (-b, a+b)) and the reflection (a, b) -> (b, a).
Sym = tuple[tuple[int, int], tuple[int, int]]

_ROT60: Sym = ((0, -1), (1, 1))
_MIRROR: Sym = ((0, 1), (1, 0))
_IDENTITY: Sym = ((1, 0), (0, 1))


def _compose(g: Sym, h: Sym) -> Sym:
    (g00, g01), (g10, g11) = g
    (h00, h01), (h10, h11) = h
    return (
        (g00 * h00 + g01 * h10, g00 * h01 + g01 * h11),
        (g10 * h00 + g11 * h10, g10 * h01 + g11 * h11),
    )


def apply_symmetry(g: Sym, p: Point) -> Point:
    (g00, g01), (g10, g11) = g
    a, b = p
    return (g00 * a + g01 * b, g10 * a + g11 * b)


def _build_group() -> list[Sym]:
    rots = [_IDENTITY]
    for _ in range(5):
        rots.append(_compose(_ROT60, rots[-1]))
    return rots + [_compose(r, _MIRROR) for r in rots]


SYMMETRIES: list[Sym] = _build_group()
ROTATIONS: list[Sym] = SYMMETRIES[:6]
REFLECTIONS: list[Sym] = SYMMETRIES[6:]


def symmetry_axes(points: Iterable[Point]) -> int:
    """Number of the 6 lattice reflection classes fixing the set.

    Reflections act about the centroid of the set.  Coordinates are scaled
    by 2n (n = point count) so the centroid is an exact integer vector for
    every configuration and no rounding can occur.
    """
    pts = set(points)
    if not pts:
        raise ValueError("empty point set")
    n = len(pts)
    sa = sum(a for a, _ in pts)
    sb = sum(b for _, b in pts)
    centered = {(2 * n * a - 2 * sa, 2 * n * b - 2 * sb) for a, b in pts}
    count = 0
    for g in REFLECTIONS:
        if {apply_symmetry(g, p) for p in centered} == centered:
            count += 1
    return count


def canonical_map(points: Iterable[Point]) -> tuple[Sym, Point]:
    """The (symmetry, translation) pair used by canonicalize.

    Applying the symmetry to each point and then adding the translation
    yields the canonical representative.
    """
    pts = sorted(set(points))
    if not pts:
        return _IDENTITY, (0, 0)
    best = None
    best_map = (_IDENTITY, (0, 0))
    for g in SYMMETRIES:
        img = sorted(apply_symmetry(g, p) for p in pts)
        oa, ob = img[0]
        cand = tuple((a - oa, b - ob) for a, b in img)
        if best is None or cand < best:
            best = cand
            best_map = (g, (-oa, -ob))
    return best_map


def canonicalize(points: Iterable[Point]) -> tuple[Point, ...]:
    """Canonical representative of a configuration under lattice isometries.

    Among the 12 point-symmetry images, each translated so its
    lexicographically smallest point sits at the origin, the smallest
    sorted point list is returned.  Idempotent, so congruent
    configurations (and re-canonicalized ones) compare equal.
    """
    pts = sorted(set(points))
    if not pts:
        return ()
    g, (ta, tb) = canonical_map(pts)
    return tuple(sorted((ga + ta, gb + tb) for ga, gb in
                        (apply_symmetry(g, p) for p in pts)))
