"""Lattice fillings of regular and (k, k+1)-equiangular hexagons.

A regular hexagon of side k holds 3k^2+3k+1 lattice points and has longest
diagonal 2k; an equiangular hexagon with sides alternating k and k+1 holds
3(k+1)^2 points and has longest diagonal 2k+1.  Both families are generated
in a fixed origin-anchored orientation; callers that need other placements
translate afterwards.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .lattice import Point, distance_set, loeschian_sequence

REGULAR = "regular"
EQUIANGULAR = "equiangular"


@dataclass(frozen=True, order=True)
class Hexagon:
    """A hexagon family member: kind is "regular" or "equiangular", k its side.

    For the equiangular kind the sides alternate k and k+1.
    """

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in (REGULAR, EQUIANGULAR):
            raise ValueError(f"unknown hexagon kind {self.kind!r}")
        if self.k < 1:
            raise ValueError(f"side length must be >= 1, got {self.k}")

    @classmethod
    def regular(cls, k: int) -> "Hexagon":
        return cls(REGULAR, k)

    @classmethod
    def equiangular(cls, k: int) -> "Hexagon":
        return cls(EQUIANGULAR, k)

    @property
    def point_count(self) -> int:
        if self.kind == REGULAR:
            return 3 * self.k * self.k + 3 * self.k + 1
        return 3 * (self.k + 1) ** 2

    @property
    def diagonal(self) -> int:
        """Longest diagonal, in unit edge lengths."""
        return 2 * self.k if self.kind == REGULAR else 2 * self.k + 1

    @property
    def label(self) -> str:
        return f"{self.kind}-{self.k}"

    @classmethod
    def from_label(cls, label: str) -> "Hexagon":
        kind, _, k = label.partition("-")
        return cls(kind, int(k))

    def __str__(self) -> str:
        if self.kind == REGULAR:
            return f"regular hexagon side {self.k}"
        return f"({self.k},{self.k + 1})-equiangular hexagon"


def hexagon_points(spec: Hexagon) -> tuple[Point, ...]:
    """All lattice points inside the hexagon (boundary included)."""
    k = spec.k
    if spec.kind == REGULAR:
        pts = [
            (a, b)
            for a in range(-k, k + 1)
            for b in range(-k, k + 1)
            if -k <= a + b <= k
        ]
    else:
        pts = [
            (a, b)
            for a in range(-k, k + 2)
            for b in range(-k, k + 2)
            if -k <= a + b <= k + 1
        ]
    return tuple(sorted(pts))


def hexagon_corners(spec: Hexagon) -> tuple[Point, ...]:
    """The 6 corner points in cyclic order (used for outline rendering)."""
    k = spec.k
    if spec.kind == REGULAR:
        return ((k, 0), (0, k), (-k, k), (-k, 0), (0, -k), (k, -k))
    return ((k + 1, 0), (0, k + 1), (-k, k + 1), (-k, 0), (0, -k), (k + 1, -k))


def hexagon_menu(spec: Hexagon) -> list[int]:
    """Sorted squared distances realized inside the hexagon."""
    return distance_set(hexagon_points(spec))


@dataclass(frozen=True)
class MenuMismatch:
    matches_smallest: bool
    first_skipped: int | None


def menu_mismatch(spec: Hexagon) -> MenuMismatch:
    """Compare the hexagon's menu to the same number of smallest distances.

    If they differ, also report the smallest Loeschian value the hexagon
    skips over.
    """
    menu = hexagon_menu(spec)
    smallest = loeschian_sequence(len(menu))
    if menu == smallest:
        return MenuMismatch(True, None)
    for have, want in zip(menu, smallest):
        if have != want:
            return MenuMismatch(False, want)
    raise AssertionError("unreachable: equal-length sorted menus must differ somewhere")


def diameter_pairs(points: Iterable[Point]) -> list[tuple[Point, Point]]:
    """All unordered pairs realizing the maximum squared distance."""
    pts = sorted(set(points))
    if len(pts) < 2:
        raise ValueError(f"need at least 2 points, got {len(pts)}")
    best = -1
    pairs: list[tuple[Point, Point]] = []
    for i, (ai, bi) in enumerate(pts):
        for q in pts[i + 1:]:
            da = ai - q[0]
            db = bi - q[1]
            d = da * da + da * db + db * db
            if d > best:
                best = d
                pairs = [((ai, bi), q)]
            elif d == best:
                pairs.append(((ai, bi), q))
    return pairs


@dataclass(frozen=True)
class TrimResult:
    points: tuple[Point, ...]
    distance_count: int
    overshoot: bool


def trim_to_m(points: Iterable[Point], m: int) -> TrimResult:
    """Shrink a configuration to at most m distinct distances.

    Greedy diameter deletion: while more than m distances remain, delete the
    point lying on the most maximum-distance pairs (ties broken by the
    lexicographically smallest point).  A deletion can drop the distance
    count below m in one step; the result is then the first (largest)
    configuration at or below m and the jump is flagged as overshoot.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    pts = sorted(set(points))
    while True:
        if len(pts) < 2:
            count = 0
            break
        count = len(distance_set(pts))
        if count <= m:
            break
        incidence: Counter[Point] = Counter()
        for p, q in diameter_pairs(pts):
            incidence[p] += 1
            incidence[q] += 1
        victim = min(incidence, key=lambda p: (-incidence[p], p))
        pts.remove(victim)
    return TrimResult(tuple(pts), count, count != m)
