"""Shared test fixtures: compact constructors, random instance generators,
and brute-force references that bypass the library code paths."""
from __future__ import annotations

import random
from fractions import Fraction

from maxminsep import (
    Box,
    GeneratedConvexSet,
    Grid,
    Point,
    as_scalar,
    hull_contains,
    segment_contains,
    semispace_contains,
)


def pt(spec: str) -> Point:
    return Point.parse(spec)


def box(lower: str, upper: str) -> Box:
    return Box(pt(lower), pt(upper))


def gset(*specs: str) -> GeneratedConvexSet:
    return GeneratedConvexSet(tuple(pt(s) for s in specs))


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_scalar(r: random.Random, d: int) -> Fraction:
    return Fraction(r.randrange(d + 1), d)


def rand_point(r: random.Random, n: int, d: int) -> Point:
    return Point(tuple(rand_scalar(r, d) for _ in range(n)))


def rand_interior_point(r: random.Random, n: int, d: int) -> Point:
    return Point(tuple(Fraction(r.randrange(1, d), d) for _ in range(n)))


def rand_box(r: random.Random, n: int, d: int) -> Box:
    pairs = [sorted((rand_scalar(r, d), rand_scalar(r, d))) for _ in range(n)]
    return Box(Point(tuple(p[0] for p in pairs)), Point(tuple(p[1] for p in pairs)))


def rand_gset(r: random.Random, n: int, d: int, max_gens: int = 4) -> GeneratedConvexSet:
    k = r.randrange(1, max_gens + 1)
    return GeneratedConvexSet(tuple(rand_point(r, n, d) for _ in range(k)))


def rand_interior_gset(r: random.Random, n: int, d: int, max_gens: int = 4) -> GeneratedConvexSet:
    k = r.randrange(1, max_gens + 1)
    return GeneratedConvexSet(tuple(rand_interior_point(r, n, d) for _ in range(k)))


def combo(alpha: Fraction, x: Point, beta: Fraction, y: Point) -> Point:
    """Direct max-min combination, written without the library helpers."""
    return Point(tuple(max(min(alpha, a), min(beta, b)) for a, b in zip(x, y)))


def brute_segment(x: Point, y: Point, grid: Grid) -> frozenset[Point]:
    """All combinations with one coefficient pinned to 1 and the other swept
    over the grid.  Exhaustive whenever x and y lie on the grid: the
    coordinates of a combination only change at grid breakpoints."""
    one = Fraction(1)
    points = set()
    for a in grid.values():
        points.add(combo(a, x, one, y))
        points.add(combo(one, x, a, y))
    return frozenset(points)


def expected_family_size(x0: Point) -> int:
    """Case count for the semispace family, derived from scratch: one
    semispace per usable sorted position, plus the upper one when no
    coordinate sits at 1, minus the positions cut off by coordinates at 0."""
    values = sorted(x0, reverse=True)
    n = len(values)
    has_one = values[0] == 1
    zeros = [p for p, v in enumerate(values, start=1) if v == 0]
    last = (zeros[0] - 1) if zeros else n
    size = last
    if not has_one:
        size += 1
    return size


def maximality_witness_exists(S, z: Point, grid: Grid) -> bool:
    """True when some grid point of S forms a segment with z through x0:
    adjoining z would force x0 into the set, so S admits no convex,
    x0-avoiding extension by z."""
    x0 = S.x0
    return any(
        semispace_contains(S, w) and segment_contains(z, w, x0)
        for w in grid.points()
    )


def hull_grid_points(C: GeneratedConvexSet, grid: Grid) -> list[Point]:
    return [p for p in grid.points() if hull_contains(C, p)]


def disjoint_pair(r: random.Random, n: int, d: int, max_gens: int = 4):
    """Rejection-sample a box and a generated set with disjoint hulls."""
    from maxminsep import box_intersects_hull

    while True:
        B = rand_box(r, n, d)
        C = rand_gset(r, n, d, max_gens)
        if not box_intersects_hull(B, C):
            return B, C


def scalar(text: str) -> Fraction:
    return as_scalar(text)
