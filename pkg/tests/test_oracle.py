"""The grid referee: exhaustive, exact, and deliberately naive."""
from fractions import Fraction
from itertools import product

import pytest

from maxminsep import (
    Grid,
    Point,
    ResourceLimitError,
    brute_is_convex,
    brute_separation_search,
    grid_hull,
    semispace_avoids_box,
    set_in_semispace,
)
from helpers import box, brute_segment, combo, gset, pt


class TestGrid:
    def test_size_and_enumeration(self):
        grid = Grid(2, 2)
        pts = list(grid.points())
        assert grid.size == 9 and len(pts) == 9
        assert pts[0] == pt("0,0") and pts[-1] == pt("1,1")

    def test_lexicographic_order(self):
        grid = Grid(1, 2)
        assert [tuple(p) for p in grid.points()] == [
            (0, 0), (0, 1), (1, 0), (1, 1)
        ]

    def test_index_round_trip(self):
        grid = Grid(3, 2)
        for idx in product(range(4), repeat=2):
            assert grid.index_of(grid.point_at(idx)) == idx

    def test_contains(self):
        grid = Grid(4, 2)
        assert grid.contains(pt("0.25,1"))
        assert not grid.contains(pt("0.2,1"))

    def test_guard_rejects_huge_grids(self):
        with pytest.raises(ResourceLimitError):
            Grid(100, 5).guard()


class TestGridHull:
    def test_contains_inputs_and_is_convex(self):
        grid = Grid(4, 2)
        points = (pt("0.25,1"), pt("1,0.25"))
        closure = grid_hull(points, grid)
        assert set(points) <= closure
        assert brute_is_convex(closure, grid)

    def test_l_shaped_example(self):
        grid = Grid(4, 2)
        closure = grid_hull((pt("0.25,0.75"), pt("0.75,0.25")), grid)
        assert closure == {
            pt("0.25,0.75"), pt("0.5,0.75"), pt("0.75,0.75"),
            pt("0.75,0.5"), pt("0.75,0.25"),
        }

    def test_equals_direct_combination_closure(self):
        # reference: iterate binary combinations to a fixpoint using raw
        # min/max arithmetic, no library calls
        grid = Grid(3, 2)
        seeds = (pt("0,1"), pt("1,0"), pt("1/3,1/3"))
        reference = set(seeds)
        changed = True
        while changed:
            changed = False
            for x, y in product(tuple(reference), repeat=2):
                for k in range(4):
                    a = Fraction(k, 3)
                    for z in (combo(a, x, Fraction(1), y), combo(Fraction(1), x, a, y)):
                        if z not in reference:
                            reference.add(z)
                            changed = True
        assert grid_hull(seeds, grid) == reference

    def test_respects_segment_reference(self):
        grid = Grid(6, 2)
        x, y = pt("1/3,5/6"), pt("2/3,1/6")
        assert grid_hull((x, y), grid) == set(brute_segment(x, y, grid))


class TestBruteConvex:
    def test_segment_is_convex(self):
        grid = Grid(6, 2)
        assert brute_is_convex(brute_segment(pt("1/6,1"), pt("1,0.5"), grid), grid)

    def test_two_corners_are_not_convex(self):
        grid = Grid(2, 2)
        assert not brute_is_convex({pt("0,1"), pt("1,0")}, grid)


class TestBruteSeparationSearch:
    def test_finds_known_separator(self):
        B = box("0.6,0.1", "0.9,0.3")
        C = gset("0.2,0.5", "0.4,0.9")
        grid = Grid(10, 2)
        S = brute_separation_search(B, C, grid)
        assert S is not None
        assert set_in_semispace(C, S) is None
        assert semispace_avoids_box(S, B)

    def test_reports_nonseparable_instance(self):
        B = box("0,0.3", "1,0.5")
        C = gset("0.4,0.8")
        grid = Grid(10, 2)
        assert brute_separation_search(B, C, grid) is None

    def test_requires_on_grid_instance(self):
        grid = Grid(4, 2)
        with pytest.raises(ValueError):
            brute_separation_search(box("0.1,0.1", "0.3,0.3"), gset("0.5,0.75"), grid)
