import random
from fractions import Fraction as F
from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given, settings

from latwidth.geom import GeometryError, convex_hull, interior_count, polygon
from latwidth.metrics import lattice_width
from latwidth.oracle import (
    box_points,
    check_budget,
    dedup_equivalent,
    enumerate_from,
    isominwidth_scan,
    make_spec,
    pick_interior,
    pigeonhole_check,
    reference_widths,
    sandwich_check,
    search,
    shrink_one,
    simplex_shrink_check,
)

from conftest import lattice_polygons

THREE_DELTA2 = polygon((0, 0), (3, 0), (0, 3))


def brute_polygons(R, n):
    """Every strictly convex lattice n-gon in [-R,R]^2, as a set of vertex sets."""
    pts = [(x, y) for x in range(-R, R + 1) for y in range(-R, R + 1)]
    out = set()
    for combo in combinations(pts, n):
        P = convex_hull(combo)
        if P.dim == 2 and len(P) == n:
            out.add(frozenset((int(v.x), int(v.y)) for v in P.vertices))
    return out


@pytest.mark.parametrize("R, n", [(1, 3), (1, 4), (2, 3)])
def test_enumeration_matches_brute_force(R, n):
    found = set()
    for first in range(len(box_points(R))):
        for row in enumerate_from(R, n, first):
            key = frozenset(map(tuple, row.tolist()))
            assert key not in found  # each polygon exactly once
            found.add(key)
    assert found == brute_polygons(R, n)


def test_pick_interior_matches_exact_count():
    rows = enumerate_from(2, 3, 0)
    counts = pick_interior(rows)
    for row, k in zip(rows[:200], counts[:200]):
        assert interior_count(convex_hull(row.tolist())) == k


@settings(max_examples=50, deadline=None)
@given(lattice_polygons(max_points=5))
def test_reference_width_never_underestimates(poly):
    if len(poly) != 3:
        return
    arr = np.array([[(int(v.x), int(v.y)) for v in poly.vertices]])
    assert reference_widths(arr, 12)[0] >= lattice_width(poly).value


def test_small_triangle_search():
    r = search(make_spec(2, 3, (0, 1)), jobs=1)
    assert r.max_width == 3  # 3*Delta_2 fits in a box of side 4
    assert len(dedup_equivalent(r.argmax_polygons + [THREE_DELTA2])) == 1
    assert sum(r.histogram.values()) == r.visited


def test_hollow_triangles_have_width_at_most_two():
    r = search(make_spec(2, 3, (0,)), jobs=1)
    assert r.max_width == 2


def test_one_point_triangles_larger_box_still_three():
    r = search(make_spec(3, 3, (0, 1)), jobs=1)
    assert r.max_width == 3
    assert len(r.argmax_polygons) == 1
    assert len(dedup_equivalent(r.argmax_polygons + [THREE_DELTA2])) == 1


def test_search_is_independent_of_worker_count():
    spec = make_spec(2, 4, (0, 1))
    assert search(spec, jobs=1) == search(spec, jobs=2)


def test_max_width_monotone_in_radius():
    a = search(make_spec(1, 3, (0, 1, 2)), jobs=1).max_width
    b = search(make_spec(2, 3, (0, 1, 2)), jobs=1).max_width
    assert a <= b


def test_budget_errors():
    with pytest.raises(GeometryError):
        check_budget(make_spec(4, 4))
    check_budget(make_spec(4, 4, allow_large=True))
    for spec in (make_spec(7, 3), make_spec(6, 4, allow_large=True), make_spec(2, 5), make_spec(0, 3)):
        with pytest.raises(GeometryError):
            check_budget(spec)


def test_isominwidth_small_scan():
    r = isominwidth_scan(make_spec(3, 3, range(1, 6)), jobs=1)
    assert r.ok and r.max_width_by_k[1] == 3
    assert len(r.equality_cases) == 1
    assert all(sandwich_check(r.max_width_by_k).values())


def test_simplex_shrink():
    assert shrink_one(THREE_DELTA2)
    report = simplex_shrink_check(40, seed=2)
    assert report.ok and report.max_width == 3


def test_pigeonhole_examples():
    assert pigeonhole_check(THREE_DELTA2, 2)
    assert pigeonhole_check(THREE_DELTA2, 1)
    rng = random.Random(5)
    seen = 0
    while seen < 5:
        poly = convex_hull([(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(6)])
        if poly.dim == 2 and interior_count(poly) == 5:
            assert pigeonhole_check(poly, 2)
            seen += 1
    with pytest.raises(GeometryError):
        pigeonhole_check(THREE_DELTA2, 0)
