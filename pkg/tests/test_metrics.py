from fractions import Fraction as F
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latwidth.geom import DIRECTION_SET_A, GeometryError, UnimodularMap, apply_map, contains, convex_hull, polygon
from latwidth.metrics import (
    covering_radius_bracket,
    difference_body,
    euclidean_min_width,
    first_minimum,
    lattice_width,
    lattice_width_reference,
    metrics_summary,
    polar,
    transference_product,
    width_in_direction,
    width_over_set,
)

from conftest import lattice_polygons, rational_polygons, unimodular_matrices

THREE_DELTA2 = polygon((0, 0), (3, 0), (0, 3))
T0 = polygon((-1, -1), (0, 1), (1, 0))
DELTA2 = polygon((0, 0), (1, 0), (0, 1))
SQUARE = polygon((0, 0), (1, 0), (1, 1), (0, 1))
BOX = polygon((-1, -1), (1, -1), (1, 1), (-1, 1))
HEX_H = polygon((2, 1), (1, 2), (-1, 1), (-2, -1), (-1, -2), (1, -1))
C14 = polygon((-1, -1), (-1, 2), (2, -1))
QUAD = polygon(("3/2", "1/2"), ("1/2", "3/2"), ("-1/2", "1/2"), ("1/2", "-1/2"))


def brute_width(poly, bound=6):
    """Minimum support width over all primitive directions with max-norm <= bound."""
    best = None
    for a, b in product(range(-bound, bound + 1), repeat=2):
        if (a, b) != (0, 0) and gcd(a, b) == 1:
            w = width_in_direction(poly, (a, b))
            best = w if best is None else min(best, w)
    return best


def test_width_in_direction_examples():
    assert width_in_direction(THREE_DELTA2, (1, 0)) == 3
    assert width_in_direction(T0, (1, -1)) == 2
    assert width_in_direction(SQUARE, (1, 1)) == 2


def test_lattice_width_examples():
    r = lattice_width(THREE_DELTA2)
    assert r.value == 3 and tuple(r.minimizer) == (1, 0)
    assert lattice_width(T0).value == 2
    assert lattice_width(QUAD).value == 2


def test_width_over_direction_set():
    assert width_over_set(THREE_DELTA2, DIRECTION_SET_A).value == 3
    assert width_over_set(T0, DIRECTION_SET_A).value == 2
    assert width_over_set(HEX_H, [(1, 0)]).value == width_in_direction(HEX_H, (1, 0))


def test_difference_body_examples():
    assert difference_body(DELTA2) == polygon((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
    seg = difference_body(convex_hull([(0, 0), (1, 0)]))
    assert set(seg.vertices) == {(-1, 0), (1, 0)}
    assert difference_body(HEX_H) == HEX_H.scale(2)


def test_polar_and_first_minimum_examples():
    assert polar(BOX) == polygon((1, 0), (0, 1), (-1, 0), (0, -1))
    assert polar(polar(HEX_H)) == HEX_H
    assert first_minimum(HEX_H) == F(2, 3)
    assert first_minimum(BOX) == 1
    assert first_minimum(C14) == 1


def test_transference_examples():
    assert transference_product(C14) == 3
    assert transference_product(HEX_H, symmetric=True) == F(4, 3)
    assert transference_product(BOX, symmetric=True) == 1


def test_origin_outside_rejected():
    with pytest.raises(GeometryError):
        polar(THREE_DELTA2)
    with pytest.raises(GeometryError):
        first_minimum(THREE_DELTA2)


def test_euclidean_width_examples():
    assert euclidean_min_width(SQUARE).squared == 1
    assert euclidean_min_width(DELTA2).squared == F(1, 2)
    assert euclidean_min_width(THREE_DELTA2).squared == F(9, 2)


@pytest.mark.parametrize("poly, expected", [(SQUARE, F(1)), (DELTA2, F(2)), (THREE_DELTA2, F(2, 3))])
def test_covering_radius_brackets(poly, expected):
    tol = F(1, 10**6)
    b = covering_radius_bracket(poly, tol)
    assert b.lower <= expected <= b.upper
    assert b.upper - b.lower <= tol


def test_covering_radius_bad_tolerance():
    with pytest.raises(GeometryError):
        covering_radius_bracket(SQUARE, 0)


def test_metrics_summary_keys():
    s = metrics_summary(C14)
    assert s["lattice_width"] == 3 and s["interior_points"] == 1 and s["transference_product"] == 3


@settings(max_examples=150, deadline=None)
@given(lattice_polygons())
def test_width_matches_brute_force(poly):
    assert lattice_width(poly).value == brute_width(poly)
    assert lattice_width(poly).value == lattice_width_reference(poly, 8)


@settings(max_examples=150, deadline=None)
@given(rational_polygons())
def test_minimizer_attains_value(poly):
    r = lattice_width(poly)
    assert width_in_direction(poly, r.minimizer) == r.value
    assert gcd(int(r.minimizer[0]), int(r.minimizer[1])) == 1
    assert r.value <= width_over_set(poly, DIRECTION_SET_A).value


@settings(max_examples=100, deadline=None)
@given(rational_polygons(), unimodular_matrices(), st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_width_unimodular_invariance(poly, M, t):
    assert lattice_width(apply_map(UnimodularMap.of(M, t), poly)).value == lattice_width(poly).value


@settings(max_examples=100, deadline=None)
@given(rational_polygons(), st.fractions(min_value=F(1, 8), max_value=8))
def test_width_homogeneity(poly, lam):
    assert lattice_width(poly.scale(lam)).value == lam * lattice_width(poly).value


@settings(max_examples=100, deadline=None)
@given(rational_polygons())
def test_width_equals_first_minimum_of_polar_difference_body(poly):
    assert first_minimum(polar(difference_body(poly))) == lattice_width(poly).value


@settings(max_examples=60, deadline=None)
@given(rational_polygons())
def test_polar_involution(poly):
    c = sum((v for v in poly.vertices), start=type(poly.vertices[0])(0, 0))
    centroid = (c.x / len(poly), c.y / len(poly))
    K = poly.translate((-centroid[0], -centroid[1]))
    assert contains(K, (0, 0), strict=True)
    assert polar(polar(K)) == K
