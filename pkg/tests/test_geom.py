from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latwidth.geom import (
    GeometryError,
    LatticePolygon,
    P,
    UnimodularMap,
    apply_map,
    are_equivalent,
    area,
    contains,
    convex_hull,
    halfplane_description,
    interior_count,
    lattice_count,
    lattice_points,
    polygon,
)

from conftest import lattice_polygons, unimodular_matrices

THREE_DELTA2 = polygon((0, 0), (3, 0), (0, 3))
T0 = polygon((-1, -1), (0, 1), (1, 0))
DELTA2 = polygon((0, 0), (1, 0), (0, 1))
SQUARE = polygon((0, 0), (1, 0), (1, 1), (0, 1))


def test_hull_drops_interior_point():
    assert convex_hull([(0, 0), (3, 0), (0, 3), (1, 1)]) == THREE_DELTA2
    assert len(convex_hull([(0, 0), (3, 0), (0, 3), (1, 1)])) == 3


def test_hull_single_point_and_collinear():
    assert convex_hull([(0, 0)]).vertices == (P(0, 0),)
    seg = convex_hull([(0, 0), (1, 1), (2, 2)])
    assert seg.dim == 1 and set(seg.vertices) == {P(0, 0), P(2, 2)}


def test_hull_of_terminal_triangle():
    assert len(convex_hull([(-1, -1), (0, 1), (1, 0)])) == 3


def test_empty_point_set_rejected():
    with pytest.raises(GeometryError):
        convex_hull([])


def test_non_convex_vertex_list_rejected():
    with pytest.raises(GeometryError):
        LatticePolygon([P(0, 0), P(0, 1), P(1, 0)])  # clockwise


def test_contains_strict_and_closed():
    assert contains(THREE_DELTA2, (1, 1), strict=True)
    assert not contains(THREE_DELTA2, (0, 0), strict=True)
    assert contains(THREE_DELTA2, (0, 0))
    assert contains(T0, (0, 0), strict=True)


def test_interior_points_examples():
    assert lattice_points(THREE_DELTA2, interior_only=True) == [P(1, 1)]
    assert lattice_points(T0, interior_only=True) == [P(0, 0)]
    assert interior_count(SQUARE) == 0


def test_area_examples():
    assert area(THREE_DELTA2) == F(9, 2)
    assert area(T0) == F(3, 2)
    assert area(convex_hull([(0, 0), (2, 1)])) == 0


def test_halfplanes_of_standard_triangles():
    for poly, off in ((DELTA2, 1), (THREE_DELTA2, 3)):
        hps = halfplane_description(poly)
        assert len(hps) == 3
        assert any(tuple(h.normal) == (1, 1) and h.offset == off for h in hps)
    assert len(halfplane_description(T0)) == 3


def test_maps_and_equivalence_examples():
    ident = UnimodularMap.of(((1, 0), (0, 1)))
    assert apply_map(ident, T0) == T0
    swap = UnimodularMap.of(((0, 1), (1, 0)))
    assert apply_map(swap, DELTA2) == DELTA2
    m = UnimodularMap.of(((-1, -1), (0, 1)))
    assert apply_map(m, polygon((1, -1), (1, -2), (0, -1))) == polygon((0, -1), (1, -2), (1, -1))
    assert are_equivalent(THREE_DELTA2, polygon((-1, -1), (-1, 2), (2, -1))) is not None
    assert are_equivalent(DELTA2, SQUARE) is None
    tri = polygon((-1, 0), (0, 1), (1, 0))
    assert are_equivalent(tri, apply_map(UnimodularMap.of(((0, -1), (1, -1))), tri)) is not None


def test_non_unimodular_matrix_rejected():
    with pytest.raises(GeometryError):
        UnimodularMap.of(((2, 0), (0, 1)))


@settings(max_examples=100, deadline=None)
@given(lattice_polygons(), unimodular_matrices(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_pick_and_counts_are_unimodular_invariant(poly, M, t):
    T = UnimodularMap.of(M, t)
    img = apply_map(T, poly)
    assert area(img) == area(poly)
    assert interior_count(img) == interior_count(poly)
    assert lattice_count(img) == lattice_count(poly)
    assert are_equivalent(poly, img) is not None
    # Pick's formula against direct enumeration
    boundary = lattice_count(poly) - interior_count(poly)
    assert area(poly) == interior_count(poly) + F(boundary, 2) - 1


@settings(max_examples=100, deadline=None)
@given(lattice_polygons(), unimodular_matrices())
def test_inverse_map_round_trip(poly, M):
    T = UnimodularMap.of(M, (1, -2))
    assert apply_map(T.inverse(), apply_map(T, poly)) == poly
    assert T.compose(T.inverse()).apply((3, 4)) == P(3, 4)
