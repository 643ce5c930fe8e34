import random
from fractions import Fraction as F

import numpy as np
import pytest

from latwidth.catalog import CASE_NAMES
from latwidth.cases import (
    build_case,
    circumscriber_vertices,
    diagonal_line_identity,
    ellipse_max_check,
    elimination_polynomial,
    hexagon_width_sum_check,
    hyperbola_check,
    instantiate,
    kite_algebra_check,
    lagrange_minor,
    lagrange_regularity_check,
    sample_instances,
    terminal_configuration,
    terminal_elimination_check,
    terminal_solutions,
    trapezoid_identity_check,
    verify_case,
)
from latwidth.geom import GeometryError, are_equivalent, polygon
from latwidth.maximality import is_k_maximal
from latwidth.metrics import lattice_width, width_over_set

THREE_DELTA2 = polygon((0, 0), (3, 0), (0, 3))


@pytest.mark.parametrize("name", CASE_NAMES)
def test_families_have_one_parameter_per_blocking_vertex(name):
    fam = build_case(name)
    assert fam.n_params == len(fam.blocking_polygon.vertices) == len(fam.regions)
    assert len(fam.colinearity_constraints) == fam.n_params


def test_hexagon_family_reaches_3delta2():
    fam = build_case("hex")
    P = instantiate(fam, [0, 1, 0, 1, 0, 1])
    assert P is not None and are_equivalent(P, THREE_DELTA2) is not None
    assert lattice_width(P).value == 3


def test_terminal_family_degenerates_to_3delta2():
    u, v, P = terminal_configuration(3, 0, 3)
    assert are_equivalent(P, THREE_DELTA2) is not None


def test_parameters_outside_box_are_infeasible():
    fam = build_case("hex")
    assert instantiate(fam, [2, 0, 0, 0, 0, 0]) is None
    with pytest.raises(GeometryError):
        instantiate(fam, [0, 0])


@pytest.mark.parametrize("name", CASE_NAMES)
def test_sampled_instances_are_one_maximal_and_thin(name):
    fam = build_case(name)
    inst = sample_instances(fam, random.Random(0), 10)
    assert inst, f"no feasible instance for {name}"
    for params, P in inst:
        assert is_k_maximal(P, 1)
        assert width_over_set(P, fam.direction_set).value <= 3
        assert circumscriber_vertices(fam, params) is not None


@pytest.mark.parametrize("name", ["pent", "term"])
def test_coarse_verification_passes(name):
    r = verify_case(build_case(name), grid=8, refine_iters=10)
    assert r.passed and r.best_width_found <= 3 + 1e-6
    assert r.certificate["at_most_3"]
    assert r.to_json()["case"] == name


def test_verification_is_deterministic():
    fam = build_case("term")
    a = verify_case(fam, grid=8, refine_iters=5)
    b = verify_case(fam, grid=8, refine_iters=5)
    assert a == b


def test_bad_grid_rejected():
    with pytest.raises(GeometryError):
        verify_case(build_case("hex"), grid=2)
    with pytest.raises(GeometryError):
        verify_case(build_case("hex"), grid=8, tol=-1)


def test_hexagon_width_sum():
    assert hexagon_width_sum_check(build_case("hex"), samples=100)
    for lam in (F(0), F(1, 3), F(7, 2)):
        assert diagonal_line_identity(lam) == -3


def test_terminal_newton_solutions_lie_on_ellipse():
    sols = terminal_solutions(10, seed=3)
    assert len(sols) == 10
    for x, y, u, v, t in sols:
        assert abs(elimination_polynomial(x, y)) < 1e-9 and x + y <= 3 + 1e-9


def test_terminal_checks():
    assert terminal_elimination_check(20)
    assert ellipse_max_check()


def test_lagrange_minor_identity_and_forced_zero():
    assert lagrange_regularity_check(200)
    assert lagrange_minor(F(2), F(2), F(1, 3), F(-1, 2), F(2)) == 0  # x = y = t
    assert lagrange_minor(F(1), F(1, 2), F(0), F(0), F(2)) > 0


def test_trapezoid_and_hyperbola_identities():
    assert trapezoid_identity_check(300)
    assert hyperbola_check(300)


def test_kite_algebra():
    r = kite_algebra_check(300)
    assert r.denominator_positive and r.numerator_matches_E and r.numerator_negative
    assert r.width_below_3 and r.boundary_identity
    # the stronger lower bound D >= 3 does not hold on the sampled region
    assert not r.denominator_at_least_3 and r.min_denominator < 3
