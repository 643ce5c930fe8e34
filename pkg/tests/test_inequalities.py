import random
from fractions import Fraction as F

import pytest

from latwidth.catalog import EXTREMIZERS, T0, THREE_DELTA2
from latwidth.constants import FLT_2_2
from latwidth.geom import GeometryError, UnimodularMap, apply_map, convex_hull, interior_count, polygon
from latwidth.inequalities import (
    INVARIANCES,
    SUITES,
    _is_dilated_t0,
    barycentric_identities,
    check_constants,
    check_extremizers,
    check_flatness_chain,
    check_isominwidth,
    check_makai,
    covering_flatness_sweep,
    discrepancy_sweep,
    hexagon_barycentric_check,
    hexagon_coordinates,
    invariance_sweep,
    isominwidth_corpus_sweep,
    lambda1_lower_bound_check,
    makai_sweep,
    makai_weak2_sweep,
    pal_sweep,
    random_one_point_body,
    random_symmetric_body,
    run_suite,
    symmetric_cross_case_check,
    symmetric_transference_sweep,
    transference_sweep,
)
from latwidth.metrics import first_minimum, lattice_width

SQUARE2 = polygon((0, 0), (2, 0), (2, 2), (0, 2))
UNIT_SQUARE = polygon((0, 0), (1, 0), (1, 1), (0, 1))


def test_extremizer_rows():
    rows = check_extremizers()
    assert rows and all(r.passed for r in rows)
    assert all(r.passed for r in check_constants())


def test_isominwidth_examples():
    r = check_isominwidth(THREE_DELTA2)
    assert r.passed and r.equality and r.equivalent_to_3delta2
    r4 = check_isominwidth(THREE_DELTA2.scale(F(4, 3)))
    assert (r4.width, r4.interior) == (4, 3) and r4.passed and not r4.equality
    rs = check_isominwidth(SQUARE2)
    assert (rs.width, rs.interior) == (2, 1) and rs.passed
    with pytest.raises(GeometryError):
        check_isominwidth(UNIT_SQUARE)


def test_makai_examples():
    t = check_makai(T0)
    assert t.passed and t.equality and t.dilate_of_t0
    d = check_makai(THREE_DELTA2)
    assert d.passed and not d.equality and d.ratio_squared == 2


def test_dilated_terminal_triangles_detected():
    T = UnimodularMap.of(((2, 1), (1, 1)), (3, -4))
    assert _is_dilated_t0(apply_map(T, T0).scale(F(5, 7)).translate((F(1, 3), F(2, 9))))
    assert not _is_dilated_t0(THREE_DELTA2)


def test_flatness_chain_examples():
    c3 = check_flatness_chain(3, 0)
    assert c3.passed and c3.ratio_hi < 3 and float(c3.ratio_hi) == pytest.approx(2.878, abs=1e-3)
    c1 = check_flatness_chain(1, 3)
    assert c1.passed and float(c1.bound_lo) == pytest.approx(3.788, abs=1e-3)
    c2 = check_flatness_chain(2, FLT_2_2.hi)
    assert c2.passed
    assert not check_flatness_chain(1, 4).passed


def test_lambda1_lower_bound_examples():
    assert lambda1_lower_bound_check(THREE_DELTA2, 1)
    assert lambda1_lower_bound_check(UNIT_SQUARE, 0)
    with pytest.raises(GeometryError):
        lambda1_lower_bound_check(SQUARE2, 0)


def test_lambda1_lower_bound_on_small_polygons():
    rng = random.Random(1)
    checked = 0
    while checked < 30:
        P = convex_hull([(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(5)])
        if P.dim == 2 and interior_count(P) <= 4:
            assert lambda1_lower_bound_check(P, 4)
            checked += 1


def test_regular_hexagon_configuration():
    from latwidth.inequalities import _hex_frame

    b, outer = _hex_frame()
    third = F(1, 3)
    s = hexagon_coordinates([(b[i] + outer[i] + b[(i + 1) % 6]).scale(third) for i in range(6)])
    assert all(x == third for x in s.alpha + s.beta + s.alpha_t)
    assert barycentric_identities(s)


def test_hexagon_barycentric_sweep():
    r = hexagon_barycentric_check(100, seed=1)
    assert r.passed and r.feasible == 100 and r.min_beta_max < F(1, 3)


def test_symmetric_cross_case():
    r = symmetric_cross_case_check()
    assert r.passed
    assert r.solution[0] == pytest.approx(0.5, abs=1e-9)
    assert r.product == pytest.approx(1.2071067811865, abs=1e-9)
    assert r.boundary_width <= 2


def test_random_generators_meet_their_contracts():
    rng = random.Random(0)
    for _ in range(10):
        K = random_one_point_body(rng)
        assert interior_count(K) == 1
        S = random_symmetric_body(rng)
        assert S.is_centrally_symmetric() and first_minimum(S) == 1


@pytest.mark.parametrize("sweep", [
    transference_sweep, symmetric_transference_sweep, makai_sweep, makai_weak2_sweep,
    discrepancy_sweep, pal_sweep, isominwidth_corpus_sweep,
])
def test_sweeps_small(sweep):
    r = sweep(40, seed=7)
    assert r.passed and r.violations == 0 and r.instances == 40


def test_covering_flatness_sweep_small():
    r = covering_flatness_sweep(3, seed=0)
    assert r.passed


@pytest.mark.parametrize("kind", INVARIANCES)
def test_invariance_sweeps_small(kind):
    r = invariance_sweep(kind, 60, seed=11)
    assert r.passed and r.instances == 60


def test_invariance_unknown_kind():
    with pytest.raises(GeometryError):
        invariance_sweep("nope", 1)


@pytest.mark.parametrize("name", [s for s in SUITES if s != "all"])
def test_named_suites_pass(name):
    out = run_suite(name, seed=0, samples=20)
    assert out["passed"] and out[name]["passed"]


def test_unknown_suite():
    with pytest.raises(GeometryError):
        run_suite("bogus")


def test_every_catalog_body_is_in_the_table():
    names = {r.name.split(".")[0] for r in check_extremizers()}
    assert names == set(EXTREMIZERS)
