"""Shared hypothesis strategies and the acceptance summary hook."""

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from latwidth.geom import convex_hull

# Filled by tests/test_acceptance.py: criterion number -> (passed, detail line).
ACCEPTANCE_RESULTS = {}

coords = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, st.integers(-24, 24), st.integers(1, 4))


@st.composite
def lattice_polygons(draw, min_points=3, max_points=7):
    """Full-dimensional lattice polygons with small integer vertices."""
    pts = draw(st.lists(st.tuples(coords, coords), min_size=min_points, max_size=max_points, unique=True))
    poly = convex_hull(pts)
    from hypothesis import assume

    assume(poly.dim == 2)
    return poly


@st.composite
def rational_polygons(draw, min_points=3, max_points=6):
    pts = draw(st.lists(st.tuples(rationals, rationals), min_size=min_points, max_size=max_points, unique=True))
    poly = convex_hull(pts)
    from hypothesis import assume

    assume(poly.dim == 2)
    return poly


@st.composite
def unimodular_matrices(draw):
    """Products of elementary shears, swaps and sign flips."""
    M = ((1, 0), (0, 1))
    for _ in range(draw(st.integers(0, 4))):
        k = draw(st.integers(-2, 2))
        E = draw(st.sampled_from([((1, k), (0, 1)), ((1, 0), (k, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))]))
        M = ((M[0][0] * E[0][0] + M[0][1] * E[1][0], M[0][0] * E[0][1] + M[0][1] * E[1][1]),
             (M[1][0] * E[0][0] + M[1][1] * E[1][0], M[1][0] * E[0][1] + M[1][1] * E[1][1]))
    return M


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture
def acceptance():
    return ACCEPTANCE_RESULTS
