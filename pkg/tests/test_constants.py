from fractions import Fraction as F

import mpmath
import pytest

from latwidth.constants import ALL_CONSTANTS, FLT_2_0, FLT_2_INF, MAKAI_C2, PI, SQRT3, brackets_closed_form, sqrt_enclosure


@pytest.mark.parametrize("c", ALL_CONSTANTS, ids=lambda c: c.name)
def test_enclosures_are_tight_and_correct(c):
    assert c.lo <= c.hi
    assert c.width < F(1, 10**12)
    assert brackets_closed_form(c)


@pytest.mark.parametrize("c, value", [
    (FLT_2_0, 1 + 2 / mpmath.sqrt(3)),
    (FLT_2_INF, mpmath.sqrt(mpmath.mpf(8) / 3)),
    (PI, mpmath.pi),
    (MAKAI_C2, 128 / mpmath.pi**2),
])
def test_enclosures_contain_high_precision_value(c, value):
    with mpmath.workdps(40):
        assert mpmath.mpf(c.lo.numerator) / c.lo.denominator <= value <= mpmath.mpf(c.hi.numerator) / c.hi.denominator


def test_sqrt_enclosure_exact_squares():
    assert sqrt_enclosure(F(9, 4)) == (F(3, 2), F(3, 2))
    lo, hi = sqrt_enclosure(3)
    assert (lo, hi) == (SQRT3.lo, SQRT3.hi)
    with pytest.raises(ValueError):
        sqrt_enclosure(-1)


def test_flatness_values_are_ordered():
    # width at unit area < hollow maximum < one-point maximum
    assert FLT_2_INF.hi < FLT_2_0.lo and FLT_2_0.hi < 3
