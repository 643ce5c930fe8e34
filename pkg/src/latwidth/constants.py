"""Certified rational enclosures of the irrational constants used in checks.

Every constant is a ``NamedConstant(name, lo, hi, source)`` with
``lo <= value <= hi`` and ``hi - lo < 1e-12``.  Square roots come from
integer square roots; pi comes from mpmath's interval arithmetic, whose
endpoints are exact binary fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import mpmath

# Denominator used for square-root enclosures: 10**15 gives width 1e-15.
_SCALE = 10**15


class NamedConstant(NamedTuple):
    name: str
    lo: Fraction
    hi: Fraction
    source: str

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


def sqrt_enclosure(q, scale: int = _SCALE):
    """Rational ``(lo, hi)`` with ``lo <= sqrt(q) <= hi`` and ``hi - lo <= 1/scale``."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative radicand")
    # sqrt(n/d) = sqrt(n*d)/d
    n, d = q.numerator, q.denominator
    r = math.isqrt(n * d * scale * scale)
    lo = Fraction(r, d * scale)
    hi = lo if r * r == n * d * scale * scale else Fraction(r + 1, d * scale)
    return lo, hi


def _pi_enclosure():
    with mpmath.workprec(80):
        iv = mpmath.iv.pi
        lo, hi = (_mpf_to_fraction(mpmath.mpf(e)) for e in (iv.a, iv.b))
    return lo, hi


def _mpf_to_fraction(x) -> Fraction:
    man, exp = x.man_exp
    return Fraction(man) * Fraction(2) ** exp


SQRT2 = NamedConstant("sqrt2", *sqrt_enclosure(2), "sqrt(2)")
SQRT3 = NamedConstant("sqrt3", *sqrt_enclosure(3), "sqrt(3)")
PI = NamedConstant("pi", *_pi_enclosure(), "pi")

# Hurkens' planar flatness constant 1 + 2/sqrt(3) = 1 + 2 sqrt(3)/3.
FLT_2_0 = NamedConstant("Flt(2,0)", 1 + 2 * SQRT3.lo / 3, 1 + 2 * SQRT3.hi / 3, "1+2/sqrt(3)")
FLT_2_1 = NamedConstant("Flt(2,1)", Fraction(3), Fraction(3), "3")
FLT_2_2 = NamedConstant("Flt(2,2)", Fraction(10, 3), Fraction(10, 3), "10/3")
# Makai's planar constant sqrt(8/3) = w(T0)/area(T0)^(1/2).
FLT_2_INF = NamedConstant("Flt(2,inf)", *sqrt_enclosure(Fraction(8, 3)), "sqrt(8/3)")
FLT_1_0 = NamedConstant("Flt(1,0)", Fraction(1), Fraction(1), "1")
# Closed-form part (8/pi)^d d! of the weak Makai-type bound at d = 2: 128/pi^2.
MAKAI_C2 = NamedConstant("c_2", 128 / PI.hi**2, 128 / PI.lo**2, "(8/pi)^2 * 2")

ALL_CONSTANTS = (SQRT2, SQRT3, PI, FLT_2_0, FLT_2_1, FLT_2_2, FLT_2_INF, FLT_1_0, MAKAI_C2)


def brackets_closed_form(c: NamedConstant) -> bool:
    """Check ``lo <= value <= hi`` with integer arithmetic on the defining polynomial."""
    lo, hi = c.lo, c.hi
    if c is SQRT2:
        return lo * lo <= 2 <= hi * hi
    if c is SQRT3:
        return lo * lo <= 3 <= hi * hi
    if c is FLT_2_0:
        # x = 1 + 2/sqrt(3)  <=>  3 (x - 1)^2 = 4 with x > 1
        return 3 * (lo - 1) ** 2 <= 4 <= 3 * (hi - 1) ** 2
    if c is FLT_2_INF:
        return 3 * lo * lo <= 8 <= 3 * hi * hi
    if c is PI:
        # Archimedes-style sanity bracket plus a float check
        return Fraction(333, 106) < lo <= hi < Fraction(355, 113) and lo <= Fraction(math.pi) + Fraction(1, 10**15)
    if c is MAKAI_C2:
        return c.lo * PI.hi**2 <= 128 <= c.hi * PI.lo**2
    return lo == hi
