"""Checkable instantiations of the named constants, extremal bodies and
planar inequalities around lattice width.

Every assertion is exact: irrational constants enter only through the safe
endpoint of their rational enclosure.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

from .catalog import EXTREMIZERS, T0, THREE_DELTA2, case_data
from .constants import ALL_CONSTANTS, FLT_1_0, FLT_2_0, FLT_2_2, FLT_2_INF, MAKAI_C2, SQRT2, brackets_closed_form, sqrt_enclosure
from .geom import (
    Direction,
    GeometryError,
    LatticePolygon,
    P,
    Point,
    area,
    are_equivalent,
    contains,
    convex_hull,
    det2,
    interior_count,
    lattice_count,
    UnimodularMap,
    apply_map,
    primitive_normal,
)
from .metrics import (
    covering_radius_bracket,
    difference_body,
    euclidean_min_width,
    first_minimum,
    lattice_width,
    polar,
    transference_product,
    uncovered_point,
    width_in_direction,
    width_over_set,
)


class CheckRow(NamedTuple):
    name: str
    expected: str
    actual: str
    passed: bool


# --------------------------------------------------------------------------
# Catalog and constants
# --------------------------------------------------------------------------

F = Fraction
# name -> (lattice width, interior points, area, extra functional name, value)
EXPECTED = {
    "3delta2": (F(3), 1, F(9, 2), None, None),
    "flt22_maximizer": (F(10, 3), 2, F(25, 6), None, None),
    "t0": (F(2), 1, F(3, 2), "w^2/area", F(8, 3)),
    "triangle_c14": (F(3), 1, F(9, 2), "transference", F(3)),
    "hexagon_h": (F(4), 7, F(9), "transference_symmetric", F(4, 3)),
    "remark_quad": (F(2), 0, F(2), None, None),
}


def check_extremizers() -> List[CheckRow]:
    """Recompute (w, G°, area) and the extra functional of each catalog body.

    Raises ``CatalogMismatch`` on any disagreement.
    """
    rows = []
    for name, (w, g, a, extra, val) in EXPECTED.items():
        poly = EXTREMIZERS[name]
        got_w = lattice_width(poly).value
        got = (got_w, interior_count(poly), area(poly))
        rows.append(CheckRow(f"{name}.w,G°,area", f"{w},{g},{a}", ",".join(map(str, got)), got == (w, g, a)))
        if extra == "w^2/area":
            x = got_w**2 / area(poly)
        elif extra == "transference":
            x = transference_product(poly)
        elif extra == "transference_symmetric":
            x = transference_product(poly, symmetric=True)
        else:
            continue
        rows.append(CheckRow(f"{name}.{extra}", str(val), str(x), x == val))
    bad = [r for r in rows if not r.passed]
    if bad:
        raise GeometryError("CatalogMismatch", "; ".join(f"{r.name}: expected {r.expected}, got {r.actual}" for r in bad))
    return rows


def check_constants() -> List[CheckRow]:
    rows = []
    for c in ALL_CONSTANTS:
        ok = c.lo <= c.hi and c.width <= F(1, 10**12) and brackets_closed_form(c)
        rows.append(CheckRow(c.name, c.source, f"[{float(c.lo)!r}, {float(c.hi)!r}]", ok))
    return rows


# --------------------------------------------------------------------------
# Single-body inequalities
# --------------------------------------------------------------------------


class IsominwidthCheck(NamedTuple):
    passed: bool
    width: Fraction
    interior: int
    equality: bool
    equivalent_to_3delta2: bool


def check_isominwidth(poly: LatticePolygon) -> IsominwidthCheck:
    """``w(P)^2 <= 9 G°(P)``; equality only for equivalents of 3Δ₂."""
    g = interior_count(poly)
    if g == 0:
        raise GeometryError("NoInteriorPoints", "isominwidth needs G° > 0")
    w = lattice_width(poly).value
    eq = w * w == 9 * g
    equiv = are_equivalent(poly, THREE_DELTA2) is not None
    return IsominwidthCheck(w * w <= 9 * g and (not eq or equiv), w, g, eq, equiv)


def _is_dilated_t0(poly: LatticePolygon) -> bool:
    """Is ``poly = lam U T0 + t`` for some lam > 0, unimodular U and real t?"""
    if len(poly.vertices) != 3:
        return False
    lam = lattice_width(poly).value / lattice_width(T0).value
    v = [p.scale(1 / lam) for p in poly.vertices]
    e1, e2 = v[1] - v[0], v[2] - v[0]
    t = T0.vertices
    for i in range(3):
        for j in range(3):
            k = 3 - i - j
            if len({i, j, k}) < 3:
                continue
            f1, f2 = t[j] - t[i], t[k] - t[i]
            d = det2(f1, f2)
            # U with U f1 = e1, U f2 = e2:  U = [e1 e2] [f1 f2]^{-1}
            inv = ((f2.y / d, -f2.x / d), (-f1.y / d, f1.x / d))
            U = [[e1.x * inv[0][0] + e2.x * inv[1][0], e1.x * inv[0][1] + e2.x * inv[1][1]],
                 [e1.y * inv[0][0] + e2.y * inv[1][0], e1.y * inv[0][1] + e2.y * inv[1][1]]]
            if all(x.denominator == 1 for r in U for x in r) and abs(U[0][0] * U[1][1] - U[0][1] * U[1][0]) == 1:
                return True
    return False


class MakaiCheck(NamedTuple):
    passed: bool
    ratio_squared: Fraction  # w^2 / area
    equality: bool
    dilate_of_t0: bool


def check_makai(poly: LatticePolygon) -> MakaiCheck:
    """``w(P)^2 <= (8/3) area(P)``; equality only at dilates/translates of T0 up to equivalence."""
    a = area(poly)
    if a <= 0:
        raise GeometryError("DegeneratePolygon", "Makai check needs positive area")
    w = lattice_width(poly).value
    r = w * w / a
    eq = r == F(8, 3)
    dil = _is_dilated_t0(poly) if eq else False
    return MakaiCheck(r <= F(8, 3) and (not eq or dil), r, eq, dil)


class ChainCheck(NamedTuple):
    passed: bool
    k: int
    max_width: Fraction
    bound_lo: Fraction  # certified lower end of Flt(2,0) + Flt(2,inf) sqrt(k)
    ratio_hi: Optional[Fraction]  # certified upper end of Flt(2,inf) + Flt(2,0)/sqrt(k), k >= 2


def check_flatness_chain(k: int, max_width) -> ChainCheck:
    """``M_k <= Flt(2,0) + Flt(2,inf) sqrt(k)``, and for ``k >= 2`` that ``M_k/sqrt(k) < 3``.

    For ``k >= 3`` the bound itself divided by ``sqrt(k)`` is certified below 3.
    """
    m = F(max_width)
    s_lo, s_hi = sqrt_enclosure(k)
    bound_lo = FLT_2_0.lo + FLT_2_INF.lo * s_lo
    ok = m <= bound_lo
    ratio_hi = None
    if k >= 2:
        ratio_hi = FLT_2_INF.hi + FLT_2_0.hi / s_lo
        if k >= 3:
            ok &= ratio_hi < 3
        ok &= m * m < 9 * k  # M_k / sqrt(k) < 3
    return ChainCheck(bool(ok), k, m, bound_lo, ratio_hi)


def lambda1_lower_bound_check(poly: LatticePolygon, k: int) -> bool:
    """``lambda_1(P-P) >= min{1/w, (1/(k+1)) (1 - Flt(1,0)/w)}`` for a body with at most k interior points."""
    if interior_count(poly) > k:
        raise GeometryError("TooManyInteriorPoints", f"G°(P) exceeds k = {k}")
    w = lattice_width(poly).value
    lam = first_minimum(difference_body(poly))
    return lam >= min(1 / w, F(1, k + 1) * (1 - FLT_1_0.hi / w))


# --------------------------------------------------------------------------
# Origin-symmetric circumscribers
# --------------------------------------------------------------------------


class HexSample(NamedTuple):
    vertices: List[Point]
    alpha: List[Fraction]  # weight on the blocking point at the start of the edge
    beta: List[Fraction]  # weight on the outer vertex of the region
    alpha_t: List[Fraction]  # weight on the blocking point at the end of the edge


def _bary(p, a, r, c):
    den = det2(r - a, c - a)
    l1 = det2(p - a, c - a) / den
    l2 = det2(r - a, p - a) / den
    return 1 - l1 - l2, l1, l2


def _line_meet(p, q, r, s) -> Optional[Point]:
    d = det2(q - p, s - r)
    if d == 0:
        return None
    return p + (q - p).scale(det2(r - p, s - r) / d)


def _hex_frame():
    b = [P(*v) for v in case_data("hex").blocking_vertices]
    outer = [b[i] + b[(i + 1) % 6] for i in range(6)]  # third vertex of each region triangle
    return b, outer


def hexagon_coordinates(vertices) -> HexSample:
    b, outer = _hex_frame()
    co = [_bary(vertices[i], b[i], outer[i], b[(i + 1) % 6]) for i in range(6)]
    return HexSample(list(vertices), [c[0] for c in co], [c[1] for c in co], [c[2] for c in co])


def sample_symmetric_hexagon(rng: random.Random, den: int = 1000) -> Optional[HexSample]:
    """Random origin-symmetric hexagon through the blocking hexagon's six points.

    The first vertex is random in its region, the second on the line through
    the first and their common blocking point, the third is forced by
    colinearity with the antipode of the first.  Infeasible draws return None.
    """
    b, outer = _hex_frame()
    x, y = F(rng.randint(1, den - 1), den), F(rng.randint(1, den - 1), den)
    if x + y >= 1:
        return None
    p1 = b[0].scale(1 - x - y) + outer[0].scale(x) + b[1].scale(y)
    t = F(rng.randint(1, 3 * den), den)
    p2 = b[1] + (b[1] - p1).scale(t)
    p3 = _line_meet(p2, b[2], -p1, b[3])
    if p3 is None:
        return None
    s = hexagon_coordinates([p1, p2, p3, -p1, -p2, -p3])
    if not all(c > 0 for c in s.alpha + s.beta + s.alpha_t):
        return None
    return s


def barycentric_identities(s: HexSample) -> bool:
    """Exact: ``beta_{i-1} beta_i = alpha_{i-1} alpha~_i``, the squared-product identity
    and ``w(P, n_i) = 2 + 2 beta_i`` for the normal ``n_i`` of blocking edge ``i``."""
    al, be, at = s.alpha, s.beta, s.alpha_t
    ok = all(be[i - 1] * be[i] == al[i - 1] * at[i] for i in range(6))
    ok &= (be[0] * be[1] * be[2]) ** 2 == al[0] * at[0] * al[1] * at[1] * al[2] * at[2]
    b, _ = _hex_frame()
    poly = LatticePolygon(s.vertices)
    for i in range(3):
        n = primitive_normal(b[(i + 1) % 6].y - b[i].y, b[i].x - b[(i + 1) % 6].x)
        ok &= width_in_direction(poly, n) == 2 + 2 * be[i]
    return bool(ok)


class BarycentricReport(NamedTuple):
    passed: bool
    feasible: int
    skipped: int
    min_beta_max: Fraction  # largest observed min_i beta_i (never above 1/3)


def hexagon_barycentric_check(samples: int = 1000, seed: int = 0) -> BarycentricReport:
    """Identities on ``samples`` feasible random hexagons plus the regular configuration."""
    rng = random.Random(seed)
    third = F(1, 3)
    b, outer = _hex_frame()
    regular = hexagon_coordinates([(b[i] + outer[i] + b[(i + 1) % 6]).scale(third) for i in range(6)])
    ok = barycentric_identities(regular) and all(x == third for x in regular.beta)
    feasible = skipped = 0
    best = F(0)
    while feasible < samples:
        s = sample_symmetric_hexagon(rng)
        if s is None:
            skipped += 1
            continue
        feasible += 1
        ok &= barycentric_identities(s)
        mb = min(s.beta)
        ok &= mb <= third
        best = max(best, mb)
    return BarycentricReport(bool(ok), feasible, skipped, best)


class CrossCaseReport(NamedTuple):
    passed: bool
    solution: tuple  # (a, b, c, d) as floats
    width_e: float  # w(K; {±e1, ±e2})
    product: float  # lambda_1(K) lambda_1(K*) bound (1+sqrt 2)/2
    boundary_width: Fraction  # width of a boundary-subcase instance


def symmetric_cross_case_check(start=(0.6, 1.1, 1.1, -0.4), tol: float = 1e-9) -> CrossCaseReport:
    """Solve the stationarity system of the symmetric cross-blocking case.

    Unknowns are the vertices ``p1 = (a, b)`` and ``p4 = (c, d)`` of
    ``K = conv{±p1, ±p4}``.  Equations: the two colinearities through the
    blocking points, equal horizontal and vertical widths ``b = c`` and the
    multiplier condition ``d - a + 1 = 0``.
    """
    import mpmath

    def eqs(a, b, c, d):
        return [
            -b * c - d + b + a * d,  # det[[c,1,a],[d,0,b],[1,1,1]]
            a * (1 + d) - c * (b - 1),  # det[[a,0,-c],[b,1,-d],[1,1,1]]
            b - c,
            d - a + 1,
        ]

    with mpmath.workdps(40):
        try:
            sol = mpmath.findroot(eqs, start)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError("NoSolutionsFound", str(exc)) from exc
        a, b, c, d = (sol[i] for i in range(4))
        beta = (1 + mpmath.sqrt(2)) / 2
        close = abs(a - 0.5) <= tol and abs(b - beta) <= tol and abs(c - beta) <= tol and abs(d + 0.5) <= tol
        # the body and its width in the coordinate directions
        q = [F(str(mpmath.nstr(x, 30))) for x in (a, b, c, d)]
    K = convex_hull([(q[0], q[1]), (-q[0], -q[1]), (q[2], q[3]), (-q[2], -q[3])])
    we = width_over_set(K, [Direction(1, 0), Direction(0, 1)]).value
    ok = close and abs(float(we) - (1 + math.sqrt(2))) <= tol
    # certified: (1 + sqrt 2)/2 < 4/3
    ok &= (1 + SQRT2.hi) / 2 < F(4, 3)
    # boundary subcase: p1 on the square's boundary forces c = 1 and d = b - 2
    Kb = convex_hull([(1, F(3, 2)), (-1, F(-3, 2)), (1, F(-1, 2)), (-1, F(1, 2))])
    wb = lattice_width(Kb).value
    ok &= wb <= 2 and interior_count(Kb) == 1
    return CrossCaseReport(bool(ok), tuple(float(x) for x in q), float(we), float(we) / 2, wb)


# --------------------------------------------------------------------------
# Random instances and sweeps
# --------------------------------------------------------------------------


def random_rational_polygon(rng: random.Random, radius: int = 3, npoints: int = 6, den: int = 4) -> LatticePolygon:
    """Hull of random points with coordinates in ``(1/den) Z``, retried until full-dimensional."""
    while True:
        pts = [(F(rng.randint(-radius * den, radius * den), den), F(rng.randint(-radius * den, radius * den), den)) for _ in range(npoints)]
        poly = convex_hull(pts)
        if poly.dim == 2:
            return poly


def random_lattice_polygon2(rng: random.Random, radius: int = 4, npoints: int = 6) -> LatticePolygon:
    return random_rational_polygon(rng, radius, npoints, den=1)


def random_one_point_body(rng: random.Random) -> LatticePolygon:
    """Rational polygon whose only interior lattice point is the origin."""
    while True:
        poly = random_rational_polygon(rng, radius=2, npoints=rng.randint(3, 7), den=rng.randint(1, 4))
        if contains(poly, (0, 0), strict=True) and interior_count(poly) == 1:
            return poly


def random_symmetric_body(rng: random.Random) -> LatticePolygon:
    """Origin-symmetric rational polygon rescaled to ``lambda_1 = 1``."""
    while True:
        half = [(F(rng.randint(-12, 12), 4), F(rng.randint(-12, 12), 4)) for _ in range(rng.randint(2, 4))]
        poly = convex_hull(half + [(-x, -y) for x, y in half])
        if poly.dim == 2:
            return poly.scale(first_minimum(poly))


class SweepReport(NamedTuple):
    name: str
    passed: bool
    instances: int
    violations: int
    worst_margin: float  # smallest (bound - value) observed, as a float for display


def _sweep(name, items, check) -> SweepReport:
    n = bad = 0
    worst = math.inf
    for item in items:
        ok, margin = check(item)
        n += 1
        bad += not ok
        worst = min(worst, float(margin))
    return SweepReport(name, bad == 0, n, bad, worst)


def transference_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    """``lambda_1(K) w(K) <= 3`` for random bodies whose only interior lattice point is the origin."""
    rng = random.Random(seed)

    def check(K):
        v = first_minimum(K) * lattice_width(K).value
        return v <= 3, 3 - v

    return _sweep("transference", (random_one_point_body(rng) for _ in range(samples)), check)


def symmetric_transference_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    """``lambda_1(K) w(K)/2 <= 4/3`` for random origin-symmetric bodies with ``lambda_1 = 1``."""
    rng = random.Random(seed)

    def check(K):
        v = transference_product(K, symmetric=True)
        return v <= F(4, 3), F(4, 3) - v

    return _sweep("transference_symmetric", (random_symmetric_body(rng) for _ in range(samples)), check)


def makai_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    """Exact ``w^2 <= (8/3) area`` on random rational polygons."""
    rng = random.Random(seed)

    def check(K):
        r = check_makai(K)
        return r.passed, F(8, 3) - r.ratio_squared

    return _sweep("makai", (random_rational_polygon(rng) for _ in range(samples)), check)


def makai_weak2_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    """``w^2 <= c_2 area`` with ``c_2 = (8/pi)^2 2`` taken at its lower enclosure end."""
    rng = random.Random(seed)

    def check(K):
        lhs, rhs = lattice_width(K).value ** 2, MAKAI_C2.lo * area(K)
        return lhs <= rhs, rhs - lhs

    return _sweep("makai_weak2", (random_rational_polygon(rng) for _ in range(samples)), check)


def discrepancy_sweep(samples: int = 1000, seed: int = 0, radius: int = 5) -> SweepReport:
    """Lattice-point discrepancy for lattice polygons of width above Flt(2,0):

    ``area (1 - F/w)^2 <= G°`` (only when ``P + Z^2`` covers the plane) and
    ``G <= area (1 + F/w)^2``, with F at its lower enclosure end (safe side
    for both).
    """
    rng = random.Random(seed)
    Flo = FLT_2_0.lo

    def gen():
        made = 0
        while made < samples:
            K = random_rational_polygon(rng, radius=radius, npoints=rng.randint(3, 8), den=1)
            w = lattice_width(K).value
            if w <= FLT_2_0.hi:
                continue
            made += 1
            yield K, w

    def check(item):
        K, w = item
        a = area(K)
        up = a * (1 + Flo / w) ** 2 - lattice_count(K)
        ok = up >= 0 and interior_count(K) <= lattice_count(K)
        margin = up
        if uncovered_point(K) is None:
            low = interior_count(K) - a * (1 - Flo / w) ** 2
            ok &= low >= 0
            margin = min(margin, low)
        return ok, margin

    return _sweep("discrepancy", gen(), check)


def covering_flatness_sweep(samples: int = 100, seed: int = 0, tol=F(1, 1000)) -> SweepReport:
    """``mu(P) w(P) <= Flt(2,0) + tol`` using the certified lower end of the covering bracket."""
    rng = random.Random(seed)

    def check(K):
        br = covering_radius_bracket(K, tol)
        v = br.lower * lattice_width(K).value
        return v <= FLT_2_0.hi + tol, FLT_2_0.hi + tol - v

    return _sweep("covering_flatness", (random_rational_polygon(rng, radius=2, npoints=5) for _ in range(samples)), check)


def regular_triangle_proxy(den: int = 10**7) -> LatticePolygon:
    """Rational triangle within relative vertex error < 1e-6 of a regular one."""
    lo, _ = sqrt_enclosure(3, den)
    return LatticePolygon([P(0, 0), P(2, 0), P(1, lo)])


def pal_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    """Euclidean width over sqrt(area) is at most that of the regular triangle (+1e-9)."""
    rng = random.Random(seed)
    T = regular_triangle_proxy()
    ref = euclidean_min_width(T).squared / area(T)

    def check(K):
        r = euclidean_min_width(K).squared / area(K)
        bound = math.sqrt(float(ref)) + 1e-9
        v = math.sqrt(float(r))
        return v <= bound, bound - v

    return _sweep("pal", (random_rational_polygon(rng) for _ in range(samples)), check)


def isominwidth_corpus_sweep(samples: int = 1000, seed: int = 0) -> SweepReport:
    rng = random.Random(seed)

    def gen():
        made = 0
        while made < samples:
            K = random_rational_polygon(rng, radius=4, npoints=rng.randint(3, 7), den=1)
            if interior_count(K) > 0:
                made += 1
                yield K

    def check(K):
        r = check_isominwidth(K)
        return r.passed, 9 * r.interior - r.width**2

    return _sweep("isominwidth", gen(), check)


def random_unimodular(rng: random.Random, steps: int = 4) -> UnimodularMap:
    """Random product of elementary shears, swaps and sign flips plus an integer shift."""
    M = ((1, 0), (0, 1))
    for _ in range(steps):
        k = rng.randint(-2, 2)
        E = rng.choice([((1, k), (0, 1)), ((1, 0), (k, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, 1))])
        M = ((M[0][0] * E[0][0] + M[0][1] * E[1][0], M[0][0] * E[0][1] + M[0][1] * E[1][1]),
             (M[1][0] * E[0][0] + M[1][1] * E[1][0], M[1][0] * E[0][1] + M[1][1] * E[1][1]))
    return UnimodularMap.of(M, (rng.randint(-5, 5), rng.randint(-5, 5)))


def _random_subpolygon(rng: random.Random, poly: LatticePolygon) -> LatticePolygon:
    """Hull of random convex combinations of the vertices of ``poly``."""
    pts = []
    for _ in range(rng.randint(1, 5)):
        ws = [F(rng.randint(0, 3)) for _ in poly.vertices]
        total = sum(ws) or F(1)
        if not sum(ws):
            ws[0] = F(1)
        pts.append((sum(w * v.x for w, v in zip(ws, poly.vertices)) / total,
                    sum(w * v.y for w, v in zip(ws, poly.vertices)) / total))
    return convex_hull(pts)


INVARIANCES = ("unimodular", "homogeneity", "monotonicity", "polar_duality")


def invariance_sweep(kind: str, samples: int = 1000, seed: int = 0) -> SweepReport:
    """Exact structural properties of lattice width on random rational polygons.

    ``unimodular``: w(UK + t) = w(K); ``homogeneity``: w(cK) = c w(K) and
    w(-K) = w(K); ``monotonicity``: L ⊆ K implies w(L) <= w(K) (L may be
    lower-dimensional); ``polar_duality``: w(K) = lambda_1((K - K)*).
    """
    if kind not in INVARIANCES:
        raise GeometryError("UnknownSuite", f"unknown invariance {kind!r}")
    rng = random.Random(seed)

    def check(K):
        w = lattice_width(K).value
        if kind == "unimodular":
            other = lattice_width(apply_map(random_unimodular(rng), K)).value
            return other == w, 0
        if kind == "homogeneity":
            c = F(rng.randint(1, 40), rng.randint(1, 12))
            ok = lattice_width(K.scale(c)).value == c * w and lattice_width(K.negate()).value == w
            return ok, 0
        if kind == "monotonicity":
            L = _random_subpolygon(rng, K)
            # L's width along K's optimal direction bounds w(L) from above
            sub = width_in_direction(L, lattice_width(K).minimizer)
            if L.dim == 2:
                sub = max(sub, lattice_width(L).value)
            return sub <= w, w - sub
        lam = first_minimum(polar(difference_body(K)))
        return lam == w, 0

    return _sweep(f"invariance_{kind}", (random_rational_polygon(rng) for _ in range(samples)), check)


SUITES = ("extremizers", "isominwidth", "makai", "chain", "transference", "all")


def run_suite(name: str, seed: int = 0, samples: int = 200) -> Dict[str, object]:
    """One named check suite as a JSON-ready dict with a ``passed`` flag."""
    if name not in SUITES:
        raise GeometryError("UnknownSuite", f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    names = SUITES[:-1] if name == "all" else (name,)
    out: Dict[str, object] = {}
    passed = True
    for n in names:
        if n == "extremizers":
            try:
                rows = check_extremizers() + check_constants()
            except GeometryError as exc:
                out[n] = {"passed": False, "error": str(exc)}
                passed = False
                continue
            ok = all(r.passed for r in rows)
            out[n] = {"passed": ok, "rows": [r._asdict() for r in rows]}
        elif n == "isominwidth":
            r = isominwidth_corpus_sweep(samples, seed)
            eq = check_isominwidth(THREE_DELTA2)
            ok = r.passed and eq.equality and eq.equivalent_to_3delta2
            out[n] = {"passed": ok, "sweep": r._asdict(), "3delta2_equality": eq.equality}
        elif n == "makai":
            r, r2 = makai_sweep(samples, seed), makai_weak2_sweep(samples, seed)
            t0 = check_makai(T0)
            ok = r.passed and r2.passed and t0.equality and t0.dilate_of_t0
            out[n] = {"passed": ok, "sweep": r._asdict(), "weak": r2._asdict(), "t0_equality": t0.equality}
        elif n == "chain":
            from .oracle import isominwidth_scan, make_spec

            scan = isominwidth_scan(make_spec(4, 3, range(1, 21)), jobs=1)
            rows = [check_flatness_chain(k, m) for k, m in scan.max_width_by_k.items()]
            rows.append(check_flatness_chain(2, FLT_2_2.hi))  # the continuous two-point maximum
            ok = all(c.passed for c in rows)
            out[n] = {
                "passed": ok,
                "rows": [{"k": c.k, "max_width": str(c.max_width), "bound_lo": float(c.bound_lo),
                          "ratio_hi": None if c.ratio_hi is None else float(c.ratio_hi), "passed": c.passed} for c in rows],
            }
        elif n == "transference":
            r1 = transference_sweep(samples, seed)
            r2 = symmetric_transference_sweep(samples, seed)
            ok = r1.passed and r2.passed
            out[n] = {"passed": ok, "general": r1._asdict(), "symmetric": r2._asdict()}
        passed &= bool(out[n]["passed"])
    out["passed"] = passed
    return out
