"""Width functionals, difference and polar bodies, first successive minimum,
covering-radius brackets and Euclidean minimal width.

All values are exact rationals except where a square root is unavoidable
(Euclidean width), in which case the exact square is returned alongside a
float rendering.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple, Optional, Sequence

from .geom import (
    Direction,
    GeometryError,
    LatticePolygon,
    Point,
    Q,
    area,
    clip_polygon,
    contains,
    convex_hull,
    halfplane_description,
    lattice_points,
)


class WidthResult(NamedTuple):
    value: Fraction
    minimizer: Direction


class CoveringRadiusBracket(NamedTuple):
    lower: Fraction
    upper: Fraction
    witness_translate: Point  # lower * P + witness_translate contains no lattice point


class EuclideanWidth(NamedTuple):
    squared: Fraction  # exact square of the minimal Euclidean width
    value: float
    normal: Direction  # an edge normal attaining it


def width_in_direction(poly: LatticePolygon, u) -> Fraction:
    """``max <u,x> - min <u,x>`` over the polygon."""
    vals = [u[0] * v.x + u[1] * v.y for v in poly.vertices]
    return max(vals) - min(vals)


def _sign_normalize(a: int, b: int) -> Direction:
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return Direction(a, b)


def _tie_key(value: Fraction, u: Direction):
    # Smallest value; ties go to the shortest l1 norm, then to the direction
    # with the larger first coordinate (so e1 beats e2 beats e1+e2).
    return (value, abs(u.a) + abs(u.b), -u.a, -u.b)


def inscribed_square(poly: LatticePolygon):
    """Largest axis-parallel square ``c + [-r, r]²`` inside ``poly`` (exact LP).

    A square of half-side r contains the disc of radius r, so ``r`` is a
    rational lower bound for the inradius.  The LP has three variables, so its
    optimum sits at a vertex cut out by three tight constraints; all triples
    are tried.
    """
    hps = halfplane_description(poly)
    rows = [(h.normal[0], h.normal[1], abs(h.normal[0]) + abs(h.normal[1]), h.offset) for h in hps]
    best_r: Optional[Fraction] = None
    best_c = None
    for tri in combinations(rows, 3):
        sol = _solve3([(a, b, c) for a, b, c, _ in tri], [d for *_, d in tri])
        if sol is None:
            continue
        cx, cy, r = sol
        if r < 0:
            continue
        if all(a * cx + b * cy + c * r <= d for a, b, c, d in rows):
            if best_r is None or r > best_r:
                best_r, best_c = r, Point(cx, cy)
    if best_r is None or best_r <= 0:
        raise GeometryError("DegeneratePolygon", "polygon has empty interior")
    return best_c, best_r


def _solve3(A, b):
    """Cramer's rule for a 3x3 rational system; None if singular."""

    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    d = det3(A)
    if d == 0:
        return None
    out = []
    for j in range(3):
        m = [list(row) for row in A]
        for i in range(3):
            m[i][j] = b[i]
        out.append(Fraction(det3(m)) / d)
    return out


def primitive_directions(max_l1: int) -> Iterable[Direction]:
    """Sign-normalized primitive directions with l1 norm at most ``max_l1``."""
    for a in range(0, max_l1 + 1):
        rest = max_l1 - a
        for b in range(-rest, rest + 1):
            if (a, b) == (0, 0) or math.gcd(a, b) != 1:
                continue
            if a == 0 and b < 0:
                continue
            yield Direction(a, b)


def lattice_width(poly: LatticePolygon) -> WidthResult:
    """Exact lattice width and a minimizing primitive direction.

    Directions are enumerated up to the l1 radius gamma/(2r), where gamma is
    an upper bound on the width and r the half-side of an inscribed square:
    such a square forces ``w(P,u) >= 2 r |u|_1``.
    """
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "lattice width of a degenerate polygon has no minimizer")
    _, r = inscribed_square(poly)
    gamma = min(width_in_direction(poly, (1, 0)), width_in_direction(poly, (0, 1)))
    bound = math.floor(gamma / (2 * r))
    best = None
    for u in primitive_directions(max(bound, 1)):
        val = width_in_direction(poly, u)
        key = _tie_key(val, u)
        if best is None or key < best[0]:
            best = (key, WidthResult(val, u))
    return best[1]


def lattice_width_reference(poly: LatticePolygon, max_norm: int) -> Fraction:
    """Slow reference: minimum over all primitive u with ``|u|_inf <= max_norm``."""
    best = None
    for a in range(-max_norm, max_norm + 1):
        for b in range(-max_norm, max_norm + 1):
            if (a, b) == (0, 0) or math.gcd(a, b) != 1:
                continue
            val = width_in_direction(poly, (a, b))
            if best is None or val < best:
                best = val
    return best


def width_over_set(poly: LatticePolygon, directions: Sequence) -> WidthResult:
    """Minimum of the width over a finite, non-empty direction set."""
    if not directions:
        raise GeometryError("EmptyDirectionSet", "direction set must be non-empty")
    best = None
    for u in directions:
        val = width_in_direction(poly, u)
        if best is None or val < best.value:
            best = WidthResult(val, Direction(int(u[0]), int(u[1])))
    return best


def difference_body(poly: LatticePolygon) -> LatticePolygon:
    """``P - P`` as the hull of all pairwise vertex differences."""
    vs = poly.vertices
    return convex_hull([a - b for a in vs for b in vs])


def _require_origin_interior(poly: LatticePolygon):
    if poly.dim < 2 or not contains(poly, (0, 0), strict=True):
        raise GeometryError("OriginNotInterior", "the origin must be an interior point")


def polar(poly: LatticePolygon) -> LatticePolygon:
    """Polar body; its vertices are ``a/b`` for the edge inequalities ``<a,x> <= b``."""
    _require_origin_interior(poly)
    return convex_hull([(h.normal[0] / h.offset, h.normal[1] / h.offset) for h in halfplane_description(poly)])


def gauge(poly: LatticePolygon, z) -> Fraction:
    """Minkowski functional: the least ``lam >= 0`` with ``z in lam * P``."""
    _require_origin_interior(poly)
    return max(Fraction(0), max((h.normal[0] * z[0] + h.normal[1] * z[1]) / h.offset for h in halfplane_description(poly)))


def first_minimum(poly: LatticePolygon) -> Fraction:
    """``lambda_1(P)``: the least dilation of P containing a non-zero lattice point.

    The gauge of a unit vector gives an upper bound ``g``; every minimizer
    lies in ``g * P``, whose bounding box is scanned exhaustively.
    """
    _require_origin_interior(poly)
    hps = halfplane_description(poly)

    def gauge_of(z):
        return max((h.normal[0] * z[0] + h.normal[1] * z[1]) / h.offset for h in hps)

    g = min(gauge_of(e) for e in ((1, 0), (-1, 0), (0, 1), (0, -1)))
    x0, y0, x1, y1 = poly.bbox()
    best = g
    for x in range(math.floor(g * x0), math.ceil(g * x1) + 1):
        for y in range(math.floor(g * y0), math.ceil(g * y1) + 1):
            if (x, y) == (0, 0):
                continue
            val = gauge_of((x, y))
            if val < best:
                best = val
    return best


def transference_product(poly: LatticePolygon, symmetric: bool = False) -> Fraction:
    """``lambda_1(P) * lambda_1((P-P)*)`` or, for symmetric P, ``lambda_1(P) * lambda_1(P*)``.

    Uses ``lambda_1((K-K)*) = w(K)`` and, for ``K = -K``, ``lambda_1(K*) = w(K)/2``.
    """
    _require_origin_interior(poly)
    if symmetric and not poly.is_centrally_symmetric():
        raise GeometryError("NotCentrallySymmetric", "polygon is not origin-symmetric")
    lam = first_minimum(poly)
    w = lattice_width(poly).value
    return lam * w / 2 if symmetric else lam * w


# --------------------------------------------------------------------------
# Covering radius
# --------------------------------------------------------------------------


def _subtract_convex(piece, hps):
    """Closure pieces of ``piece \\ int(C)`` for convex C given by closed half-planes."""
    out = []
    current = list(piece)
    for h in hps:
        outside = clip_polygon(current, h.complement().closed())
        if len(outside) >= 3 and _poly_area(outside) > 0:
            out.append(outside)
        current = clip_polygon(current, h)
        if len(current) < 3 or _poly_area(current) == 0:
            break
    return out


def _poly_area(verts) -> Fraction:
    s = Fraction(0)
    n = len(verts)
    for i in range(n):
        s += verts[i][0] * verts[(i + 1) % n][1] - verts[i][1] * verts[(i + 1) % n][0]
    return s / 2


def uncovered_point(poly: LatticePolygon) -> Optional[Point]:
    """A point of the unit square outside ``poly + Z²``, or None if the translates cover the plane."""
    hps = halfplane_description(poly)
    x0, y0, x1, y1 = poly.bbox()
    pieces = [[Point(Fraction(0), Fraction(0)), Point(Fraction(1), Fraction(0)), Point(Fraction(1), Fraction(1)), Point(Fraction(0), Fraction(1))]]
    for zx in range(math.floor(-x1), math.ceil(1 - x0) + 1):
        for zy in range(math.floor(-y1), math.ceil(1 - y0) + 1):
            shifted = [h._replace(offset=h.offset + h.normal[0] * zx + h.normal[1] * zy) for h in hps]
            new = []
            for pc in pieces:
                new.extend(_subtract_convex(pc, shifted))
            pieces = new
            if not pieces:
                return None
    pc = pieces[0]
    return Point(sum(p.x for p in pc) / len(pc), sum(p.y for p in pc) / len(pc))


def covering_radius_bracket(poly: LatticePolygon, tol) -> CoveringRadiusBracket:
    """Certified bracket ``lower <= mu(P) <= upper`` with ``upper - lower <= tol``.

    ``upper`` is certified by an exact coverage test of ``upper*P + Z²``.
    ``lower`` is certified by a translate ``lower*P + t`` with no lattice
    point at all (found as an uncovered point of ``-lower*P + Z²``).
    """
    tol = Q(tol) if not isinstance(tol, float) else Fraction(tol)
    if tol <= 0:
        raise GeometryError("InvalidTolerance", "tol must be positive")
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "covering radius needs a 2D polygon")
    neg = poly.negate()

    def witness(mu):
        return uncovered_point(neg.scale(mu))

    hi = Fraction(1)
    while witness(hi) is not None:
        hi *= 2
    lo = hi / 2
    w = witness(lo)
    while w is None:
        hi, lo = lo, lo / 2
        w = witness(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        wm = witness(mid)
        if wm is None:
            hi = mid
        else:
            lo, w = mid, wm
    # certify the lower end directly
    assert not lattice_points(poly.scale(lo).translate(w))
    return CoveringRadiusBracket(lo, hi, w)


def euclidean_min_width(poly: LatticePolygon) -> EuclideanWidth:
    """Minimal Euclidean width, attained at an edge normal for polygons."""
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "Euclidean width of a degenerate polygon")
    best = None
    for h in halfplane_description(poly):
        n = (int(h.normal[0]), int(h.normal[1]))
        sq = width_in_direction(poly, n) ** 2 / (n[0] ** 2 + n[1] ** 2)
        if best is None or sq < best[0]:
            best = (sq, Direction(*n))
    return EuclideanWidth(best[0], math.sqrt(best[0]), best[1])


def metrics_summary(poly: LatticePolygon) -> dict:
    """Every functional of this module that applies to ``poly``."""
    out: dict = {"area": area(poly)}
    out["interior_points"] = len(lattice_points(poly, interior_only=True))
    out["lattice_points"] = len(lattice_points(poly))
    if poly.dim == 2:
        wr = lattice_width(poly)
        out["lattice_width"] = wr.value
        out["width_direction"] = list(wr.minimizer)
        ew = euclidean_min_width(poly)
        out["euclidean_width_squared"] = ew.squared
        out["euclidean_width"] = ew.value
        out["difference_body"] = difference_body(poly)
        if contains(poly, (0, 0), strict=True):
            out["first_minimum"] = first_minimum(poly)
            out["polar"] = polar(poly)
            out["transference_product"] = transference_product(poly)
            if poly.is_centrally_symmetric():
                out["symmetric_transference_product"] = transference_product(poly, symmetric=True)
    return out
