"""Exact rational planar geometry.

Everything in this module works over :class:`fractions.Fraction`; no floating
point value is ever produced.  Polygons are immutable, stored with their
vertices in counterclockwise order, and may be degenerate (a single point or a
segment).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction, str]


class GeometryError(ValueError):
    """Raised for invalid geometric input.  ``code`` is a stable identifier."""

    def __init__(self, code: str, message: str = ""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code


def Q(value: Number) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected on purpose: silently turning 0.1 into
    3602879701896397/36028797018963968 hides bugs.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted in exact geometry; use Fraction or 'p/q'")
    return Fraction(value)


class Point(NamedTuple):
    """An exact point in the plane."""

    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> "Point":
        return cls(Q(x), Q(y))

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])

    def scale(self, lam: Number) -> "Point":
        lam = Q(lam)
        return Point(self.x * lam, self.y * lam)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1


def P(x: Number, y: Number) -> Point:
    """Shorthand constructor: ``P(1, "1/2")``."""
    return Point.of(x, y)


class Direction(NamedTuple):
    """A primitive integer direction ``(a, b)``."""

    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int) -> "Direction":
        if (a, b) == (0, 0):
            raise GeometryError("ZeroDirection", "direction must be non-zero")
        if math.gcd(a, b) != 1:
            raise GeometryError("NotPrimitive", f"({a},{b}) is not primitive")
        return cls(int(a), int(b))

    def dot(self, p) -> Fraction:
        return self.a * p[0] + self.b * p[1]

    def __neg__(self):
        return Direction(-self.a, -self.b)


E1 = Direction(1, 0)
E2 = Direction(0, 1)
# The six directions ±e1, ±e2, ±(e2 - e1).  Widths only depend on u up to sign,
# so three representatives suffice for evaluating w(K; A).
DIRECTION_SET_A: Tuple[Direction, ...] = (E1, E2, Direction(-1, 1))


def cross(o, a, b) -> Fraction:
    """z-component of (a - o) x (b - o); positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def det2(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


class HalfPlane(NamedTuple):
    """The set ``{x : <normal, x> <= offset}`` (``<`` when ``strict``)."""

    normal: Tuple[Fraction, Fraction]
    offset: Fraction
    strict: bool = False

    def value(self, p) -> Fraction:
        """Signed slack ``<normal,p> - offset`` (<= 0 inside)."""
        return self.normal[0] * p[0] + self.normal[1] * p[1] - self.offset

    def contains(self, p) -> bool:
        v = self.value(p)
        return v < 0 if self.strict else v <= 0

    def complement(self) -> "HalfPlane":
        """Closure-aware complement: the negation of ``<`` is ``>=`` and vice versa."""
        return HalfPlane((-self.normal[0], -self.normal[1]), -self.offset, not self.strict)

    def closed(self) -> "HalfPlane":
        return HalfPlane(self.normal, self.offset, False)


def primitive_normal(a, b) -> Tuple[int, int]:
    """Scale the rational vector (a, b) to a primitive integer vector."""
    a, b = Q(a), Q(b)
    if a == 0 and b == 0:
        raise GeometryError("ZeroDirection", "zero vector has no primitive form")
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    ia, ib = int(a * den), int(b * den)
    g = math.gcd(ia, ib)
    return ia // g, ib // g


class LatticePolygon:
    """A convex polygon with exact rational vertices in CCW order.

    Use :func:`convex_hull` (or :meth:`from_points`) to build one from an
    arbitrary point set; the constructor itself only validates.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[Point], _trusted: bool = False):
        verts = tuple(Point(Q(v[0]), Q(v[1])) for v in vertices)
        if not verts:
            raise GeometryError("EmptyPointSet", "a polygon needs at least one vertex")
        if not _trusted and len(verts) >= 3:
            n = len(verts)
            for i in range(n):
                if cross(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]) <= 0:
                    raise GeometryError("NotConvex", "vertices must be strictly convex and CCW")
        if not _trusted and len(verts) == 2 and verts[0] == verts[1]:
            raise GeometryError("NotConvex", "repeated vertex")
        object.__setattr__(self, "vertices", verts)

    def __setattr__(self, key, value):
        raise AttributeError("LatticePolygon is immutable")

    @classmethod
    def from_points(cls, points: Iterable) -> "LatticePolygon":
        return convex_hull(points)

    # -- value semantics -------------------------------------------------
    def _canonical(self) -> Tuple[Point, ...]:
        i = self.vertices.index(min(self.vertices))
        return self.vertices[i:] + self.vertices[:i]

    def __eq__(self, other) -> bool:
        return isinstance(other, LatticePolygon) and self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __repr__(self) -> str:
        pts = ", ".join(f"({v.x},{v.y})" for v in self.vertices)
        return f"LatticePolygon[{pts}]"

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def edges(self):
        """Yield ``(start, end)`` vertex pairs in CCW order (full-dimensional only)."""
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def is_lattice(self) -> bool:
        return all(v.is_integral() for v in self.vertices)

    def scale(self, lam: Number) -> "LatticePolygon":
        lam = Q(lam)
        if lam <= 0:
            raise GeometryError("BadScale", "scale factor must be positive")
        return LatticePolygon([v.scale(lam) for v in self.vertices], _trusted=True)

    def translate(self, t) -> "LatticePolygon":
        return LatticePolygon([v + (Q(t[0]), Q(t[1])) for v in self.vertices], _trusted=True)

    def negate(self) -> "LatticePolygon":
        return LatticePolygon([-v for v in self.vertices], _trusted=True)

    def is_centrally_symmetric(self) -> bool:
        """True iff the polygon equals its reflection in the origin."""
        return self == self.negate()

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)


def convex_hull(points: Iterable) -> LatticePolygon:
    """Minimal CCW vertex list of the convex hull (Andrew's monotone chain).

    Colinear boundary points are dropped.  Degenerate inputs give one- or
    two-vertex polygons.
    """
    pts = sorted({Point(Q(p[0]), Q(p[1])) for p in points})
    if not pts:
        raise GeometryError("EmptyPointSet", "convex hull of an empty set")
    if len(pts) <= 2:
        return LatticePolygon(pts, _trusted=True)

    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 or all(cross(hull[0], hull[1], h) == 0 for h in hull[2:]):
        # all points colinear: return the two extreme points
        return LatticePolygon([pts[0], pts[-1]], _trusted=True)
    return LatticePolygon(hull, _trusted=True)


def polygon(*pts) -> LatticePolygon:
    """Convenience: ``polygon((0,0), (3,0), (0,3))``."""
    return convex_hull([(Q(a), Q(b)) for a, b in pts])


def _on_segment(a: Point, b: Point, p) -> bool:
    if cross(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p[0] <= max(a.x, b.x) and min(a.y, b.y) <= p[1] <= max(a.y, b.y)


def contains(poly: LatticePolygon, p, strict: bool = False) -> bool:
    """Membership test.  ``strict`` tests the interior (empty for degenerate polygons)."""
    p = (Q(p[0]), Q(p[1]))
    verts = poly.vertices
    if len(verts) == 1:
        return (not strict) and verts[0] == p
    if len(verts) == 2:
        return (not strict) and _on_segment(verts[0], verts[1], p)
    n = len(verts)
    for i in range(n):
        c = cross(verts[i], verts[(i + 1) % n], p)
        if c < 0 or (strict and c == 0):
            return False
    return True


def area(poly: LatticePolygon) -> Fraction:
    """Exact shoelace area (zero for degenerate polygons)."""
    verts = poly.vertices
    if len(verts) < 3:
        return Fraction(0)
    s = Fraction(0)
    for i in range(len(verts)):
        s += det2(verts[i], verts[(i + 1) % len(verts)])
    return s / 2


def lattice_points(poly: LatticePolygon, interior_only: bool = False):
    """All integer points in ``poly`` (or its interior), sorted lexicographically."""
    x0, y0, x1, y1 = poly.bbox()
    out = []
    for x in range(math.ceil(x0), math.floor(x1) + 1):
        for y in range(math.ceil(y0), math.floor(y1) + 1):
            if contains(poly, (x, y), strict=interior_only):
                out.append((x, y))
    return out


def interior_count(poly: LatticePolygon) -> int:
    """G°(poly): the number of interior lattice points."""
    return len(lattice_points(poly, interior_only=True))


def lattice_count(poly: LatticePolygon) -> int:
    """G(poly): the number of lattice points in the closed polygon."""
    return len(lattice_points(poly))


def halfplane_description(poly: LatticePolygon):
    """Irredundant half-plane description, one per edge, with primitive integer normals."""
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "half-plane description needs a 2D polygon")
    out = []
    for a, b in poly.edges():
        nx, ny = primitive_normal(b.y - a.y, a.x - b.x)  # outward for CCW order
        n = (Fraction(nx), Fraction(ny))
        out.append(HalfPlane(n, n[0] * a.x + n[1] * a.y))
    return out


# --------------------------------------------------------------------------
# Unimodular maps
# --------------------------------------------------------------------------


class UnimodularMap(NamedTuple):
    """The affine map ``x -> U x + t`` with ``U`` integral and ``|det U| = 1``."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]]
    translation: Tuple[int, int] = (0, 0)

    @classmethod
    def of(cls, matrix, translation=(0, 0)) -> "UnimodularMap":
        m = ((int(matrix[0][0]), int(matrix[0][1])), (int(matrix[1][0]), int(matrix[1][1])))
        t = (int(translation[0]), int(translation[1]))
        if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 1:
            raise GeometryError("NotUnimodular", f"det of {m} is not ±1")
        return cls(m, t)

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, p) -> Point:
        (a, b), (c, d) = self.matrix
        return Point(a * p[0] + b * p[1] + self.translation[0], c * p[0] + d * p[1] + self.translation[1])

    def inverse(self) -> "UnimodularMap":
        (a, b), (c, d) = self.matrix
        dt = self.det
        inv = ((d * dt, -b * dt), (-c * dt, a * dt))
        tx, ty = self.translation
        return UnimodularMap(inv, (-(inv[0][0] * tx + inv[0][1] * ty), -(inv[1][0] * tx + inv[1][1] * ty)))

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self ∘ other``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        t = self.apply(other.translation)
        return UnimodularMap(m, (int(t.x), int(t.y)))


IDENTITY = UnimodularMap(((1, 0), (0, 1)), (0, 0))


def apply_map(T: UnimodularMap, poly: LatticePolygon) -> LatticePolygon:
    """Image of ``poly``; vertex order is reversed when ``det = -1`` to stay CCW."""
    image = [T.apply(v) for v in poly.vertices]
    if T.det < 0:
        image.reverse()
    return LatticePolygon(image, _trusted=True)


def are_equivalent(Pa: LatticePolygon, Pb: LatticePolygon) -> Optional[UnimodularMap]:
    """Return a unimodular map sending ``Pa`` onto ``Pb``, or ``None``.

    Both polygons must have integer vertices.  One vertex of ``Pa`` together
    with its two neighbours is sent to every vertex of ``Pb`` and its
    neighbours (both orientations); at most 2n candidate matrices are tried.
    """
    for poly in (Pa, Pb):
        if not poly.is_lattice():
            raise GeometryError("NotLatticePolygon", "equivalence needs integer vertices")
    if len(Pa) != len(Pb):
        return None
    n = len(Pa)
    A, B = Pa.vertices, Pb.vertices
    target = set(B)
    if n == 1:
        d = B[0] - A[0]
        return UnimodularMap(((1, 0), (0, 1)), (int(d.x), int(d.y)))
    v0 = A[0]
    a1 = A[1] - v0
    a2 = A[-1] - v0 if n > 2 else None
    for j in range(n):
        w = B[j]
        for step in (1, -1):
            b1 = B[(j + step) % n] - w
            if n == 2:
                # segments: map a1 -> b1 and complete with any unimodular column
                cands = _complete_segment_maps(a1, b1)
            else:
                b2 = B[(j - step) % n] - w
                cands = _solve_linear_map(a1, a2, b1, b2)
            for M in cands:
                if M is None:
                    continue
                Mv = (M[0][0] * v0.x + M[0][1] * v0.y, M[1][0] * v0.x + M[1][1] * v0.y)
                t = (w.x - Mv[0], w.y - Mv[1])
                if t[0].denominator != 1 or t[1].denominator != 1:
                    continue
                T = UnimodularMap(M, (int(t[0]), int(t[1])))
                if {T.apply(v) for v in A} == target:
                    return T
    return None


def _solve_linear_map(a1, a2, b1, b2):
    """Integer matrix M with M a1 = b1 and M a2 = b2, if it is unimodular."""
    d = det2(a1, a2)
    if d == 0:
        return [None]
    # M = [b1 b2] [a1 a2]^{-1}
    inv = ((a2[1] / d, -a2[0] / d), (-a1[1] / d, a1[0] / d))
    m = [
        [b1[0] * inv[0][0] + b2[0] * inv[1][0], b1[0] * inv[0][1] + b2[0] * inv[1][1]],
        [b1[1] * inv[0][0] + b2[1] * inv[1][0], b1[1] * inv[0][1] + b2[1] * inv[1][1]],
    ]
    if any(Fraction(e).denominator != 1 for row in m for e in row):
        return [None]
    M = ((int(m[0][0]), int(m[0][1])), (int(m[1][0]), int(m[1][1])))
    if abs(M[0][0] * M[1][1] - M[0][1] * M[1][0]) != 1:
        return [None]
    return [M]


def _complete_segment_maps(a1, b1):
    ga = math.gcd(int(a1[0]), int(a1[1]))
    gb = math.gcd(int(b1[0]), int(b1[1]))
    if ga != gb or ga == 0:
        return [None]
    pa = (int(a1[0]) // ga, int(a1[1]) // ga)
    pb = (int(b1[0]) // gb, int(b1[1]) // gb)
    ca = _unimodular_completion(pa)
    cb = _unimodular_completion(pb)
    # Ma = [pa ca], Mb = [pb cb];  M = Mb Ma^{-1}
    ma = ((pa[0], ca[0]), (pa[1], ca[1]))
    mb = ((pb[0], cb[0]), (pb[1], cb[1]))
    da = ma[0][0] * ma[1][1] - ma[0][1] * ma[1][0]
    inv = ((ma[1][1] * da, -ma[0][1] * da), (-ma[1][0] * da, ma[0][0] * da))
    M = tuple(
        tuple(sum(mb[i][k] * inv[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )
    return [M]


def _unimodular_completion(p):
    """An integer vector c with det[p c] = 1 (extended Euclid)."""
    a, b = p
    g, s, t = _ext_gcd(a, b)  # s*a + t*b = g = ±1
    # det[[a, -t],[b, s]] = a*s + b*t = g
    return (-t * g, s * g)


def _ext_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_points_on_line(normal: Tuple[int, int], offset: int):
    """Return ``(z0, d)`` with ``{z : <normal,z> = offset} ∩ Z² = z0 + Z d``, or None."""
    a, b = int(normal[0]), int(normal[1])
    g, s, t = _ext_gcd(a, b)
    if Fraction(offset).denominator != 1 or int(offset) % g:
        return None
    k = int(offset) // g
    z0 = (s * k, t * k)
    d = (-b // g, a // g)
    return z0, d


# --------------------------------------------------------------------------
# Half-plane intersection (bounded), used by the region machinery
# --------------------------------------------------------------------------


def clip_polygon(verts: Sequence[Point], hp: HalfPlane) -> list:
    """Clip a convex CCW vertex list by the closed version of ``hp``."""
    out: list = []
    n = len(verts)
    if n == 0:
        return out
    for i in range(n):
        cur, nxt = verts[i], verts[(i + 1) % n]
        vc, vn = hp.value(cur), hp.value(nxt)
        if vc <= 0:
            out.append(cur)
        if (vc < 0 < vn) or (vn < 0 < vc):
            lam = vc / (vc - vn)
            out.append(Point(cur.x + lam * (nxt.x - cur.x), cur.y + lam * (nxt.y - cur.y)))
    # drop duplicates / colinear points to keep a clean vertex list
    dedup: list = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def box_vertices(radius) -> list:
    r = Q(radius)
    return [Point(-r, -r), Point(r, -r), Point(r, r), Point(-r, r)]


def intersect_halfplanes(hps: Sequence[HalfPlane], radius: Number = 10**6) -> Optional[LatticePolygon]:
    """Closure of the intersection of half-planes, clipped to ``[-radius, radius]²``.

    Returns ``None`` when the intersection is empty.
    """
    verts = box_vertices(radius)
    for hp in hps:
        verts = clip_polygon(verts, hp)
        if not verts:
            return None
    return convex_hull(verts)


def line_intersection(n1, c1, n2, c2) -> Optional[Point]:
    """Intersection of the lines ``<n1,x> = c1`` and ``<n2,x> = c2``."""
    d = det2(n1, n2)
    if d == 0:
        return None
    return Point((c1 * n2[1] - c2 * n1[1]) / d, (n1[0] * c2 - n2[0] * c1) / d)


def random_lattice_polygon(rng, radius: int = 4, npoints: int = 6) -> LatticePolygon:
    """Hull of ``npoints`` random integer points in ``[-radius, radius]²`` (may be degenerate)."""
    pts = [(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(npoints)]
    return convex_hull(pts)
