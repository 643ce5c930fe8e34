"""Brute-force enumeration oracles over small lattice polygons.

Polygons are enumerated as vertex tuples in canonical rotation: the
lexicographically smallest vertex first, the rest in counterclockwise order,
strictly convex.  Each lattice triangle / quadrilateral in the box is visited
exactly once.  Interior counts come from Pick's formula in integer arithmetic.

Two independent width computations are run on every surviving polygon:
``metrics.lattice_width`` (exact rationals, inscribed-square direction bound)
and a vectorised integer reference over all primitive ``u`` with
``|u|_inf <= 2R``.  Any disagreement raises ``OracleDisagreement``.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence

import numpy as np

from .constants import FLT_2_0, FLT_2_1, FLT_2_2
from .geom import (
    GeometryError,
    LatticePolygon,
    P,
    are_equivalent,
    interior_count,
    lattice_points,
)
from .metrics import lattice_width

TRIANGLE_MAX_RADIUS = 6
QUAD_MAX_RADIUS = 5
QUAD_DEFAULT_RADIUS = 3
_CHUNK = 20000


class SearchSpec(NamedTuple):
    box_radius: int
    max_vertices: int = 3  # 3: triangles only; 4: triangles and quadrilaterals
    interior_point_target: FrozenSet[int] = frozenset({0, 1})
    canonical_dedup: bool = True
    allow_large: bool = False  # unlock quadrilateral searches with R > 3


class SearchResult(NamedTuple):
    max_width: Fraction
    argmax_polygons: List[LatticePolygon]
    histogram: Dict[str, int]  # width -> number of polygons
    visited: int  # polygons whose widths were computed


class ScanResult(NamedTuple):
    ok: bool
    max_width_by_k: Dict[int, int]
    equality_cases: List[LatticePolygon]  # one representative per equivalence class
    polygons_checked: int


class CounterexampleFound(GeometryError):
    def __init__(self, poly: LatticePolygon, message: str):
        super().__init__("CounterexampleFound", message)
        self.polygon = poly


def make_spec(box_radius: int, max_vertices: int = 3, interior=(0, 1), canonical_dedup=True, allow_large=False) -> SearchSpec:
    return SearchSpec(int(box_radius), int(max_vertices), frozenset(int(k) for k in interior), canonical_dedup, allow_large)


def check_budget(spec: SearchSpec) -> None:
    R, n = spec.box_radius, spec.max_vertices
    if R < 1 or n not in (3, 4):
        raise GeometryError("SearchTooLarge", f"unsupported search: radius {R}, max_vertices {n}")
    if n == 3 and R > TRIANGLE_MAX_RADIUS:
        raise GeometryError("SearchTooLarge", f"triangle search limited to R <= {TRIANGLE_MAX_RADIUS}")
    if n == 4 and R > QUAD_MAX_RADIUS:
        raise GeometryError("SearchTooLarge", f"quadrilateral search limited to R <= {QUAD_MAX_RADIUS}")
    if n == 4 and R > QUAD_DEFAULT_RADIUS and not spec.allow_large:
        raise GeometryError("SearchTooLarge", f"quadrilateral search with R > {QUAD_DEFAULT_RADIUS} needs allow_large")


# --------------------------------------------------------------------------
# Enumeration
# --------------------------------------------------------------------------


def box_points(R: int) -> np.ndarray:
    """Integer points of ``[-R,R]^2`` in lexicographic order."""
    return np.array([(x, y) for x in range(-R, R + 1) for y in range(-R, R + 1)], dtype=np.int64)


def _cross(o, a, b):
    return (a[..., 0] - o[..., 0]) * (b[..., 1] - o[..., 1]) - (a[..., 1] - o[..., 1]) * (b[..., 0] - o[..., 0])


def enumerate_from(R: int, nverts: int, first: int) -> np.ndarray:
    """All strictly convex CCW ``nverts``-gons whose lex-smallest vertex is point ``first``.

    Returns an integer array of shape ``(N, nverts, 2)``.
    """
    pts = box_points(R)
    v0 = pts[first]
    cand = pts[first + 1 :]
    if len(cand) < nverts - 1:
        return np.zeros((0, nverts, 2), dtype=np.int64)
    # every candidate is lexicographically larger, hence in a closed half-plane
    # around v0; sorting by angle gives the CCW order of any convex polygon
    ang = np.arctan2(cand[:, 1] - v0[1], cand[:, 0] - v0[0])
    cand = cand[np.argsort(ang, kind="stable")]
    idx = np.fromiter(
        (i for c in combinations(range(len(cand)), nverts - 1) for i in c), dtype=np.int64
    ).reshape(-1, nverts - 1)
    rest = cand[idx]
    verts = np.concatenate([np.broadcast_to(v0, (len(rest), 1, 2)), rest], axis=1)
    ok = np.ones(len(verts), dtype=bool)
    for i in range(nverts):
        ok &= _cross(verts[:, i], verts[:, (i + 1) % nverts], verts[:, (i + 2) % nverts]) > 0
    return np.ascontiguousarray(verts[ok])


def pick_interior(verts: np.ndarray) -> np.ndarray:
    """Interior lattice point counts via Pick's formula ``2A = 2I + B - 2``."""
    n = verts.shape[1]
    nxt = np.roll(verts, -1, axis=1)
    twice_area = np.sum(verts[..., 0] * nxt[..., 1] - verts[..., 1] * nxt[..., 0], axis=1)
    d = nxt - verts
    boundary = np.sum(np.gcd(np.abs(d[..., 0]), np.abs(d[..., 1])), axis=1)
    return (twice_area - boundary + 2) // 2


def reference_directions(max_norm: int) -> np.ndarray:
    """Sign-normalised primitive directions with ``|u|_inf <= max_norm``."""
    out = []
    for a in range(0, max_norm + 1):
        for b in range(-max_norm, max_norm + 1):
            if (a, b) == (0, 0) or math.gcd(a, b) != 1 or (a == 0 and b < 0):
                continue
            out.append((a, b))
    return np.array(out, dtype=np.int64)


def reference_widths(verts: np.ndarray, max_norm: int) -> np.ndarray:
    """Minimum width over all primitive ``u`` with ``|u|_inf <= max_norm`` (integer)."""
    dirs = reference_directions(max_norm)
    out = np.empty(len(verts), dtype=np.int64)
    for s in range(0, len(verts), _CHUNK):
        proj = verts[s : s + _CHUNK] @ dirs.T  # (n, k, D)
        out[s : s + _CHUNK] = (proj.max(axis=1) - proj.min(axis=1)).min(axis=1)
    return out


def _to_polygon(row) -> LatticePolygon:
    return LatticePolygon([P(int(x), int(y)) for x, y in row])


# --------------------------------------------------------------------------
# Search
# --------------------------------------------------------------------------


class _Partial(NamedTuple):
    max_width: Optional[Fraction]
    argmax: List[tuple]
    histogram: Dict[str, int]
    visited: int


def _search_first(args) -> _Partial:
    R, nverts_list, target, first = args
    hist: Dict[str, int] = {}
    best: Optional[Fraction] = None
    argmax: List[tuple] = []
    visited = 0
    tgt = np.array(sorted(target), dtype=np.int64)
    for n in nverts_list:
        verts = enumerate_from(R, n, first)
        if not len(verts):
            continue
        verts = verts[np.isin(pick_interior(verts), tgt)]
        ref = reference_widths(verts, 2 * R)
        for row, wref in zip(verts, ref):
            poly = _to_polygon(row)
            w = lattice_width(poly).value
            if w != wref:
                raise GeometryError("OracleDisagreement", f"{poly}: lattice_width {w} != reference {wref}")
            visited += 1
            key = str(w)
            hist[key] = hist.get(key, 0) + 1
            if best is None or w > best:
                best, argmax = w, []
            if w == best:
                argmax.append(tuple(map(tuple, row.tolist())))
    return _Partial(best, argmax, hist, visited)


def default_jobs() -> int:
    env = os.environ.get("LATWIDTH_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _map(fn, tasks, jobs: int):
    if jobs <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, tasks))


def dedup_equivalent(polys: Sequence[LatticePolygon]) -> List[LatticePolygon]:
    """Keep the first representative of every unimodular equivalence class."""
    reps: List[LatticePolygon] = []
    for p in polys:
        if not any(are_equivalent(p, q) is not None for q in reps):
            reps.append(p)
    return reps


def search(spec: SearchSpec, jobs: Optional[int] = None) -> SearchResult:
    """Exhaustive lattice-width maximisation over lattice polygons in ``[-R,R]^2``.

    Partitioned by the first (lex-smallest) vertex; partial results are merged
    in index order so the report is independent of ``jobs``.
    """
    check_budget(spec)
    R = spec.box_radius
    nverts_list = (3,) if spec.max_vertices == 3 else (3, 4)
    npts = (2 * R + 1) ** 2
    tasks = [(R, nverts_list, spec.interior_point_target, i) for i in range(npts)]
    parts = _map(_search_first, tasks, jobs or default_jobs())
    best: Optional[Fraction] = None
    argmax: List[tuple] = []
    hist: Dict[str, int] = {}
    visited = 0
    for part in parts:
        visited += part.visited
        for k, v in part.histogram.items():
            hist[k] = hist.get(k, 0) + v
        if part.max_width is None:
            continue
        if best is None or part.max_width > best:
            best, argmax = part.max_width, list(part.argmax)
        elif part.max_width == best:
            argmax.extend(part.argmax)
    if best is None:
        return SearchResult(Fraction(0), [], {}, 0)
    polys = [LatticePolygon([P(*v) for v in a]) for a in argmax]
    if spec.canonical_dedup:
        polys = dedup_equivalent(polys)
    hist = dict(sorted(hist.items(), key=lambda kv: Fraction(kv[0])))
    return SearchResult(best, polys, hist, visited)


# --------------------------------------------------------------------------
# Isominwidth scan
# --------------------------------------------------------------------------


def _scan_first(args):
    R, nverts_list, target, first = args
    tgt = np.array(sorted(target), dtype=np.int64)
    max_by_k: Dict[int, int] = {}
    eq: List[tuple] = []
    bad: List[tuple] = []
    count = 0
    for n in nverts_list:
        verts = enumerate_from(R, n, first)
        if not len(verts):
            continue
        g = pick_interior(verts)
        keep = np.isin(g, tgt) & (g > 0)
        verts, g = verts[keep], g[keep]
        # the reference never underestimates the width, so passing with it is sound
        w = reference_widths(verts, 2 * R)
        count += len(verts)
        viol = w * w > 9 * g
        bad.extend(tuple(map(tuple, r.tolist())) for r in verts[viol])
        eq.extend(tuple(map(tuple, r.tolist())) for r in verts[w * w == 9 * g])
        for k in np.unique(g):
            m = int(w[g == k].max())
            max_by_k[int(k)] = max(max_by_k.get(int(k), 0), m)
    return max_by_k, eq, bad, count


def isominwidth_scan(spec: SearchSpec, jobs: Optional[int] = None) -> ScanResult:
    """Check ``w^2 <= 9 G°`` on every enumerated polygon with ``G° > 0``.

    Equality cases are re-evaluated exactly and must be equivalent to 3Δ₂.
    """
    from .catalog import THREE_DELTA2

    check_budget(spec)
    R = spec.box_radius
    nverts_list = (3,) if spec.max_vertices == 3 else (3, 4)
    tasks = [(R, nverts_list, spec.interior_point_target, i) for i in range((2 * R + 1) ** 2)]
    max_by_k: Dict[int, int] = {}
    eq_rows: List[tuple] = []
    count = 0
    for mk, eq, bad, c in _map(_scan_first, tasks, jobs or default_jobs()):
        for row in bad:
            poly = LatticePolygon([P(*v) for v in row])
            w = lattice_width(poly).value
            g = interior_count(poly)
            if w * w > 9 * g:
                raise CounterexampleFound(poly, f"{poly}: w^2 = {w * w} > 9 G° = {9 * g}")
        for k, m in mk.items():
            max_by_k[k] = max(max_by_k.get(k, 0), m)
        eq_rows.extend(eq)
        count += c
    equality = []
    for row in eq_rows:
        poly = LatticePolygon([P(*v) for v in row])
        w = lattice_width(poly).value
        if w * w == 9 * interior_count(poly):
            if are_equivalent(poly, THREE_DELTA2) is None:
                raise CounterexampleFound(poly, f"{poly} attains equality but is not equivalent to 3Δ₂")
            equality.append(poly)
    return ScanResult(True, dict(sorted(max_by_k.items())), dedup_equivalent(equality), count)


def sandwich_check(max_by_k: Dict[int, int]) -> Dict[int, bool]:
    """Per k: ``M(k)/sqrt(k) <= sqrt(8/3) + Flt(2,0)/sqrt(k)``, i.e. ``M(k) - Flt(2,0) <= sqrt(8k/3)``.

    Checked exactly: if the left side is positive, compare squares.
    """
    out = {}
    for k, m in max_by_k.items():
        lhs = Fraction(m) - FLT_2_0.lo  # safe side: largest left-hand side
        out[k] = lhs <= 0 or lhs * lhs <= Fraction(8 * k, 3)
    return out


# --------------------------------------------------------------------------
# Proof-step checks
# --------------------------------------------------------------------------


def barycentric(tri: LatticePolygon, c) -> List[Fraction]:
    a, b, d = tri.vertices
    den = (b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x)
    l1 = ((c[0] - a.x) * (d.y - a.y) - (c[1] - a.y) * (d.x - a.x)) / den
    l2 = ((b.x - a.x) * (c[1] - a.y) - (b.y - a.y) * (c[0] - a.x)) / den
    return [1 - l1 - l2, l1, l2]


def random_one_point_triangle(rng: random.Random, radius: int = 4) -> LatticePolygon:
    while True:
        pts = [(rng.randint(-radius, radius), rng.randint(-radius, radius)) for _ in range(3)]
        (ax, ay), (bx, by), (cx, cy) = pts
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            continue
        tri = LatticePolygon.from_points(pts)
        if interior_count(tri) == 1:
            return tri


class ShrinkReport(NamedTuple):
    ok: bool
    samples: int
    max_width: Fraction


def shrink_one(S: LatticePolygon) -> bool:
    """For a 1-point triangle S: put its vertex of smallest barycentric weight at 0, then (2/3)S is hollow."""
    (c,) = lattice_points(S, interior_only=True)
    lam = barycentric(S, c)
    i = min(range(3), key=lambda j: lam[j])
    if lam[i] > Fraction(1, 3):
        return False
    v = S.vertices[i]
    shrunk = S.translate((-v.x, -v.y)).scale(Fraction(2, 3))
    if interior_count(shrunk) != 0:
        return False
    w_s, w_sh = lattice_width(S).value, lattice_width(shrunk).value
    return w_s == Fraction(3, 2) * w_sh and w_sh <= FLT_2_0.hi


def simplex_shrink_check(samples: int = 200, seed: int = 0, radius: int = 4) -> ShrinkReport:
    from .catalog import THREE_DELTA2

    rng = random.Random(seed)
    ok = shrink_one(THREE_DELTA2)
    best = lattice_width(THREE_DELTA2).value
    for _ in range(samples):
        S = random_one_point_triangle(rng, radius)
        ok &= shrink_one(S)
        best = max(best, lattice_width(S).value)
    return ShrinkReport(bool(ok), samples, best)


_FLT_KNOWN = {0: FLT_2_0.hi, 1: FLT_2_1.hi, 2: FLT_2_2.hi}


def pigeonhole_check(poly: LatticePolygon, m: int) -> bool:
    """Coset counting for the sublattice ``m Z^2``.

    Some coset ``t + m Z^2`` holds at most ``floor(k/m^2)`` interior points;
    the width with respect to ``m Z^2`` is ``w(P)/m``, and when a value of
    ``Flt(2, l)`` is known it bounds that width.
    """
    if m < 1:
        raise GeometryError("InvalidModulus", "m must be positive")
    if m == 1:
        return True
    pts = lattice_points(poly, interior_only=True)
    k = len(pts)
    ell = k // (m * m)
    counts: Dict[tuple, int] = {}
    for x, y in pts:
        key = (x % m, y % m)
        counts[key] = counts.get(key, 0) + 1
    best_t = min(((tx, ty) for tx in range(m) for ty in range(m)), key=lambda t: (counts.get(t, 0), t))
    if counts.get(best_t, 0) > ell:
        return False
    w = lattice_width(poly).value
    w_sub = lattice_width(poly.scale(Fraction(1, m))).value  # width with respect to m Z^2
    if w_sub != w / m:
        return False
    return ell not in _FLT_KNOWN or w_sub <= _FLT_KNOWN[ell]
