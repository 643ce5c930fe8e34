"""Parametrized circumscriber families and their width verification.

A 1-maximal polygon P with blocking polygon B (vertices ``b_0..b_{m-1}``,
CCW, edge ``e_i = [b_i, b_{i+1}]`` with primitive outward normal ``N_i``)
passes through every ``b_i`` on an edge whose line supports B at ``b_i``.
That line is written

    L_i = {x : <n_i, x> = <n_i, b_i>},   n_i = (1 - s_i) N_{i-1} + s_i N_i,

with ``s_i in [0, 1]``, so ``s in [0,1]^m`` covers every circumscriber.  The
vertex of P beyond edge ``e_i`` is ``p_i = L_i ∩ L_{i+1}``; when ``s_i = 1``
and ``s_{i+1} = 0`` both lines contain ``e_i`` and that vertex is absent
(P has an edge containing ``e_i``).  Consecutive blocking points ``b_i``,
``p_i``, ``b_{i+1}`` thus give the colinearity triples of the family.

A parameter vector is feasible when the lines form a convex polygon whose
edges contain the ``b_i`` in their relative interiors, every present vertex
lies in its declared region, the only interior lattice point is the origin
and no lattice point outside B is a blocking point of P.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .catalog import CASE_NAMES, CaseData, case_data, normalization_for
from .geom import (
    DIRECTION_SET_A,
    E1,
    E2,
    Direction,
    GeometryError,
    HalfPlane,
    LatticePolygon,
    Point,
    convex_hull,
    contains,
    det2,
    halfplane_description,
    line_intersection,
    lattice_points,
    polygon,
)
from .maximality import Region, blocking_data
from .metrics import lattice_width, width_in_direction, width_over_set

# Search box for vertices (the regions of every case fit inside it).
VERTEX_BOX = 5.5
LATTICE_RADIUS = 6
GRID_BUDGET = 10**6
FLOAT_EPS = 1e-9
SNAP_DENOMINATOR = 10**6
DEGENERATION_THRESHOLD = 1e-2


class ColinearityTriple(NamedTuple):
    vertex_a: int  # index of the circumscriber vertex before the blocking point
    blocking_point: Tuple[int, int]
    vertex_b: int  # index of the vertex after it


class CaseFamily(NamedTuple):
    name: str
    blocking_polygon: LatticePolygon
    interior_point: Tuple[int, int]
    regions: Tuple[Tuple[Region, ...], ...]
    colinearity_constraints: Tuple[ColinearityTriple, ...]
    direction_set: Tuple[Direction, ...]
    normalization: Dict[int, List[HalfPlane]]
    labels: Tuple[str, ...]
    normalization_note: str

    @property
    def n_params(self) -> int:
        return len(self.blocking_polygon.vertices)


class VerificationReport(NamedTuple):
    case: str
    grid_resolution: int
    best_width_found: float
    best_parameters: Tuple[float, ...]
    certificate: Optional[dict]
    margin_to_3: float
    degeneration_flag: bool
    degeneration_distance: float
    boundary_gap: float
    route: Optional[str]
    normalization: str
    feasible_points: int
    evaluated_points: int
    tol: float
    passed: bool

    def to_json(self) -> dict:
        d = self._asdict()
        d["best_parameters"] = list(self.best_parameters)
        return d


def build_case(name: str) -> CaseFamily:
    data: CaseData = case_data(name)
    B = data.blocking_polygon
    m = len(B.vertices)
    triples = tuple(
        ColinearityTriple((i - 1) % m, (int(B.vertices[i].x), int(B.vertices[i].y)), i) for i in range(m)
    )
    return CaseFamily(
        data.name,
        B,
        (0, 0),
        data.regions,
        triples,
        data.directions,
        normalization_for(B),
        data.labels,
        data.normalization,
    )


def _edge_normals(B: LatticePolygon):
    return [h.normal for h in halfplane_description(B)]


def _merged(s: Sequence, i: int) -> bool:
    m = len(s)
    return s[i] == 1 and s[(i + 1) % m] == 0


# --------------------------------------------------------------------------
# Exact instantiation
# --------------------------------------------------------------------------


def circumscriber_lines(family: CaseFamily, params: Sequence) -> List[Tuple[Tuple[Fraction, Fraction], Fraction]]:
    """The supporting lines ``(n_i, c_i)`` for exact parameters."""
    B = family.blocking_polygon
    N = _edge_normals(B)
    m = len(N)
    out = []
    for i in range(m):
        s = Fraction(params[i])
        n = ((1 - s) * N[i - 1][0] + s * N[i][0], (1 - s) * N[i - 1][1] + s * N[i][1])
        b = B.vertices[i]
        out.append((n, n[0] * b.x + n[1] * b.y))
    return out


def circumscriber_vertices(family: CaseFamily, params: Sequence) -> Optional[List[Optional[Point]]]:
    """Vertex ``p_i`` per edge (``None`` when absent), or None if the lines are not convex."""
    lines = circumscriber_lines(family, params)
    m = len(lines)
    verts: List[Optional[Point]] = []
    for i in range(m):
        if _merged(params, i):
            verts.append(None)
            continue
        (n1, c1), (n2, c2) = lines[i], lines[(i + 1) % m]
        if det2(n1, n2) <= 0:
            return None
        verts.append(line_intersection(n1, c1, n2, c2))
    return verts


def _in_regions(family: CaseFamily, i: int, p) -> bool:
    extra = family.normalization.get(i, [])
    if any(h.value(p) > 0 for h in extra):
        return False
    return any(c.contains_closure(p) for c in family.regions[i])


def instantiate(family: CaseFamily, params: Sequence) -> Optional[LatticePolygon]:
    """The circumscriber for exact parameters ``s``, or None when infeasible."""
    m = family.n_params
    if len(params) != m:
        raise GeometryError("BadParameters", f"expected {m} parameters, got {len(params)}")
    params = [Fraction(p) for p in params]
    if any(p < 0 or p > 1 for p in params):
        return None
    verts = circumscriber_vertices(family, params)
    if verts is None:
        return None
    lines = circumscriber_lines(family, params)
    B = family.blocking_polygon
    for i in range(m):
        b = B.vertices[i]
        left = verts[(i - 1) % m] if verts[(i - 1) % m] is not None else verts[(i - 2) % m]
        right = verts[i] if verts[i] is not None else verts[(i + 1) % m]
        n = lines[i][0]
        t = (-n[1], n[0])
        if not ((left.x - b.x) * t[0] + (left.y - b.y) * t[1] < 0 < (right.x - b.x) * t[0] + (right.y - b.y) * t[1]):
            return None
    for i, p in enumerate(verts):
        if p is not None and not _in_regions(family, i, p):
            return None
    P = convex_hull([v for v in verts if v is not None])
    if P.dim < 2:
        return None
    if lattice_points(P, interior_only=True) != [family.interior_point]:
        return None
    if blocking_data(P).blocking_polygon != B:
        return None
    return P


# --------------------------------------------------------------------------
# Vectorized float evaluation
# --------------------------------------------------------------------------


class _Compiled(NamedTuple):
    b: np.ndarray  # (m, 2)
    N: np.ndarray  # (m, 2)
    cells: list  # per edge: list of (A (k,2), c (k,))
    Z: np.ndarray  # lattice points except the interior point, (L, 2)
    Z_outside_B: np.ndarray  # bool (L,)
    dirs: np.ndarray  # (d, 2)


def _compile(family: CaseFamily) -> _Compiled:
    B = family.blocking_polygon
    b = np.array([[float(v.x), float(v.y)] for v in B.vertices])
    N = np.array([[float(n[0]), float(n[1])] for n in _edge_normals(B)])
    cells = []
    for i, union in enumerate(family.regions):
        extra = family.normalization.get(i, [])
        cl = []
        for cell in union:
            hps = list(cell.halfplanes) + list(extra)
            A = np.array([[float(h.normal[0]), float(h.normal[1])] for h in hps])
            c = np.array([float(h.offset) for h in hps])
            cl.append((A, c))
        cells.append(cl)
    R = LATTICE_RADIUS
    zs = [(x, y) for x in range(-R, R + 1) for y in range(-R, R + 1) if (x, y) != tuple(family.interior_point)]
    Z = np.array(zs, dtype=float)
    outside = np.array([not contains(B, z) for z in zs])
    dirs = np.array([[d.a, d.b] for d in family.direction_set], dtype=float)
    return _Compiled(b, N, cells, Z, outside, dirs)


def evaluate_float(comp: _Compiled, S: np.ndarray):
    """Width over the direction set (−inf where infeasible) and vertex arrays.

    ``S`` has shape (n, m).  Absent vertices are replaced by the blocking
    vertex they would sit next to, which leaves widths unchanged.
    """
    S = np.asarray(S, dtype=float)
    n, m = S.shape
    Nprev = np.roll(comp.N, 1, axis=0)
    nrm = (1 - S)[..., None] * Nprev[None] + S[..., None] * comp.N[None]  # (n,m,2)
    c = np.einsum("nmk,mk->nm", nrm, comp.b)
    nrm2 = np.roll(nrm, -1, axis=1)
    c2 = np.roll(c, -1, axis=1)
    merged = (S == 1) & (np.roll(S, -1, axis=1) == 0)
    det = nrm[..., 0] * nrm2[..., 1] - nrm[..., 1] * nrm2[..., 0]
    ok = np.all((det > 1e-12) | merged, axis=1)
    safe = np.where(merged | (np.abs(det) < 1e-300), 1.0, det)
    px = (c * nrm2[..., 1] - c2 * nrm[..., 1]) / safe
    py = (nrm[..., 0] * c2 - nrm2[..., 0] * c) / safe
    P = np.stack([px, py], axis=-1)
    P = np.where(merged[..., None], comp.b[None], P)
    # endpoints of the edge through b_i
    Pm1 = np.roll(P, 1, axis=1)
    Pm2 = np.roll(P, 2, axis=1)
    Pp1 = np.roll(P, -1, axis=1)
    merged_prev = np.roll(merged, 1, axis=1)
    left = np.where(merged_prev[..., None], Pm2, Pm1)
    right = np.where(merged[..., None], Pp1, P)
    t = np.stack([-nrm[..., 1], nrm[..., 0]], axis=-1)
    dl = np.einsum("nmk,nmk->nm", left - comp.b[None], t)
    dr = np.einsum("nmk,nmk->nm", right - comp.b[None], t)
    ok &= np.all((dl < -FLOAT_EPS) & (dr > FLOAT_EPS), axis=1)
    # regions and search box
    for i in range(m):
        pin = np.zeros(n, dtype=bool)
        for A, cc in comp.cells[i]:
            pin |= np.all(P[:, i, :] @ A.T <= cc + FLOAT_EPS, axis=1)
        ok &= pin | merged[:, i]
    ok &= np.all((np.abs(P) <= VERTEX_BOX).all(axis=2) | merged, axis=1)
    # origin strictly inside
    ok &= np.all(c > FLOAT_EPS, axis=1)
    # no other interior lattice point; boundary lattice points outside B must be vertices
    slack = np.einsum("nmk,lk->nml", nrm, comp.Z) - c[..., None]
    mx = slack.max(axis=1)  # (n, L)
    ok &= np.all(mx >= -FLOAT_EPS, axis=1)
    on_bd = (np.abs(mx) <= FLOAT_EPS) & comp.Z_outside_B[None]
    if on_bd.any():
        d2 = ((P[:, :, None, :] - comp.Z[None, None]) ** 2).sum(-1)  # (n, m, L)
        d2 = np.where(merged[..., None], np.inf, d2)
        is_vertex = d2.min(axis=1) <= FLOAT_EPS**2
        ok &= ~np.any(on_bd & ~is_vertex, axis=1)
    proj = np.einsum("nmk,dk->ndm", P, comp.dirs)
    widths = (proj.max(axis=2) - proj.min(axis=2)).min(axis=1)
    return np.where(ok, widths, -np.inf), P


def boundary_gap(comp: _Compiled, s: np.ndarray) -> float:
    """Smallest distance from a blocking vertex to an endpoint of its edge of P.

    Values near 0 mean the parameter sits where a blocking point turns into
    a vertex of P, i.e. at the boundary of the family.
    """
    S = np.asarray(s, dtype=float)[None]
    _, P = evaluate_float(comp, S)
    P = P[0]
    m = len(comp.b)
    merged = [(S[0, i] == 1 and S[0, (i + 1) % m] == 0) for i in range(m)]
    gaps = []
    for i in range(m):
        left = P[(i - 2) % m] if merged[(i - 1) % m] else P[(i - 1) % m]
        right = P[(i + 1) % m] if merged[i] else P[i]
        gaps += [np.linalg.norm(left - comp.b[i]), np.linalg.norm(right - comp.b[i])]
    return float(min(gaps))


def _evaluate_chunked(comp, S, chunk=5000):
    out = np.empty(len(S))
    for k in range(0, len(S), chunk):
        out[k : k + chunk] = evaluate_float(comp, S[k : k + chunk])[0]
    return out


def grid_resolution(m: int, grid: int, budget: int = GRID_BUDGET) -> int:
    r = int(math.floor(budget ** (1.0 / m) + 1e-9))
    return max(2, min(grid, r))


def _grid_points(r: int, m: int) -> np.ndarray:
    axis = np.linspace(0.0, 1.0, r)
    mesh = np.meshgrid(*([axis] * m), indexing="ij")
    return np.stack([g.ravel() for g in mesh], axis=1)


# --------------------------------------------------------------------------
# Degeneration toward copies of 3Δ₂
# --------------------------------------------------------------------------

_T3 = ((-1, -1), (2, -1), (-1, 2))  # 3Δ₂ with its interior point at the origin


def _unimodular_matrices(bound: int = 2):
    rng = range(-bound, bound + 1)
    for a, b, c, d in itertools.product(rng, rng, rng, rng):
        if abs(a * d - b * c) == 1:
            yield (a, b, c, d)


def three_delta2_copies() -> List[np.ndarray]:
    seen = set()
    out = []
    for a, b, c, d in _unimodular_matrices():
        img = tuple(sorted((a * x + b * y, c * x + d * y) for x, y in _T3))
        if img not in seen:
            seen.add(img)
            out.append(np.array(img, dtype=float))
    return out


def _point_polygon_distance(p: np.ndarray, V: np.ndarray) -> float:
    hull = convex_hull([(Fraction(x).limit_denominator(10**9), Fraction(y).limit_denominator(10**9)) for x, y in V])
    W = np.array([[float(v.x), float(v.y)] for v in hull.vertices])
    if len(W) < 3:
        return float(np.min(np.linalg.norm(W - p, axis=1)))
    inside = True
    best = math.inf
    for i in range(len(W)):
        a, b = W[i], W[(i + 1) % len(W)]
        e = b - a
        if e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0]) < 0:
            inside = False
        t = np.clip(np.dot(p - a, e) / np.dot(e, e), 0, 1)
        best = min(best, float(np.linalg.norm(a + t * e - p)))
    return 0.0 if inside else best


def hausdorff(V1: np.ndarray, V2: np.ndarray) -> float:
    """Hausdorff distance of the convex hulls of two vertex arrays."""
    d12 = max(_point_polygon_distance(p, V2) for p in V1)
    d21 = max(_point_polygon_distance(p, V1) for p in V2)
    return max(d12, d21)


_HEX_ROUTES = {
    ((-2.0, -1.0), (1.0, -1.0), (1.0, 2.0)): "p2=(1,-1)",
    ((-1.0, -2.0), (-1.0, 1.0), (2.0, 1.0)): "p5=(-1,1)",
}


def degeneration(vertices: np.ndarray):
    """Distance to the nearest 3Δ₂ copy around the origin and that copy."""
    best, arg = math.inf, None
    for T in three_delta2_copies():
        d = hausdorff(vertices, T)
        if d < best:
            best, arg = d, T
    return best, arg


# --------------------------------------------------------------------------
# Verification
# --------------------------------------------------------------------------


def _refine(comp, starts: np.ndarray, widths: np.ndarray, h0: float, iters: int):
    X = starts.copy()
    W = widths.copy()
    H = np.full(len(X), h0)
    m = X.shape[1]
    for _ in range(iters):
        cand = np.repeat(X[:, None, :], 2 * m, axis=1)
        for j in range(m):
            cand[:, 2 * j, j] += H
            cand[:, 2 * j + 1, j] -= H
        cand = np.clip(cand, 0.0, 1.0)
        cw = _evaluate_chunked(comp, cand.reshape(-1, m)).reshape(len(X), 2 * m)
        k = np.argmax(cw, axis=1)
        bestw = cw[np.arange(len(X)), k]
        improve = bestw > W + 1e-15
        X[improve] = cand[np.arange(len(X)), k][improve]
        W[improve] = bestw[improve]
        H[~improve] /= 2
    return X, W


def _certify(family, candidates: Sequence[Sequence]) -> Optional[dict]:
    for params in candidates:
        P = instantiate(family, params)
        if P is None:
            continue
        w = width_over_set(P, family.direction_set)
        full = lattice_width(P)
        return {
            "parameters": [str(p) for p in params],
            "vertices": [[str(v.x), str(v.y)] for v in P.vertices],
            "width_over_directions": str(w.value),
            "lattice_width": str(full.value),
            "at_most_3": w.value <= 3,
        }
    return None


def verify_case(family: CaseFamily, grid: int = 64, refine_iters: int = 60, tol: float = 1e-6) -> VerificationReport:
    if grid < 8:
        raise GeometryError("BadParameters", "grid must be at least 8")
    if tol < 0:
        raise GeometryError("BadParameters", "tol must be non-negative")
    comp = _compile(family)
    m = family.n_params
    r = grid_resolution(m, grid)
    S = _grid_points(r, m)
    W = _evaluate_chunked(comp, S)
    feas = np.flatnonzero(np.isfinite(W))
    if len(feas) == 0:
        raise GeometryError("EmptyFamily", f"no feasible grid point for case {family.name}")
    # deterministic ordering: width descending, then parameters lexicographically
    order = feas[np.lexsort(tuple(S[feas][:, j] for j in reversed(range(m))) + (-W[feas],))]
    top = order[:100]
    X, WX = _refine(comp, S[top], W[top], 1.0 / (r - 1), refine_iters)
    j = np.lexsort(tuple(X[:, k] for k in reversed(range(m))) + (-WX,))[0]
    best_s, best_w = X[j], float(WX[j])
    if W[order[0]] >= best_w:
        best_s, best_w = S[order[0]], float(W[order[0]])
    snapped = [Fraction(float(x)).limit_denominator(SNAP_DENOMINATOR) for x in best_s]
    grid_cands = [[Fraction(int(round(x * (r - 1))), r - 1) for x in S[i]] for i in order[:200]]
    # points on the segment from the snapped optimum toward the best grid point
    g0 = grid_cands[0]
    toward = [[a + (b - a) / 2**k for a, b in zip(snapped, g0)] for k in range(40, 0, -1)]
    cert = _certify(family, [snapped] + toward + grid_cands)
    _, P = evaluate_float(comp, best_s[None])
    dist, T = degeneration(P[0])
    route = None
    if family.name == "hex" and dist < DEGENERATION_THRESHOLD and T is not None:
        route = _HEX_ROUTES.get(tuple(map(tuple, T.tolist())))
    passed = best_w <= 3 + tol and (cert is None or cert["at_most_3"])
    return VerificationReport(
        family.name,
        r,
        best_w,
        tuple(float(x) for x in best_s),
        cert,
        3 - best_w,
        bool(dist < DEGENERATION_THRESHOLD),
        float(dist),
        boundary_gap(comp, best_s),
        route,
        family.normalization_note,
        int(len(feas)),
        int(len(S)),
        tol,
        bool(passed and cert is not None),
    )


def _verify_named(args):
    name, grid, refine_iters, tol = args
    return verify_case(build_case(name), grid, refine_iters, tol)


def default_jobs() -> int:
    env = os.environ.get("LATWIDTH_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def verify_all(grid: int = 64, refine_iters: int = 60, tol: float = 1e-6, jobs: Optional[int] = None) -> List[VerificationReport]:
    """All eight cases; results are in the fixed order of ``CASE_NAMES`` for any ``jobs``."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    tasks = [(name, grid, refine_iters, tol) for name in CASE_NAMES]
    if jobs == 1:
        return [_verify_named(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
        return list(ex.map(_verify_named, tasks))


# --------------------------------------------------------------------------
# Sampling exact instances
# --------------------------------------------------------------------------


def sample_instances(family: CaseFamily, rng: random.Random, count: int, denominator: int = 24, max_batches: int = 200):
    """Up to ``count`` exact feasible circumscribers with parameters in (1/denominator)Z."""
    comp = _compile(family)
    m = family.n_params
    out = []
    for _ in range(max_batches):
        raw = [[rng.randint(0, denominator) for _ in range(m)] for _ in range(4000)]
        S = np.array(raw, dtype=float) / denominator
        W = _evaluate_chunked(comp, S)
        for row, w in zip(raw, W):
            if not np.isfinite(w):
                continue
            params = [Fraction(k, denominator) for k in row]
            P = instantiate(family, params)
            if P is not None:
                out.append((params, P))
                if len(out) >= count:
                    return out
    return out


# --------------------------------------------------------------------------
# Hexagon width sum
# --------------------------------------------------------------------------


def diagonal_line_identity(lam: Fraction) -> Fraction:
    """``p1_y + p6_x`` when the line through (−1,−1) with slope −λ meets y=x−1 and y=x+1."""
    n, c = (lam, Fraction(1)), -lam - 1  # λx + y = −λ − 1
    p1 = line_intersection(n, c, (Fraction(1), Fraction(-1)), Fraction(1))  # x − y = 1
    p6 = line_intersection(n, c, (Fraction(-1), Fraction(1)), Fraction(1))  # y − x = 1
    return p1.y + p6.x


def hexagon_width_sum_check(family: CaseFamily, samples: int = 1000, seed: int = 0) -> bool:
    if family.name != "hex":
        raise GeometryError("BadParameters", "width-sum check applies to the hexagon family")
    rng = random.Random(seed)
    for _, P in sample_instances(family, rng, samples):
        if width_in_direction(P, E1) + width_in_direction(P, E2) > 6:
            return False
    for _ in range(20):
        lam = Fraction(rng.randint(0, 1000), rng.randint(1, 100))
        if diagonal_line_identity(lam) != -3:
            return False
    return True


# --------------------------------------------------------------------------
# Terminal triangle algebra
# --------------------------------------------------------------------------


def _det3(r0, r1, r2):
    return (
        r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
        - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
    )


def terminal_constraints(x, y, u, v, t):
    """The three colinearity determinants of the terminal configuration."""
    p1, p2, p3 = (x, t, 1), (t, y, 1), (0, 0, 1)
    q1, q2, q3 = (u - 1, v - 1, 1), (u, v + 1, 1), (u + 1, v, 1)
    return (_det3(p1, q3, p2), _det3(p2, q1, p3), _det3(p3, q2, p1))


def elimination_polynomial(x, y):
    return x * x + x * y + y * y - 3 * x


def _newton(F, z0, iters=60, tol=1e-14):
    z = np.array(z0, dtype=float)
    for _ in range(iters):
        f = np.array(F(z))
        if not np.all(np.isfinite(f)):
            return None
        if np.max(np.abs(f)) < tol:
            return z
        J = np.empty((len(f), len(z)))
        for k in range(len(z)):
            h = 1e-7 * max(1.0, abs(z[k]))
            zp, zm = z.copy(), z.copy()
            zp[k] += h
            zm[k] -= h
            J[:, k] = (np.array(F(zp)) - np.array(F(zm))) / (2 * h)
        try:
            step = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError:
            return None
        z = z + step
        if np.max(np.abs(z)) > 1e6:
            return None
    f = np.array(F(z))
    return z if np.max(np.abs(f)) < 1e-11 else None


def terminal_solutions(samples: int, seed: int = 0, max_starts: int = 100000):
    """Newton solutions (x, y, u, v, t) of the constraint system with t = x + y.

    ``x`` is fixed at a random value in (0, 4); the square system in
    ``(y, u, v, t)`` is solved from random starts in the parameter box.
    """
    rng = np.random.default_rng(seed)
    sols = []
    for _ in range(max_starts):
        if len(sols) >= samples:
            break
        x = float(rng.uniform(0.05, 3.95))

        def F(z, x=x):
            y, u, v, t = z
            return (*terminal_constraints(x, y, u, v, t), t - x - y)

        z = _newton(F, rng.uniform(-3, 3, size=4))
        if z is not None:
            sols.append((x, *z))
    return sols


def ellipse_max_check() -> bool:
    """Exact maximization of x + y on {g = 0}: the maximum is 3, attained only at (3, 0)."""
    import sympy as sp

    x, y, z, s, m = sp.symbols("x y z s m", real=True)
    g = elimination_polynomial(x, y)
    # g in the rotated coordinates z = x + y, s = x − y
    gz = sp.expand(4 * g.subs({x: (z + s) / 2, y: (z - s) / 2}))
    if sp.expand(gz - (3 * (z - 1) ** 2 + (s - 3) ** 2 - 12)) != 0:
        return False
    # rational parametrization of the ellipse (z−1)²/4 + (s−3)²/12 = 1
    zp = 1 + 2 * (1 - m**2) / (1 + m**2)
    sp_ = 3 + 2 * sp.sqrt(3) * 2 * m / (1 + m**2)
    if sp.simplify(gz.subs({z: zp, s: sp_})) != 0:
        return False
    # z − 3 = −4m²/(1+m²) ≤ 0 with equality iff m = 0 (the point at infinity gives z = −1)
    if sp.simplify(zp - 3 + 4 * m**2 / (1 + m**2)) != 0:
        return False
    at0 = (zp.subs(m, 0), sp_.subs(m, 0))
    return at0 == (3, 3) and ((at0[0] + at0[1]) / 2, (at0[0] - at0[1]) / 2) == (3, 0)


def terminal_elimination_check(samples: int = 50, tol: float = 1e-9, seed: int = 0) -> bool:
    sols = terminal_solutions(samples, seed)
    if not sols:
        raise GeometryError("NoSolutionsFound", "Newton iteration diverged from every start")
    for x, y, u, v, t in sols:
        if abs(elimination_polynomial(x, y)) > tol or x + y > 3 + tol:
            return False
    return len(sols) >= samples and ellipse_max_check()


def terminal_configuration(x, y, t):
    """Solve the (linear) colinearity system for (u, v) and return the triangle.

    Returns ``(u, v, P)`` with ``P = conv{(x,t), (t,y), (0,0)}``.
    """
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    # each f_i is affine in (u, v); recover coefficients exactly
    f00 = terminal_constraints(x, y, Fraction(0), Fraction(0), t)
    f10 = terminal_constraints(x, y, Fraction(1), Fraction(0), t)
    f01 = terminal_constraints(x, y, Fraction(0), Fraction(1), t)
    rows = [(f10[i] - f00[i], f01[i] - f00[i], -f00[i]) for i in range(3)]
    sol = None
    for i, j in itertools.combinations(range(3), 2):
        a, b, e = rows[i]
        c, d, f = rows[j]
        D = a * d - b * c
        if D != 0:
            sol = ((e * d - b * f) / D, (a * f - e * c) / D)
            break
    if sol is None:
        raise GeometryError("NoSolutionsFound", "colinearity system is singular")
    u, v = sol
    if any(fi != 0 for fi in terminal_constraints(x, y, u, v, t)):
        raise GeometryError("NoSolutionsFound", "colinearity system is inconsistent")
    return u, v, convex_hull([(x, t), (t, y), (0, 0)])


def gradient_matrix(x, y, u, v, t):
    """Exact 5×3 Jacobian (rows x, y, u, v, t; columns f1, f2, f3).

    Each f_i has degree ≤ 2 in every single variable, so the central
    difference with step 1 is exact.
    """
    point = [Fraction(a) for a in (x, y, u, v, t)]
    rows = []
    for k in range(5):
        zp, zm = list(point), list(point)
        zp[k] += 1
        zm[k] -= 1
        fp, fm = terminal_constraints(*zp), terminal_constraints(*zm)
        rows.append([(fp[i] - fm[i]) / 2 for i in range(3)])
    return rows


def lagrange_minor(x, y, u, v, t) -> Fraction:
    G = gradient_matrix(x, y, u, v, t)
    return _det3(G[0], G[2], G[3])  # rows x, u, v


def lagrange_regularity_check(samples: int = 1000, seed: int = 0) -> bool:
    rng = random.Random(seed)

    def r(lo, hi):
        den = rng.randint(1, 50)
        return Fraction(rng.randint(lo * den, hi * den), den)

    for _ in range(samples):
        x, y, u, v, t = (r(-5, 5) for _ in range(5))
        if lagrange_minor(x, y, u, v, t) != (y + 1) * (t * t - x * y):
            return False
        # positivity on the interior: 0 < x, y < t
        t = r(1, 5)
        x = t * Fraction(rng.randint(1, 99), 100)
        y = t * Fraction(rng.randint(1, 99), 100)
        if lagrange_minor(x, y, u, v, t) <= 0:
            return False
    return True


# --------------------------------------------------------------------------
# Algebraic identities used by the trapezoid, empty-triangle and kite cases
# --------------------------------------------------------------------------


def _rand_frac(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 1000) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randint(0, den), den)


def trapezoid_identity_check(samples: int = 1000, seed: int = 0) -> bool:
    """``f + 3`` equals its two-fraction decomposition on a ∈ [−1,0], b ∈ [1,2]."""
    rng = random.Random(seed)
    checked = 0
    while checked < samples:
        a = _rand_frac(rng, Fraction(-1), Fraction(0))
        b = _rand_frac(rng, Fraction(1), Fraction(2))
        D1 = a * b - 3 * a - b - 1
        D2 = a * b - 3 * a + (b - 1) ** 2
        if D1 == 0 or D2 == 0:
            continue
        p = a * a * b - 3 * a * a + a * b * b - 4 * a * b + 3 * a - b * b + b
        f = -2 * (b - 1) * p / (D1 * D2)
        rhs = -2 * a / D2 - (-a * b + 5 * a + b + 3) / D1
        if f + 3 != rhs:
            return False
        checked += 1
    return True


def hyperbola_poly(a, b):
    return -a * a + a * b - 3 * a + b * b + 2 * b - 2


def hyperbola_check(samples: int = 1000, seed: int = 0) -> bool:
    """Positivity on b ∈ [−1,0], 2b−1 ≤ a ≤ b−1 away from the corners, plus edge identities."""
    rng = random.Random(seed)
    corners = {(Fraction(-3), Fraction(-1)), (Fraction(-1), Fraction(0))}
    checked = 0
    while checked < samples:
        b = _rand_frac(rng, Fraction(-1), Fraction(0))
        a = _rand_frac(rng, 2 * b - 1, b - 1)
        if (a, b) in corners:
            continue
        if hyperbola_poly(a, b) <= 0:
            return False
        if hyperbola_poly(b - 1, b) != b * b or hyperbola_poly(2 * b - 1, b) != -(b + 1) * b:
            return False
        checked += 1
    return True


def kite_D(a, b):
    return a * (a - 1) - (a - 2) * (b + 1)


def kite_E(x, y):
    return x * x * y - 7 * x * y * y + 12 * y**3 - 2 * x * x + 13 * x * y - 19 * y * y + 5 * x - 18 * y - 5


def kite_width_e2(a, b, c):
    """Vertical width of the kite configuration parametrized by p2 = (a, b), p4 = (a−3, c)."""
    return b - (-1 - (b + 1) * (c + 1) / (a * (c + 1) - (a - 2) * (b + 1)))


def kite_samples(rng: random.Random, samples: int):
    """Rational (a, b, c) with a+3b < 5, −a+2b ≤ 1, b ≥ 1, −1 ≤ c ≤ a−2."""
    out = []
    while len(out) < samples:
        b = _rand_frac(rng, Fraction(1), Fraction(6, 5))
        a = _rand_frac(rng, 2 * b - 1, 5 - 3 * b)
        if not (a + 3 * b < 5 and -a + 2 * b <= 1) or a - 2 < -1:
            continue
        c = _rand_frac(rng, Fraction(-1), a - 2)
        out.append((a, b, c))
    return out


class KiteAlgebraResult(NamedTuple):
    denominator_positive: bool  # D > 0 at every sample
    denominator_at_least_3: bool  # the stronger lower bound D ≥ 3
    min_denominator: Fraction
    numerator_matches_E: bool  # (b−2)D + (b+1)(a−1) == E(a+3b, b)
    numerator_negative: bool
    width_below_3: bool
    boundary_identity: bool  # E(5, y) = 12 (y − 5/2)(y − 1)²


def kite_algebra_check(samples: int = 1000, seed: int = 0) -> KiteAlgebraResult:
    rng = random.Random(seed)
    pts = kite_samples(rng, samples)
    Ds = [kite_D(a, b) for a, b, _ in pts]
    num_ok = all((b - 2) * kite_D(a, b) + (b + 1) * (a - 1) == kite_E(a + 3 * b, b) for a, b, _ in pts)
    neg = all(kite_E(a + 3 * b, b) < 0 for a, b, _ in pts)
    width_ok = all(kite_width_e2(a, b, c) < 3 for a, b, c in pts)
    ident = all(
        kite_E(Fraction(5), y) == 12 * (y - Fraction(5, 2)) * (y - 1) ** 2
        for y in (Fraction(k, 7) for k in range(-20, 21))
    )
    return KiteAlgebraResult(all(d > 0 for d in Ds), all(d >= 3 for d in Ds), min(Ds), num_ok, neg, width_ok, ident)
