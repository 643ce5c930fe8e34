"""Blocking points, k-maximality and the vertex-region machinery.

A *blocking point* of a polygon is a lattice point in the relative interior
of one of its edges.  A polygon with exactly k interior lattice points is
inclusion-maximal among such sets iff every edge carries a blocking point.

The regions used to locate circumscriber vertices are convex cells described
by half-planes, each of which may be strict (open) or closed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .geom import (
    GeometryError,
    HalfPlane,
    LatticePolygon,
    Point,
    Q,
    clip_polygon,
    box_vertices,
    contains,
    convex_hull,
    cross,
    halfplane_description,
    integer_points_on_line,
    intersect_halfplanes,
    lattice_points,
)

# Forbidden cones are collected from lattice points q with |q_x|, |q_y| <= this
# radius (a 7x7 box around the origin).
FORBIDDEN_BOX_RADIUS = 3
# Regions are materialized inside this square when vertices are needed.
REGION_CLIP_RADIUS = 64


class BlockingData(NamedTuple):
    per_edge: Dict[int, List[Tuple[int, int]]]
    blocking_polygon: Optional[LatticePolygon]  # None when there are no blocking points


# --------------------------------------------------------------------------
# Blocking points and k-maximality
# --------------------------------------------------------------------------


def edge_relint_lattice_points(a: Point, b: Point) -> List[Tuple[int, int]]:
    """Lattice points strictly between ``a`` and ``b`` on the segment."""
    from .geom import primitive_normal

    nx, ny = primitive_normal(b.y - a.y, a.x - b.x)
    offset = nx * a.x + ny * a.y
    if offset.denominator != 1:
        return []
    line = integer_points_on_line((nx, ny), int(offset))
    if line is None:
        return []
    (zx, zy), (dx, dy) = line
    dd = dx * dx + dy * dy
    ta = ((a.x - zx) * dx + (a.y - zy) * dy) / dd
    tb = ((b.x - zx) * dx + (b.y - zy) * dy) / dd
    lo, hi = min(ta, tb), max(ta, tb)
    ks = range(math.floor(lo) + 1, math.ceil(hi))
    return sorted((zx + k * dx, zy + k * dy) for k in ks)


def blocking_data(poly: LatticePolygon) -> BlockingData:
    """Blocking points per edge (edge i runs from vertex i to vertex i+1) and their hull."""
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "blocking points need a 2D polygon")
    per_edge = {i: edge_relint_lattice_points(a, b) for i, (a, b) in enumerate(poly.edges())}
    pts = [p for lst in per_edge.values() for p in lst]
    return BlockingData(per_edge, convex_hull(pts) if pts else None)


def is_k_maximal(poly: LatticePolygon, k: int) -> bool:
    """True iff ``poly`` has exactly k interior lattice points and every edge is blocked."""
    if poly.dim < 2:
        return False
    if len(lattice_points(poly, interior_only=True)) != k:
        return False
    return all(blocking_data(poly).per_edge.values())


def _edge_on_line(poly: LatticePolygon, h: HalfPlane):
    for a, b in poly.edges():
        if h.value(a) == 0 and h.value(b) == 0:
            return a, b
    return None


def k_maximal_extension(poly: LatticePolygon, step=1, cap=16) -> LatticePolygon:
    """Push unblocked edges outward until every edge is blocked.

    Lattice points only appear on integer levels ``<a, x> = c`` of an edge's
    primitive normal ``a``, so each unblocked edge is translated through the
    integer levels above its current offset (``step`` levels at a time) until
    its new edge contains a lattice point in its relative interior.  A level
    that creates an extra interior lattice point, or exceeding ``cap`` in
    offset, raises ``ExtensionFailed``.  The result contains the input and is
    k-maximal for ``k = G°(poly)``; it is one extension, not a canonical one.
    """
    step, cap = Q(step), Q(cap)
    if step <= 0 or cap <= 0:
        raise GeometryError("InvalidParameter", "step and cap must be positive")
    if poly.dim < 2:
        raise GeometryError("DegeneratePolygon", "extension needs a 2D polygon")
    k = len(lattice_points(poly, interior_only=True))
    hps = list(halfplane_description(poly))
    current = poly
    for j in range(len(hps)):
        edge = _edge_on_line(current, hps[j])
        if edge is not None and edge_relint_lattice_points(*edge):
            continue
        base = hps[j].offset
        level = math.floor(base) + 1
        accepted = False
        while level - base <= cap:
            trial = hps[:j] + [hps[j]._replace(offset=Fraction(level))] + hps[j + 1:]
            cand = intersect_halfplanes(trial)
            if len(lattice_points(cand, interior_only=True)) != k:
                break
            edge = _edge_on_line(cand, trial[j])
            if edge is not None and edge_relint_lattice_points(*edge):
                hps, current, accepted = trial, cand, True
                break
            level = math.ceil(level + step) if step.denominator != 1 or step > 1 else level + 1
        if not accepted:
            raise GeometryError("ExtensionFailed", f"edge {j} cannot be blocked by translation within cap {cap}")
    return current


# --------------------------------------------------------------------------
# Regions
# --------------------------------------------------------------------------


class Region(NamedTuple):
    """A convex cell: the intersection of (possibly strict) half-planes."""

    halfplanes: Tuple[HalfPlane, ...]

    @property
    def open_flags(self) -> Tuple[bool, ...]:
        return tuple(h.strict for h in self.halfplanes)

    def contains(self, p) -> bool:
        p = (Q(p[0]), Q(p[1]))
        return all(h.contains(p) for h in self.halfplanes)

    def contains_closure(self, p) -> bool:
        p = (Q(p[0]), Q(p[1]))
        return all(h.value(p) <= 0 for h in self.halfplanes)

    def closure_vertices(self, radius=REGION_CLIP_RADIUS) -> list:
        verts = box_vertices(radius)
        for h in self.halfplanes:
            verts = clip_polygon(verts, h)
            if not verts:
                return []
        return verts

    def closure_polygon(self, radius=REGION_CLIP_RADIUS) -> Optional[LatticePolygon]:
        verts = self.closure_vertices(radius)
        return convex_hull(verts) if verts else None

    def is_bounded(self) -> bool:
        verts = self.closure_vertices()
        return bool(verts) and all(abs(v.x) < REGION_CLIP_RADIUS and abs(v.y) < REGION_CLIP_RADIUS for v in verts)

    def has_interior(self) -> bool:
        poly = self.closure_polygon()
        return poly is not None and poly.dim == 2

    def intersect(self, other: "Region") -> "Region":
        return Region(self.halfplanes + other.halfplanes)


def region_from_polygon(poly: LatticePolygon) -> Region:
    return Region(tuple(halfplane_description(poly)))


def region_union_contains(cells: Sequence[Region], p) -> bool:
    return any(c.contains(p) for c in cells)


def region_union_contains_closure(cells: Sequence[Region], p) -> bool:
    return any(c.contains_closure(p) for c in cells)


def shard(B: LatticePolygon, edge_index: int) -> Region:
    """``B`` with the inequality of edge ``edge_index`` reversed."""
    hps = halfplane_description(B)
    if not 0 <= edge_index < len(hps):
        raise GeometryError("BadEdgeIndex", f"edge index {edge_index} out of range")
    flipped = hps[edge_index].complement().closed()
    return Region(tuple(flipped if i == edge_index else h for i, h in enumerate(hps)))


def face_cone(x0, edge: Tuple) -> Region:
    """``pos(e - x0) + x0`` as two closed half-planes through ``x0``.

    ``edge`` is ``(a, b)`` listed counterclockwise as seen from ``x0``.
    """
    x0 = Point(Q(x0[0]), Q(x0[1]))
    a = Point(Q(edge[0][0]), Q(edge[0][1]))
    b = Point(Q(edge[1][0]), Q(edge[1][1]))
    turn = cross(x0, a, b)
    if turn == 0:
        raise GeometryError("ApexOnEdge", "apex lies on the line of the edge")
    if turn < 0:
        a, b = b, a
    da, db = a - x0, b - x0
    h1 = HalfPlane((da.y, -da.x), da.y * x0.x - da.x * x0.y)
    h2 = HalfPlane((-db.y, db.x), -db.y * x0.x + db.x * x0.y)
    return Region((h1, h2))


def _extreme_rays(vectors):
    """The two bounding rays (r1, r2) of pos(vectors), going CCW from r1 to r2."""
    r1 = next(v for v in vectors if all(v[0] * w[1] - v[1] * w[0] >= 0 for w in vectors))
    r2 = next(v for v in vectors if all(w[0] * v[1] - w[1] * v[0] >= 0 for w in vectors))
    return r1, r2


def forbidden_cone(B: LatticePolygon, q) -> Region:
    """The open cone ``sigma_q = q - int(pos(B - q))``."""
    q = Point(Q(q[0]), Q(q[1]))
    if B.dim < 2:
        raise GeometryError("DegeneratePolygon", "forbidden cones need a 2D blocking polygon")
    if contains(B, q, strict=True):
        raise GeometryError("ApexInsideBody", "cone apex lies in the interior of B")
    vecs = [v - q for v in B.vertices if v != q]
    r1, r2 = _extreme_rays(vecs)
    c1 = r1[0] * q.y - r1[1] * q.x
    c2 = q.x * r2[1] - q.y * r2[0]
    h1 = HalfPlane((-r1[1], r1[0]), c1, True)
    h2 = HalfPlane((r2[1], -r2[0]), c2, True)
    return Region((h1, h2))


def subtract_open_cell(cell: Region, cone: Region) -> List[Region]:
    """Convex cells covering ``cell \\ cone`` (zero-area pieces are dropped)."""
    if not Region(cell.halfplanes + tuple(h.closed() for h in cone.halfplanes)).has_interior():
        return [cell]  # the cone misses the cell (up to a null set)
    out = []
    kept: Tuple[HalfPlane, ...] = ()
    for h in cone.halfplanes:
        piece = Region(cell.halfplanes + kept + (h.complement(),))
        if piece.has_interior():
            out.append(piece)
        kept = kept + (h,)
        if not Region(cell.halfplanes + kept).has_interior():
            break
    return out


def vertex_regions(
    B: LatticePolygon,
    interior_point=(0, 0),
    reflections: bool = False,
    box_radius: int = FORBIDDEN_BOX_RADIUS,
    colinearity: bool = False,
) -> List[List[Region]]:
    """Per-edge admissible cells: ``S_e`` minus the forbidden cones.

    Cones are taken for every lattice q in ``[-box_radius, box_radius]²``
    other than ``interior_point`` and interior points of B.  With
    ``reflections`` set, the reflection normalization recorded for a
    classified blocking polygon (see :mod:`latwidth.catalog`) is applied.
    With ``colinearity`` set, regions are further cut by
    :func:`propagate_colinearity`.
    """
    from .catalog import normalization_for

    ip = (Q(interior_point[0]), Q(interior_point[1]))
    cones = []
    for x in range(-box_radius, box_radius + 1):
        for y in range(-box_radius, box_radius + 1):
            if (x, y) == ip or contains(B, (x, y), strict=True):
                continue
            cones.append(forbidden_cone(B, (x, y)))
    extra = normalization_for(B) if reflections else {}
    result = []
    for j in range(len(B.vertices)):
        cells = [shard(B, j)]
        if j in extra:
            cells = [c.intersect(Region(tuple(extra[j]))) for c in cells]
        for cone in cones:
            new = []
            for c in cells:
                new.extend(subtract_open_cell(c, cone))
            cells = new
        result.append(cells)
    if colinearity:
        result = propagate_colinearity(B, result)
    return result


def projection_cone(apex, cells: Sequence[Region]) -> Optional[Region]:
    """Closed cone ``apex + pos(apex - conv(cells))``: it contains every point
    on the far side of ``apex`` along a line through a point of the cells.
    None if a cell is unbounded or the hull surrounds the apex."""
    pts = []
    for c in cells:
        if not c.is_bounded():
            return None
        pts.extend(c.closure_vertices())
    if not pts:
        return None
    hull = convex_hull(pts)
    a = Point(Q(apex[0]), Q(apex[1]))
    if hull.dim < 2 or contains(hull, a, strict=True):
        return None
    vecs = [a - v for v in hull.vertices if v != a]
    r1, r2 = _extreme_rays(vecs)
    if r1[0] * r2[1] - r1[1] * r2[0] <= 0:
        return None  # the apex is on the hull boundary with a straight angle
    h1 = HalfPlane((r1[1], -r1[0]), r1[1] * a.x - r1[0] * a.y)
    h2 = HalfPlane((-r2[1], r2[0]), -r2[1] * a.x + r2[0] * a.y)
    return Region((h1, h2))


def propagate_colinearity(B: LatticePolygon, regions: List[List[Region]], rounds: int = 3) -> List[List[Region]]:
    """Tighten per-edge regions with the colinearity of consecutive vertices.

    Vertices beyond edges ``j-1`` and ``j`` of B lie on one line through the
    shared vertex ``b_j``, on opposite sides of it.  Each region is therefore
    cut down to the projection cone of its neighbour through ``b_j``, and vice
    versa, for a fixed number of rounds.  The cone over the neighbour's hull
    is a superset, so the result still contains every admissible vertex.
    """
    m = len(B.vertices)
    regions = [list(r) for r in regions]

    def cut(cells, source, apex):
        cone = projection_cone(apex, source)
        if cone is None:
            return cells
        return [piece for piece in (c.intersect(cone) for c in cells) if piece.has_interior()]

    for _ in range(rounds):
        for j in range(m):
            b = B.vertices[j]
            regions[j] = cut(regions[j], regions[j - 1], b)
            regions[j - 1] = cut(regions[j - 1], regions[j], b)
    return regions


def cells_area(cells: Sequence[Region]) -> Fraction:
    """Total area of a list of cells with pairwise disjoint interiors."""
    from .geom import area

    return sum((area(c.closure_polygon()) for c in cells if c.closure_polygon() is not None), Fraction(0))
