"""Reference data: classified blocking polygons, per-case vertex regions and
the catalog of extremal bodies.

Every case is described with the blocking polygon's vertices ``b_0..b_{m-1}``
in counterclockwise order; edge ``i`` runs from ``b_i`` to ``b_{i+1}`` and the
circumscriber vertex beyond that edge must lie in ``regions[i]`` (a union of
convex cells).  All cases use the interior lattice point ``(0, 0)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Dict, List, NamedTuple, Tuple

from .geom import (
    DIRECTION_SET_A,
    Direction,
    GeometryError,
    HalfPlane,
    LatticePolygon,
    P,
    polygon,
)
from .maximality import Region, region_from_polygon


def hp(a, b, c, strict=False) -> HalfPlane:
    """The half-plane ``a x + b y <= c``."""
    return HalfPlane((Fraction(a), Fraction(b)), Fraction(c), strict)


def tri(*pts) -> Region:
    return region_from_polygon(polygon(*pts))


class CaseData(NamedTuple):
    name: str
    blocking_vertices: Tuple[Tuple[int, int], ...]
    regions: Tuple[Tuple[Region, ...], ...]  # one union of cells per edge
    labels: Tuple[str, ...]  # naming of each edge's region in the case analysis
    normalization: str  # human-readable description of the symmetry reduction
    directions: Tuple[Direction, ...] = DIRECTION_SET_A

    @property
    def blocking_polygon(self) -> LatticePolygon:
        return LatticePolygon([P(*v) for v in self.blocking_vertices])


CASE_NAMES = ("empty-triangle", "pyr", "trap", "term", "kite", "cross", "pent", "hex")
CASE_ALIASES = {"st": "empty-triangle"}


def _cases() -> Dict[str, CaseData]:
    c: Dict[str, CaseData] = {}
    c["hex"] = CaseData(
        "hex",
        ((-1, -1), (0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)),
        (
            (tri((-1, -1), (-1, -2), (0, -1)),),
            (tri((0, -1), (1, -1), (1, 0)),),
            (tri((1, 0), (2, 1), (1, 1)),),
            (tri((1, 1), (1, 2), (0, 1)),),
            (tri((0, 1), (-1, 1), (-1, 0)),),
            (tri((-1, 0), (-2, -1), (-1, -1)),),
        ),
        ("S1", "S2", "S3", "S4", "S5", "S6"),
        "none",
    )
    c["pent"] = CaseData(
        "pent",
        ((-1, -1), (0, -1), (1, 0), (0, 1), (-1, 0)),
        (
            (tri((-1, -1), (-1, -2), (0, -1)),),
            (tri((0, -1), (2, -1), (1, 0)),),
            (tri((1, 0), (2, 1), (0, 1)), tri((1, 0), (1, 2), (0, 1))),
            (tri((0, 1), (-1, 2), (-1, 0)),),
            (tri((-1, 0), (-2, -1), (-1, -1)),),
        ),
        ("S1", "S2", "S3", "S4", "S5"),
        "reflection in y=x: vertex beyond edge (1,0)-(0,1) taken with x <= 1",
    )
    c["cross"] = CaseData(
        "cross",
        ((1, 0), (0, 1), (-1, 0), (0, -1)),
        (
            (tri((1, 0), (2, 1), (0, 1)), tri((1, 0), (1, 2), (0, 1))),
            (tri((0, 1), (-1, 2), (-1, 0)), tri((0, 1), (-2, 1), (-1, 0))),
            (tri((-1, 0), (-2, -1), (0, -1)), tri((-1, 0), (-1, -2), (0, -1))),
            (tri((0, -1), (1, -2), (1, 0)), tri((0, -1), (2, -1), (1, 0))),
        ),
        ("S1", "S2", "S3", "S4"),
        "none",
    )
    c["pyr"] = CaseData(
        "pyr",
        ((-1, 0), (1, 0), (0, 1)),
        (
            (tri((1, 0), (3, -2), (1, -1)),),
            (tri((0, 1), (1, 1), (1, 2)),),
            (Region((hp(0, 1, 1), hp(0, -1, 1), hp(1, 2, -1))),),
        ),
        ("S3", "S1", "S2"),
        "none",
    )
    c["kite"] = CaseData(
        "kite",
        ((-1, -1), (0, -1), (1, 1), (-1, 0)),
        (
            (tri((-1, -1), (-1, -3), (0, -1)),),
            (tri((0, -1), (1, -1), (1, 1)), tri((0, -1), (3, 2), (1, 1))),
            (tri((1, 1), (2, 3), (-1, 0)), tri((1, 1), (-1, 1), (-1, 0))),
            (tri((-1, 0), (-3, -1), (-1, -1)),),
        ),
        ("S1", "S2", "S3", "S4"),
        "none",
    )
    c["trap"] = CaseData(
        "trap",
        ((-1, 0), (1, 0), (0, 1), (-1, 1)),
        (
            (
                tri((-1, 0), (-1, -2), (1, 0)),
                tri((-1, 0), (1, -2), (1, 0)),
                tri((-1, 0), (4, -2), (1, 0)),
            ),
            (Region((hp(0, -1, 0), hp(0, 1, 1), hp(-1, -1, -2))),),
            (tri((-1, 1), (-1, 2), (0, 1)),),
            (Region((hp(1, 0, 0), hp(0, -1, 0), hp(0, 1, 1))),),
        ),
        ("S1", "S2", "S3", "S4"),
        "none",
    )
    c["empty-triangle"] = CaseData(
        "empty-triangle",
        ((-1, -1), (0, -1), (-1, 0)),
        (
            (Region((hp(-1, 0, 1), hp(1, 0, 0), hp(-2, 1, 0))),),
            (tri((0, 0), (1, 1), (2, 3), (1, 2)),),
            (Region((hp(0, -1, 1), hp(0, 1, 0), hp(1, -1, -1))),),
        ),
        ("S1", "S2", "S3"),
        "reflection in y=x: vertex beyond edge (0,-1)-(-1,0) taken with y >= x",
    )
    c["term"] = CaseData(
        "term",
        ((-1, -1), (1, 0), (0, 1)),
        (
            (tri((1, -1), (2, -1), (1, 0)),),
            (tri((1, 2), (1, 3), (0, 1)),),
            (tri((-2, -1), (-3, -2), (-1, -1)),),
        ),
        ("S2", "S3", "S1"),
        "reflection in y=x: vertex beyond edge (1,0)-(0,1) taken with y >= x",
    )
    return c


CASES: Dict[str, CaseData] = _cases()


def case_data(name: str) -> CaseData:
    key = CASE_ALIASES.get(name, name)
    if key not in CASES:
        raise GeometryError("UnknownCase", f"unknown case {name!r}; expected one of {', '.join(CASE_NAMES)}")
    return CASES[key]


# Symmetry reductions, keyed by (blocking polygon, edge endpoints).  Stored by
# endpoints rather than edge index so that any vertex rotation of B works.
_NORMALIZATIONS: Dict[str, Dict[Tuple[Tuple[int, int], Tuple[int, int]], List[HalfPlane]]] = {
    "pent": {((1, 0), (0, 1)): [hp(1, 0, 1)]},
    "empty-triangle": {((0, -1), (-1, 0)): [hp(1, -1, 0)]},
    "term": {((1, 0), (0, 1)): [hp(1, -1, 0)]},
}


def classify_blocking_polygon(B: LatticePolygon):
    """Name of the case whose blocking polygon equals ``B`` exactly, else None."""
    for name, data in CASES.items():
        if data.blocking_polygon == B:
            return name
    return None


def normalization_for(B: LatticePolygon) -> Dict[int, List[HalfPlane]]:
    """Extra half-planes per edge index of ``B`` implementing the symmetry reduction."""
    name = classify_blocking_polygon(B)
    if name is None or name not in _NORMALIZATIONS:
        return {}
    out: Dict[int, List[HalfPlane]] = {}
    for i, (a, b) in enumerate(B.edges()):
        key = ((int(a.x), int(a.y)), (int(b.x), int(b.y)))
        if key in _NORMALIZATIONS[name]:
            out[i] = list(_NORMALIZATIONS[name][key])
    return out


# --------------------------------------------------------------------------
# Extremal bodies
# --------------------------------------------------------------------------

THREE_DELTA2 = polygon((0, 0), (3, 0), (0, 3))
T0 = polygon((-1, -1), (0, 1), (1, 0))
# (5/3) T0 + (1/3) e1
FLT22_MAXIMIZER = polygon(("-4/3", "-5/3"), ("1/3", "5/3"), (2, 0))
HEXAGON_H = polygon((2, 1), (-2, -1), (1, 2), (-1, -2), (-1, 1), (1, -1))
TRIANGLE_C14 = polygon((-1, -1), (-1, 2), (2, -1))
REMARK_QUAD = polygon(("3/2", "1/2"), ("1/2", "3/2"), ("-1/2", "1/2"), ("1/2", "-1/2"))

EXTREMIZERS: Dict[str, LatticePolygon] = {
    "3delta2": THREE_DELTA2,
    "flt22_maximizer": FLT22_MAXIMIZER,
    "t0": T0,
    "hexagon_h": HEXAGON_H,
    "triangle_c14": TRIANGLE_C14,
    "remark_quad": REMARK_QUAD,
}


def load_bundled(name: str) -> LatticePolygon:
    """Read one of the polygon JSON files shipped in ``latwidth/data``."""
    from .io import polygon_from_json

    text = resources.files("latwidth").joinpath("data", f"{name}.json").read_text()
    return polygon_from_json(json.loads(text))
