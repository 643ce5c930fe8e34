"""JSON encoding of polygons, regions and rationals.

Rationals are always written as strings (``"3"``, ``"-5/3"``) so reports are
exact and diff-able.  Polygon documents look like
``{"vertices": [["0","0"], ["3","0"], ["0","3"]]}``; plain numbers are
accepted on input as long as they are integers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .geom import GeometryError, LatticePolygon, convex_hull
from .maximality import Region
from .geom import HalfPlane


def rat(value) -> str:
    return str(Fraction(value))


def parse_rational(value, field: str) -> Fraction:
    if isinstance(value, bool):
        raise GeometryError("MalformedInput", f"{field}: expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise GeometryError("MalformedInput", f"{field}: non-integer numbers must be given as 'p/q' strings")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GeometryError("MalformedInput", f"{field}: cannot parse {value!r} as a rational") from None
    raise GeometryError("MalformedInput", f"{field}: expected a rational, got {type(value).__name__}")


def polygon_to_json(poly: LatticePolygon) -> dict:
    return {"vertices": [[rat(v.x), rat(v.y)] for v in poly.vertices]}


def polygon_from_json(doc: Any) -> LatticePolygon:
    """Parse a polygon document; the hull of the listed points is returned."""
    if isinstance(doc, list):
        pts_doc = doc
    elif isinstance(doc, dict) and "vertices" in doc:
        pts_doc = doc["vertices"]
    else:
        raise GeometryError("MalformedInput", "vertices: missing field (expected {'vertices': [[x, y], ...]})")
    if not isinstance(pts_doc, list) or not pts_doc:
        raise GeometryError("MalformedInput", "vertices: expected a non-empty list of [x, y] pairs")
    pts = []
    for i, p in enumerate(pts_doc):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise GeometryError("MalformedInput", f"vertices[{i}]: expected a pair [x, y]")
        pts.append((parse_rational(p[0], f"vertices[{i}][0]"), parse_rational(p[1], f"vertices[{i}][1]")))
    return convex_hull(pts)


def halfplane_to_json(h: HalfPlane) -> dict:
    return {"normal": [rat(h.normal[0]), rat(h.normal[1])], "offset": rat(h.offset), "strict": bool(h.strict)}


def region_to_json(cells: Sequence[Region]) -> dict:
    return {"cells": [{"halfplanes": [halfplane_to_json(h) for h in c.halfplanes]} for c in cells]}


def region_from_json(doc: Any) -> list:
    if not isinstance(doc, dict) or not isinstance(doc.get("cells"), list):
        raise GeometryError("MalformedInput", "cells: missing list")
    out = []
    for i, cell in enumerate(doc["cells"]):
        hps = []
        for j, h in enumerate(cell.get("halfplanes", [])):
            f = f"cells[{i}].halfplanes[{j}]"
            n = h.get("normal")
            if not isinstance(n, list) or len(n) != 2:
                raise GeometryError("MalformedInput", f"{f}.normal: expected a pair")
            hps.append(
                HalfPlane(
                    (parse_rational(n[0], f + ".normal[0]"), parse_rational(n[1], f + ".normal[1]")),
                    parse_rational(h.get("offset"), f + ".offset"),
                    bool(h.get("strict", False)),
                )
            )
        out.append(Region(tuple(hps)))
    return out
