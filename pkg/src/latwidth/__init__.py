"""Exact lattice-width toolkit for planar convex polygons.

Exact rational geometry (:mod:`latwidth.geom`), width functionals
(:mod:`latwidth.metrics`), blocking polygons and maximality
(:mod:`latwidth.maximality`), circumscriber case verification
(:mod:`latwidth.cases`), brute-force oracles (:mod:`latwidth.oracle`) and
inequality checks (:mod:`latwidth.inequalities`).
"""

__version__ = "0.1.0"

from .geom import (  # noqa: E402
    GeometryError,
    LatticePolygon,
    P,
    Point,
    UnimodularMap,
    apply_map,
    are_equivalent,
    area,
    convex_hull,
    interior_count,
    lattice_points,
    polygon,
)
from .metrics import first_minimum, lattice_width, polar, transference_product  # noqa: E402

__all__ = [
    "__version__",
    "GeometryError",
    "LatticePolygon",
    "P",
    "Point",
    "UnimodularMap",
    "apply_map",
    "are_equivalent",
    "area",
    "convex_hull",
    "interior_count",
    "lattice_points",
    "polygon",
    "first_minimum",
    "lattice_width",
    "polar",
    "transference_product",
]
