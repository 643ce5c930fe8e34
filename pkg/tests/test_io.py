import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from latwidth.catalog import EXTREMIZERS, load_bundled
from latwidth.geom import GeometryError, HalfPlane
from latwidth.io import parse_rational, polygon_from_json, polygon_to_json, region_from_json, region_to_json
from latwidth.maximality import Region

from conftest import rational_polygons


def test_parse_rational_forms():
    assert parse_rational("3/4", "x") == F(3, 4)
    assert parse_rational(2, "x") == 2
    assert parse_rational(2.0, "x") == 2
    for bad in (0.5, True, None, "abc", "1/0"):
        with pytest.raises(GeometryError):
            parse_rational(bad, "x")


@pytest.mark.parametrize("doc, field", [
    ({}, "vertices"),
    ({"vertices": []}, "vertices"),
    ({"vertices": [[0, 0], [1]]}, "vertices[1]"),
    ({"vertices": [[0, 0], [1, "x"]]}, "vertices[1][1]"),
])
def test_malformed_polygon_names_the_field(doc, field):
    with pytest.raises(GeometryError) as exc:
        polygon_from_json(doc)
    assert field in str(exc.value)


@settings(max_examples=100, deadline=None)
@given(rational_polygons())
def test_polygon_round_trip(poly):
    doc = json.loads(json.dumps(polygon_to_json(poly)))
    assert polygon_from_json(doc) == poly
    assert polygon_to_json(polygon_from_json(doc)) == polygon_to_json(poly)


def test_region_round_trip():
    cells = [Region((HalfPlane((F(1), F(0)), F(1, 2)), HalfPlane((F(-1), F(2)), F(3), True)))]
    back = region_from_json(json.loads(json.dumps(region_to_json(cells))))
    assert back == cells


@pytest.mark.parametrize("name", sorted(EXTREMIZERS))
def test_bundled_data_matches_catalog(name):
    assert load_bundled(name) == EXTREMIZERS[name]
