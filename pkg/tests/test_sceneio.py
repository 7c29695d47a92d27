import json

import pytest

from trisep.errors import (
    CoordinateOutOfRange,
    GeneralPositionViolation,
    NonSimplePolygon,
    PointOutsideEnvironment,
    PolygonNotCounterClockwise,
    SceneSyntaxError,
)
from trisep.generators import generate_lower_bound, generate_random, generate_tight_ring
from trisep.sceneio import parse_scene, scene_digest, write_scene
from .conftest import QUAD_ENV


def make_text(polygon, blue, red, version=1):
    return json.dumps({"version": version, "polygon": polygon, "blue": blue, "red": red})


MINIMAL = make_text(QUAD_ENV, [(0, 0), (4, 0), (1, 5)], [(8, 2)])


class TestParse:
    def test_minimal(self):
        scene = parse_scene(MINIMAL)
        assert scene.b == 3 and scene.r == 1 and scene.k == 4

    def test_round_trip_canonical(self):
        scene = parse_scene(MINIMAL)
        text = write_scene(scene)
        again = parse_scene(text)
        assert again == scene
        assert write_scene(again) == text

    @pytest.mark.parametrize("bad", [
        "not json {{",
        json.dumps([1, 2]),
        json.dumps({"version": 1, "polygon": []}),
        make_text(QUAD_ENV, [(0, 0)], [], version=9),
        json.dumps({"version": 1, "polygon": QUAD_ENV, "blue": [[0, 0, 3]], "red": []}),
        json.dumps({"version": 1, "polygon": QUAD_ENV, "blue": [[0.5, 1]], "red": []}),
    ])
    def test_syntax_errors(self, bad):
        with pytest.raises(SceneSyntaxError):
            parse_scene(bad)

    def test_red_on_boundary(self):
        text = make_text([(10, -10), (10, 10), (-10, 10), (-10, -10)],
                         [(0, 1), (4, 0), (1, 5)], [(10, 3)])
        with pytest.raises(PointOutsideEnvironment) as exc:
            parse_scene(text)
        assert exc.value.which == "red" and exc.value.index == 0

    def test_collinear_blues(self):
        text = make_text(QUAD_ENV, [(0, 0), (2, 2), (4, 4)], [])
        with pytest.raises(GeneralPositionViolation):
            parse_scene(text)

    def test_collinearity_check_can_be_disabled(self):
        text = make_text(QUAD_ENV, [(0, 0), (2, 2), (4, 4)], [])
        scene = parse_scene(text, check_general_position=False)
        assert scene.b == 3

    def test_non_simple_polygon(self):
        bowtie = [(0, 0), (10, 10), (10, 0), (0, 10)]
        with pytest.raises(NonSimplePolygon):
            parse_scene(make_text(bowtie, [(2, 1), (3, 1), (2, 3)], []))

    def test_clockwise_polygon(self):
        cw = list(reversed(QUAD_ENV))
        with pytest.raises(PolygonNotCounterClockwise):
            parse_scene(make_text(cw, [(0, 0), (4, 0), (1, 5)], []))

    def test_coordinate_limit(self):
        big = 2 ** 31 + 1
        text = make_text([(big, -big), (big, big), (-big, big), (-big, -big)],
                         [(0, 0), (4, 0), (1, 5)], [])
        with pytest.raises(CoordinateOutOfRange):
            parse_scene(text)


class TestDigest:
    def test_stable(self):
        s = parse_scene(MINIMAL)
        assert scene_digest(s) == scene_digest(parse_scene(write_scene(s)))

    def test_generator_round_trips(self):
        for scene in (generate_random(3, 6, 4, 7, "star"),
                      generate_lower_bound(2),
                      generate_tight_ring(6, 12)):
            assert parse_scene(write_scene(scene)) == scene
