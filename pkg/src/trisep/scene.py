"""Scene container and its load-time invariants.

A scene is a simple counterclockwise polygonal environment with blue and
red points strictly inside it. Violations are rejected with a named
error, never repaired. The cubic collinearity sweep can be switched off
for large benchmark scenes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CoordinateOutOfRange,
    GeneralPositionViolation,
    NonSimplePolygon,
    PointOutsideEnvironment,
    PolygonNotCounterClockwise,
)
from .geometry import (
    COLLINEAR,
    INSIDE,
    Point,
    orientation,
    point_in_simple_polygon,
    polygon_is_simple,
    polygon_signed_area2,
)

COORD_LIMIT = 2 ** 31


@dataclass(frozen=True)
class Scene:
    """Immutable scene: blue points, red points, environment polygon."""

    blue: tuple[Point, ...]
    red: tuple[Point, ...]
    polygon: tuple[Point, ...]

    @staticmethod
    def from_ints(blue, red, polygon, validate: bool = True,
                  check_general_position: bool = True) -> "Scene":
        scene = Scene(
            blue=tuple(Point(x, y) for x, y in blue),
            red=tuple(Point(x, y) for x, y in red),
            polygon=tuple(Point(x, y) for x, y in polygon),
        )
        if validate:
            validate_scene(scene, check_general_position=check_general_position)
        return scene

    @property
    def b(self) -> int:
        return len(self.blue)

    @property
    def r(self) -> int:
        return len(self.red)

    @property
    def k(self) -> int:
        return len(self.polygon)

    def with_reds(self, reds: tuple[Point, ...]) -> "Scene":
        return Scene(blue=self.blue, red=reds, polygon=self.polygon)


def validate_scene(scene: Scene, check_general_position: bool = True) -> None:
    """Check all scene invariants, raising the first violated one."""
    for p in scene.blue + scene.red + scene.polygon:
        if not p.is_integer():
            raise CoordinateOutOfRange("scene coordinates must be integers")
        if abs(p.hx) > COORD_LIMIT or abs(p.hy) > COORD_LIMIT:
            raise CoordinateOutOfRange(f"|coordinate| exceeds 2^31 in {p!r}")

    poly = list(scene.polygon)
    if len(poly) < 3:
        raise NonSimplePolygon("fewer than 3 polygon vertices")
    if not polygon_is_simple(poly):
        raise NonSimplePolygon("polygon edges self-intersect or repeat vertices")
    if polygon_signed_area2(poly) <= 0:
        raise PolygonNotCounterClockwise("polygon must wind counterclockwise")

    for which, pts in (("blue", scene.blue), ("red", scene.red)):
        for i, p in enumerate(pts):
            if point_in_simple_polygon(p, poly) != INSIDE:
                raise PointOutsideEnvironment(which, i)

    all_pts = list(scene.blue) + list(scene.red) + poly
    if len(set(all_pts)) != len(all_pts):
        raise GeneralPositionViolation("duplicate points across the scene")
    if check_general_position:
        _reject_collinear_triples(all_pts, scene)


def _labels(scene: Scene) -> list[str]:
    out = [f"blue[{i}]" for i in range(scene.b)]
    out += [f"red[{i}]" for i in range(scene.r)]
    out += [f"polygon[{i}]" for i in range(scene.k)]
    return out


def _reject_collinear_triples(pts: list[Point], scene: Scene) -> None:
    n = len(pts)
    names = _labels(scene)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(pts[i], pts[j], pts[k]) == COLLINEAR:
                    raise GeneralPositionViolation(
                        f"collinear triple ({names[i]}, {names[j]}, {names[k]})")
