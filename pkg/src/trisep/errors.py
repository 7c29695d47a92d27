"""Exception hierarchy for the trisep package.

Geometry errors signal violated preconditions of individual primitives.
Scene errors name the first violated invariant of an input file, so the
CLI can report it verbatim. Domain errors are expected algorithmic
outcomes (for example a red point inside the blue hull) that callers may
want to catch and report rather than crash on.
"""


class TriSepError(Exception):
    """Base class for all package errors."""


# -- geometry primitive errors -------------------------------------------

class GeometryError(TriSepError):
    pass


class FewerThanThreePoints(GeometryError):
    pass


class AllCollinear(GeometryError):
    pass


class PointInsideHull(GeometryError):
    pass


class PointOnHullBoundary(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class OriginOutside(GeometryError):
    pass


# -- scene / input errors -------------------------------------------------

class SceneError(TriSepError):
    pass


class SceneSyntaxError(SceneError):
    pass


class CoordinateOutOfRange(SceneError):
    pass


class NonSimplePolygon(SceneError):
    pass


class PolygonNotCounterClockwise(SceneError):
    pass


class PointOutsideEnvironment(SceneError):
    def __init__(self, which: str, index: int):
        self.which = which
        self.index = index
        super().__init__(f"{which} point #{index} is not strictly inside the environment")


class GeneralPositionViolation(SceneError):
    def __init__(self, detail):
        self.detail = detail
        super().__init__(f"general position violated: {detail}")


# -- domain errors --------------------------------------------------------

class RedInsideHull(TriSepError):
    """A red point lies inside or on the blue convex hull, so no full
    separator can exist."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"red point #{index} lies inside or on the blue hull")


class NonConvexEnvironment(TriSepError):
    pass


class SceneTooLarge(TriSepError):
    pass


class GenerationFailed(TriSepError):
    pass
