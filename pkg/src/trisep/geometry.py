"""Exact planar geometry over rational coordinates.

Points are stored as gcd-reduced homogeneous integer triples (hx, hy, hw)
with hw > 0, so every predicate reduces to integer sign computations and
never touches floating point. Scene inputs are integers (hw == 1);
constructed points (line intersections, midpoints) carry the exact
denominator. Two points are equal exactly when their reduced triples are
equal, which also makes them usable as dict keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    AllCollinear,
    DegenerateTriangle,
    FewerThanThreePoints,
    GeometryError,
    OriginOutside,
    PointInsideHull,
    PointOnHullBoundary,
)

LEFT = 1
RIGHT = -1
COLLINEAR = 0

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def _sign(v: int) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


class Point:
    """Exact 2-D point with rational coordinates."""

    __slots__ = ("hx", "hy", "hw")

    def __init__(self, hx: int, hy: int, hw: int = 1):
        if hw == 0:
            raise GeometryError("point at infinity")
        if hw < 0:
            hx, hy, hw = -hx, -hy, -hw
        g = gcd(gcd(abs(hx), abs(hy)), hw)
        if g > 1:
            hx //= g
            hy //= g
            hw //= g
        object.__setattr__(self, "hx", hx)
        object.__setattr__(self, "hy", hy)
        object.__setattr__(self, "hw", hw)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @staticmethod
    def from_fractions(x: Fraction, y: Fraction) -> "Point":
        x = Fraction(x)
        y = Fraction(y)
        w = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        return Point(x.numerator * (w // x.denominator), y.numerator * (w // y.denominator), w)

    @property
    def x(self) -> Fraction:
        return Fraction(self.hx, self.hw)

    @property
    def y(self) -> Fraction:
        return Fraction(self.hy, self.hw)

    def key(self) -> tuple[int, int, int]:
        return (self.hx, self.hy, self.hw)

    def is_integer(self) -> bool:
        return self.hw == 1

    def coord_strings(self) -> tuple[str, str]:
        """Coordinates as reduced "p/q" text ("p" when the denominator is 1)."""
        def fmt(n: int, d: int) -> str:
            return str(n) if d == 1 else f"{n}/{d}"
        return (fmt(self.x.numerator, self.x.denominator),
                fmt(self.y.numerator, self.y.denominator))

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.hx == other.hx \
            and self.hy == other.hy and self.hw == other.hw

    def __hash__(self) -> int:
        return hash((self.hx, self.hy, self.hw))

    def __lt__(self, other: "Point") -> bool:
        a = self.hx * other.hw
        b = other.hx * self.hw
        if a != b:
            return a < b
        return self.hy * other.hw < other.hy * self.hw

    def __le__(self, other: "Point") -> bool:
        return self == other or self < other

    def __repr__(self) -> str:
        sx, sy = self.coord_strings()
        return f"Point({sx}, {sy})"


def orientation(p: Point, q: Point, r: Point) -> int:
    """Turn direction of the ordered triple: LEFT, RIGHT or COLLINEAR.

    Exact sign of the determinant of (q - p, r - p); hw > 0 on all points
    keeps the homogeneous scaling positive, so the integer sign is the
    true sign.
    """
    ax = q.hx * p.hw - p.hx * q.hw
    ay = q.hy * p.hw - p.hy * q.hw
    bx = r.hx * p.hw - p.hx * r.hw
    by = r.hy * p.hw - p.hy * r.hw
    return _sign(ax * by - ay * bx)


class Line:
    """Line a*x + b*y + c = 0 with gcd-reduced integer coefficients.

    Coefficients carry a canonical sign, so equal point sets give equal
    Line objects regardless of construction order. side() is therefore
    consistent per line (zero on it, opposite signs on opposite sides)
    but not tied to the direction the line was constructed from.
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a: int, b: int, c: int):
        if a == 0 and b == 0:
            raise GeometryError("degenerate line")
        g = gcd(gcd(abs(a), abs(b)), abs(c))
        if g > 1:
            a //= g
            b //= g
            c //= g
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Line is immutable")

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        a = p.hy * q.hw - p.hw * q.hy
        b = p.hw * q.hx - p.hx * q.hw
        c = p.hx * q.hy - p.hy * q.hx
        return Line(a, b, c)

    def side(self, p: Point) -> int:
        return _sign(self.a * p.hx + self.b * p.hy + self.c * p.hw)

    def intersect(self, other: "Line") -> Point | None:
        """Crossing point, or None for parallel lines."""
        w = self.a * other.b - self.b * other.a
        if w == 0:
            return None
        x = self.b * other.c - self.c * other.b
        y = self.c * other.a - self.a * other.c
        return Point(x, y, w)

    def direction(self) -> tuple[int, int]:
        """A primitive direction vector along the line."""
        return (self.b, -self.a)

    def param(self, p: Point) -> Fraction:
        """Position of an on-line point, increasing along direction()."""
        return Fraction(self.b * p.hx - self.a * p.hy, p.hw)

    def __eq__(self, other) -> bool:
        return isinstance(other, Line) and (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c))

    def __repr__(self) -> str:
        return f"Line({self.a}, {self.b}, {self.c})"


# -- segments --------------------------------------------------------------

def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """Closed segment membership, endpoints included."""
    if orientation(a, b, p) != COLLINEAR:
        return False
    # collinear: compare coordinates along the dominant axis
    lo, hi = (a, b) if a < b else (b, a)
    return lo <= p <= hi


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when the open segments cross at a single interior point."""
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def midpoint(a: Point, b: Point) -> Point:
    return Point(a.hx * b.hw + b.hx * a.hw,
                 a.hy * b.hw + b.hy * a.hw,
                 2 * a.hw * b.hw)


# -- convex hulls -----------------------------------------------------------

@dataclass(frozen=True)
class ConvexChain:
    """Strictly convex counterclockwise vertex cycle."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n < 3:
            raise FewerThanThreePoints(f"{n} hull vertices")
        for i in range(n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % n]
            c = self.vertices[(i + 2) % n]
            if orientation(a, b, c) != LEFT:
                raise GeometryError("chain is not strictly convex counterclockwise")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def contains(self, p: Point, mode: str = "closed") -> bool:
        """Exact membership; "open" excludes the boundary."""
        strict = mode == "open"
        for a, b in self.edges():
            o = orientation(a, b, p)
            if o == RIGHT or (strict and o == COLLINEAR):
                return False
        return True


def convex_hull(points: list[Point]) -> ConvexChain:
    """Strict convex hull (collinear boundary points dropped), CCW,
    starting at the lexicographically smallest vertex."""
    unique = sorted(set(points))
    if len(unique) < 3:
        raise FewerThanThreePoints(f"{len(unique)} distinct points")

    def half(pts):
        out: list[Point] = []
        for p in pts:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) != LEFT:
                out.pop()
            out.append(p)
        return out

    lower = half(unique)
    upper = half(unique[::-1])
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:
        raise AllCollinear("all points on one line")
    return ConvexChain(tuple(cycle))


def tangents_from_point(p: Point, hull: ConvexChain) -> tuple[int, int]:
    """Indices of the two tangency vertices of hull as seen from p.

    Returns (left_idx, right_idx): the whole hull lies weakly to the
    right of the ray p -> vertices[left_idx] and weakly to the left of
    the ray p -> vertices[right_idx]. When p is collinear with a hull
    edge, the vertex nearer to p is chosen so the tangent segment stays
    outside the hull.
    """
    verts = hull.vertices
    n = len(verts)
    if hull.contains(p, "open"):
        raise PointInsideHull(repr(p))
    if hull.contains(p, "closed"):
        raise PointOnHullBoundary(repr(p))

    def dist2(q: Point) -> Fraction:
        return (q.x - p.x) ** 2 + (q.y - p.y) ** 2

    left_idx = right_idx = None
    left_d = right_d = None
    for i in range(n):
        o_prev = orientation(p, verts[i], verts[(i - 1) % n])
        o_next = orientation(p, verts[i], verts[(i + 1) % n])
        if o_prev <= 0 and o_next <= 0:
            d = dist2(verts[i])
            if left_idx is None or d < left_d:
                left_idx, left_d = i, d
        if o_prev >= 0 and o_next >= 0:
            d = dist2(verts[i])
            if right_idx is None or d < right_d:
                right_idx, right_d = i, d
    if left_idx is None or right_idx is None or left_idx == right_idx:
        raise GeometryError("tangent computation failed")
    return left_idx, right_idx


# -- triangles ---------------------------------------------------------------

@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def signed_area2(self) -> int:
        return orientation(self.a, self.b, self.c)

    def is_degenerate(self) -> bool:
        return self.signed_area2() == 0

    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    def sorted_vertices(self) -> tuple[Point, Point, Point]:
        return tuple(sorted((self.a, self.b, self.c)))


def point_in_triangle(p: Point, t: Triangle, mode: str = "closed") -> bool:
    """Exact triangle membership; "open" excludes the boundary."""
    o = orientation(t.a, t.b, t.c)
    if o == COLLINEAR:
        raise DegenerateTriangle(repr(t))
    if o == RIGHT:
        va, vb, vc = t.a, t.c, t.b
    else:
        va, vb, vc = t.a, t.b, t.c
    s1 = orientation(va, vb, p)
    s2 = orientation(vb, vc, p)
    s3 = orientation(vc, va, p)
    if mode == "open":
        return s1 > 0 and s2 > 0 and s3 > 0
    return s1 >= 0 and s2 >= 0 and s3 >= 0


# -- simple polygons ----------------------------------------------------------

def polygon_signed_area2(poly: list[Point]) -> Fraction:
    total = Fraction(0)
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def polygon_is_simple(poly: list[Point]) -> bool:
    n = len(poly)
    if n < 3:
        return False
    if len(set(poly)) != n:
        return False
    for i in range(n):
        a1, a2 = poly[i], poly[(i + 1) % n]
        for j in range(i + 1, n):
            b1, b2 = poly[j], poly[(j + 1) % n]
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                continue
            if segments_properly_cross(a1, a2, b1, b2):
                return False
            # non-adjacent edges may not even touch
            if point_on_segment(b1, a1, a2) or point_on_segment(b2, a1, a2) \
                    or point_on_segment(a1, b1, b2) or point_on_segment(a2, b1, b2):
                return False
    return True


def point_in_simple_polygon(p: Point, poly: list[Point]) -> str:
    """Exact location of p: INSIDE, BOUNDARY or OUTSIDE.

    Crossing-number test with a rightward ray and the half-open edge
    rule, all in integer arithmetic.
    """
    n = len(poly)
    inside = False
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if point_on_segment(p, a, b):
            return BOUNDARY
        ay_gt = a.hy * p.hw > p.hy * a.hw
        by_gt = b.hy * p.hw > p.hy * b.hw
        if ay_gt != by_gt:
            o = orientation(a, b, p)
            upward = by_gt
            if (o == LEFT and upward) or (o == RIGHT and not upward):
                inside = not inside
    return INSIDE if inside else OUTSIDE


def first_polygon_hit(origin: Point, direction: tuple[int, int],
                      poly: list[Point], check_origin: bool = True) -> tuple[Point, int]:
    """First boundary crossing of the ray origin + t*direction, t > 0.

    Returns the exact hit point and the index of the boundary edge.
    Raises OriginOutside when asked to check and the origin is not
    strictly interior.
    """
    dx, dy = direction
    if dx == 0 and dy == 0:
        raise GeometryError("zero direction")
    if check_origin and point_in_simple_polygon(origin, poly) != INSIDE:
        raise OriginOutside(repr(origin))

    n = len(poly)
    best_t: Fraction | None = None
    best: tuple[Point, int] | None = None
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        edge = Line.through(a, b)
        denom = edge.a * dx + edge.b * dy
        if denom == 0:
            continue
        # t solves edge.eval(origin + t*d) == 0
        num = -(edge.a * origin.hx + edge.b * origin.hy + edge.c * origin.hw)
        t = Fraction(num, denom * origin.hw)
        if t <= 0:
            continue
        hit = Point.from_fractions(origin.x + t * dx, origin.y + t * dy)
        if not point_on_segment(hit, a, b):
            continue
        if best_t is None or t < best_t:
            best_t = t
            best = (hit, i)
    if best is None:
        raise GeometryError("ray never leaves the polygon; input is inconsistent")
    return best


def triangle_inside_polygon(t: Triangle, poly: list[Point]) -> bool:
    """True when the closed triangle lies inside the closed polygon.

    Each triangle edge may touch but not properly cross the boundary;
    vertex and midpoint location checks rule out fully or partially
    exterior edges.
    """
    n = len(poly)
    corners = t.vertices()
    for v in corners:
        if point_in_simple_polygon(v, poly) == OUTSIDE:
            return False
    for k in range(3):
        u, v = corners[k], corners[(k + 1) % 3]
        for i in range(n):
            if segments_properly_cross(u, v, poly[i], poly[(i + 1) % n]):
                return False
        if point_in_simple_polygon(midpoint(u, v), poly) == OUTSIDE:
            return False
    return True
