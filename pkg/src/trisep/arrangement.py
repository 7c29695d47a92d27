"""Tangent-line arrangement of a scene, clipped to the environment.

Every red point outside the blue hull contributes two tangent lines.
Each line is clipped to the single maximal in-polygon segment through
its tangency point; the retained segments, their pairwise crossings,
the tangency points and the clip endpoints form a geometric graph whose
vertices are classified as

    I   coincides with a red point,
    II  coincides with a blue point,
    III lies on the environment boundary,
    IV  any other line crossing.

Vertex ids are assigned by scanning lines in id order and each line in
parameter order, so identical scenes always produce identical graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GeneralPositionViolation, PointInsideHull, RedInsideHull
from .geometry import (
    BOUNDARY,
    ConvexChain,
    Line,
    Point,
    Triangle,
    convex_hull,
    first_polygon_hit,
    point_in_simple_polygon,
    point_in_triangle,
    point_on_segment,
    tangents_from_point,
)
from .scene import Scene

TYPE_I = "I"
TYPE_II = "II"
TYPE_III = "III"
TYPE_IV = "IV"

SIDE_LEFT = "left"
SIDE_RIGHT = "right"


@dataclass
class TangentLine:
    """One clipped tangent line of the arrangement."""

    line_id: int
    red_index: int
    side: str
    blue_touch_index: int
    blue_touch: Point
    line: Line
    clip_a: Point = None
    clip_b: Point = None
    vertex_order: list[int] = field(default_factory=list)
    params: list[Fraction] = field(default_factory=list)
    touch_param: Fraction = None
    red_param: Fraction = None
    touch_vid: int = None
    touch_index: int = None  # position of the tangency point in vertex_order

    @property
    def params_range(self) -> tuple[Fraction, Fraction]:
        return (self.line.param(self.clip_a), self.line.param(self.clip_b))


@dataclass
class ArrVertex:
    vertex_id: int
    point: Point
    vtype: str
    incident: list[tuple[int, int]] = field(default_factory=list)  # (line_id, index on line)

    @property
    def line_ids(self) -> list[int]:
        return [lid for lid, _ in self.incident]


class ArrangementGraph:
    """The clipped arrangement as an immutable geometric graph."""

    def __init__(self, scene: Scene, hull: ConvexChain, lines: list[TangentLine],
                 vertices: list[ArrVertex], pair_vertex: dict[tuple[int, int], int]):
        self.scene = scene
        self.hull = hull
        self.lines = lines
        self.vertices = vertices
        self._pair_vertex = pair_vertex
        self._pos_vertex = {v.point.key(): v.vertex_id for v in vertices}

    @property
    def r(self) -> int:
        return len(self.lines) // 2

    def vertex_at(self, p: Point) -> int | None:
        return self._pos_vertex.get(p.key())

    def crossing_vertex(self, lid1: int, lid2: int) -> int | None:
        """Vertex id where two lines cross, if that crossing survives clipping."""
        key = (lid1, lid2) if lid1 < lid2 else (lid2, lid1)
        return self._pair_vertex.get(key)

    def neighbors(self, vid: int):
        """Adjacent vertices along all incident lines."""
        for lid, idx in self.vertices[vid].incident:
            order = self.lines[lid].vertex_order
            if idx > 0:
                yield order[idx - 1], lid
            if idx + 1 < len(order):
                yield order[idx + 1], lid

    def type_counts(self) -> dict[str, int]:
        out = {TYPE_I: 0, TYPE_II: 0, TYPE_III: 0, TYPE_IV: 0}
        for v in self.vertices:
            out[v.vtype] += 1
        return out

    def edge_count(self) -> int:
        return sum(len(ln.vertex_order) - 1 for ln in self.lines)

    def other_line(self, vid: int, lid: int) -> int | None:
        """The second line through a vertex, for two-line vertices."""
        ids = self.vertices[vid].line_ids
        if len(ids) != 2:
            return None
        return ids[1] if ids[0] == lid else ids[0]

    def index_on_line(self, vid: int, lid: int) -> int:
        for l, idx in self.vertices[vid].incident:
            if l == lid:
                return idx
        raise KeyError(f"vertex {vid} not on line {lid}")

    def side_of_touch(self, vid: int, lid: int) -> int:
        """Which side of the line's tangency point a vertex lies on (+1/-1/0).

        vertex_order is sorted by line parameter, so index order decides."""
        idx = self.index_on_line(vid, lid)
        ti = self.lines[lid].touch_index
        return (idx > ti) - (idx < ti)

    def outward_slice(self, lid: int, side: int) -> list[int]:
        """Vertex ids on one side of the tangency point, nearest first."""
        ln = self.lines[lid]
        ti = ln.touch_index
        if side > 0:
            return ln.vertex_order[ti + 1:]
        return ln.vertex_order[:ti][::-1]


def check_red_outside_hull(scene: Scene, hull: ConvexChain) -> None:
    for i, p in enumerate(scene.red):
        if hull.contains(p, "closed"):
            raise RedInsideHull(i)


def build_tangent_lines(scene: Scene, hull: ConvexChain) -> list[TangentLine]:
    """The 2r clipped tangent lines, ids 2*i (left) and 2*i+1 (right)."""
    check_red_outside_hull(scene, hull)
    poly = list(scene.polygon)
    lines: list[TangentLine] = []
    for i, red in enumerate(scene.red):
        li, ri = tangents_from_point(red, hull)
        for side, touch_idx in ((SIDE_LEFT, li), (SIDE_RIGHT, ri)):
            touch = hull.vertices[touch_idx]
            ln = Line.through(red, touch)
            tl = TangentLine(
                line_id=len(lines),
                red_index=i,
                side=side,
                blue_touch_index=touch_idx,
                blue_touch=touch,
                line=ln,
            )
            dx, dy = ln.direction()
            hit_pos, _ = first_polygon_hit(touch, (dx, dy), poly, check_origin=False)
            hit_neg, _ = first_polygon_hit(touch, (-dx, -dy), poly, check_origin=False)
            if ln.param(hit_neg) > ln.param(hit_pos):
                hit_neg, hit_pos = hit_pos, hit_neg
            tl.clip_a = hit_neg
            tl.clip_b = hit_pos
            tl.touch_param = ln.param(touch)
            tl.red_param = ln.param(red)
            lines.append(tl)
    return lines


def build_arrangement(scene: Scene, strict: bool = True) -> ArrangementGraph:
    """Construct the full labeled graph for a valid scene.

    In strict mode, parallel tangent lines and concurrences away from
    shared red or blue points are rejected as general-position
    violations; non-strict mode (large benchmark scenes) instead treats
    parallel lines as non-crossing and merges concurrences.
    """
    hull = convex_hull(list(scene.blue))
    lines = build_tangent_lines(scene, hull)
    poly = list(scene.polygon)

    red_keys = {p.key(): i for i, p in enumerate(scene.red)}
    blue_keys = {p.key() for p in scene.blue}

    # candidate points per line: clip ends, tangency point, surviving crossings
    per_line: list[dict[tuple[int, int, int], tuple[Fraction, Point]]] = []
    for tl in lines:
        lo, hi = tl.params_range
        cands = {
            tl.clip_a.key(): (lo, tl.clip_a),
            tl.clip_b.key(): (hi, tl.clip_b),
            tl.blue_touch.key(): (tl.touch_param, tl.blue_touch),
        }
        per_line.append(cands)

    pair_cross: dict[tuple[int, int], Point] = {}
    for i in range(len(lines)):
        li = lines[i]
        lo_i, hi_i = li.params_range
        for j in range(i + 1, len(lines)):
            lj = lines[j]
            p = li.line.intersect(lj.line)
            if p is None:
                if strict:
                    raise GeneralPositionViolation(f"parallel tangent lines {i} and {j}")
                continue
            ti = li.line.param(p)
            if not (lo_i <= ti <= hi_i):
                continue
            tj = lj.line.param(p)
            lo_j, hi_j = lj.params_range
            if not (lo_j <= tj <= hi_j):
                continue
            per_line[i][p.key()] = (ti, p)
            per_line[j][p.key()] = (tj, p)
            pair_cross[(i, j)] = p

    # deterministic vertex ids: line id order, then line parameter order
    vertices: list[ArrVertex] = []
    key_to_vid: dict[tuple[int, int, int], int] = {}
    for i, tl in enumerate(lines):
        items = sorted(per_line[i].values(), key=lambda tp: tp[0])
        tl.vertex_order = []
        tl.params = []
        for t, p in items:
            vid = key_to_vid.get(p.key())
            if vid is None:
                vid = len(vertices)
                key_to_vid[p.key()] = vid
                vertices.append(ArrVertex(vertex_id=vid, point=p, vtype=""))
            tl.vertex_order.append(vid)
            tl.params.append(t)
            vertices[vid].incident.append((i, len(tl.vertex_order) - 1))
        tl.touch_vid = key_to_vid[tl.blue_touch.key()]
        tl.touch_index = tl.vertex_order.index(tl.touch_vid)

    for v in vertices:
        k = v.point.key()
        if k in red_keys:
            v.vtype = TYPE_I
        elif k in blue_keys:
            v.vtype = TYPE_II
        elif point_in_simple_polygon(v.point, poly) == BOUNDARY:
            v.vtype = TYPE_III
        else:
            v.vtype = TYPE_IV

    if strict:
        for v in vertices:
            if v.vtype in (TYPE_I, TYPE_IV) and len(v.incident) > 2:
                raise GeneralPositionViolation(
                    f"three lines concurrent at {v.point!r} away from a shared blue point")

    pair_vertex = {key: key_to_vid[p.key()] for key, p in pair_cross.items()}
    return ArrangementGraph(scene, hull, lines, vertices, pair_vertex)


def _wedge_contains_red(apex: Point, t1: Point, t2: Point, hull: ConvexChain,
                        reds, skip: Point | None = None) -> bool:
    """Any red strictly inside the region bounded by the two tangent
    segments from apex and the near hull chain?"""
    tri = Triangle(apex, t1, t2)
    if tri.is_degenerate():
        return False
    for q in reds:
        if skip is not None and q == skip:
            continue
        if not point_in_triangle(q, tri, "closed"):
            continue
        if hull.contains(q, "closed"):
            continue
        if point_on_segment(q, apex, t1) or point_on_segment(q, apex, t2):
            continue
        return True
    return False


def semi_triangle_red_empty(v, g: ArrangementGraph) -> bool:
    """Exact emptiness oracle for the tangent wedge based at a vertex.

    Accepts a vertex id or a raw Point strictly outside the blue hull.
    The open region between the two tangent segments and the hull is
    scanned red point by red point; reds on the wedge boundary do not
    count.
    """
    if isinstance(v, int):
        vx = g.vertices[v]
        if vx.vtype == TYPE_II:
            raise PointInsideHull("tangency points lie on the hull boundary")
        apex = vx.point
        touch_ids = sorted({g.lines[lid].blue_touch_index for lid in vx.line_ids})
        if len(touch_ids) >= 2:
            t1 = g.hull.vertices[touch_ids[0]]
            t2 = g.hull.vertices[touch_ids[1]]
        else:
            li, ri = tangents_from_point(apex, g.hull)
            t1, t2 = g.hull.vertices[li], g.hull.vertices[ri]
    else:
        apex = v
        li, ri = tangents_from_point(apex, g.hull)
        t1, t2 = g.hull.vertices[li], g.hull.vertices[ri]
    return not _wedge_contains_red(apex, t1, t2, g.hull, g.scene.red)
