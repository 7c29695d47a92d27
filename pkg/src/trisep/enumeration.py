"""Separator enumeration: the labeled walk and the exhaustive oracle.

A canonical separator triangle has each side on a tangent line of the
arrangement, so its corners are arrangement vertices. The walk visits
every candidate corner (two-line vertex passing the candidacy filter),
jumps to the extreme along one incident line, and slides the opposite
corner along the other incident line until the filter fails, emitting
one triangle per admissible stop. Every emitted triangle is re-checked
by the full validator before it is reported; the brute-force oracle
enumerates all line triples instead and shares nothing with the walk
beyond the geometric primitives.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .arrangement import (
    ArrangementGraph,
    TYPE_I,
    TYPE_II,
    TYPE_IV,
    build_tangent_lines,
    semi_triangle_red_empty,
)
from .errors import DegenerateTriangle
from .geometry import (
    Point,
    Triangle,
    convex_hull,
    point_in_triangle,
    triangle_inside_polygon,
)
from .ranking import RankLabels, directional_extremes
from .scene import Scene


@dataclass(frozen=True)
class CanonicalTriangle:
    """A reported separator: sorted corner positions plus the ids of the
    three supporting tangent lines."""

    corners: tuple[Point, Point, Point]
    support_lines: tuple[int, int, int]

    @staticmethod
    def make(points, line_ids) -> "CanonicalTriangle":
        return CanonicalTriangle(tuple(sorted(points)), tuple(sorted(line_ids)))

    @property
    def dedup_key(self):
        return tuple(p.key() for p in self.corners)

    def triangle(self) -> Triangle:
        return Triangle(*self.corners)

    def __lt__(self, other: "CanonicalTriangle") -> bool:
        for a, b in zip(self.corners, other.corners):
            if a != b:
                return a < b
        return self.support_lines < other.support_lines


@dataclass
class ValidationReport:
    ok: bool
    failure: str | None = None
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_separator(t: Triangle, scene: Scene) -> ValidationReport:
    """Full separator check: all blues inside the closed triangle, no red
    strictly inside, closed triangle inside the environment. Reports the
    first violation found."""
    if t.is_degenerate():
        raise DegenerateTriangle(repr(t))
    for i, p in enumerate(scene.blue):
        if not point_in_triangle(p, t, "closed"):
            return ValidationReport(False, "MissingBlue", i)
    for i, p in enumerate(scene.red):
        if point_in_triangle(p, t, "open"):
            return ValidationReport(False, "RedInside", i)
    if not triangle_inside_polygon(t, list(scene.polygon)):
        return ValidationReport(False, "OutsideEnvironment", None)
    return ValidationReport(True)


def brute_force_separators(scene: Scene) -> set[CanonicalTriangle]:
    """All separators by exhaustive scan over tangent-line triples.

    Keeps a triple when the three pairwise crossings exist within all
    clipped segments, the triangle is non-degenerate, contains the blue
    hull, and passes the full validator. Independent of ranks, extremes
    and walks.
    """
    hull = convex_hull(list(scene.blue))
    lines = build_tangent_lines(scene, hull)
    n = len(lines)
    ranges = [tl.params_range for tl in lines]

    cross: dict[tuple[int, int], Point | None] = {}
    for i in range(n):
        for j in range(i + 1, n):
            p = lines[i].line.intersect(lines[j].line)
            if p is not None:
                ti = lines[i].line.param(p)
                tj = lines[j].line.param(p)
                if not (ranges[i][0] <= ti <= ranges[i][1]
                        and ranges[j][0] <= tj <= ranges[j][1]):
                    p = None
            cross[(i, j)] = p

    out: set[CanonicalTriangle] = set()
    hull_pts = hull.vertices
    for i in range(n):
        for j in range(i + 1, n):
            pij = cross[(i, j)]
            if pij is None:
                continue
            for k in range(j + 1, n):
                pik = cross[(i, k)]
                pjk = cross[(j, k)]
                if pik is None or pjk is None:
                    continue
                tri = Triangle(pij, pik, pjk)
                if tri.is_degenerate():
                    continue
                if not all(point_in_triangle(q, tri, "closed") for q in hull_pts):
                    continue
                if validate_separator(tri, scene).ok:
                    out.add(CanonicalTriangle.make((pij, pik, pjk), (i, j, k)))
    return out


@dataclass
class EnumerationStats:
    corners_considered: int = 0
    corners_processed: int = 0
    walk_steps: int = 0
    emitted: int = 0
    rejected_by_validation: int = 0
    duplicates: int = 0


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("TRISEP_THREADS", "1")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def enumerate_separators(g: ArrangementGraph, labels: RankLabels | None = None,
                         backend: str = "rank",
                         workers: int | None = None) -> set[CanonicalTriangle]:
    """All inscribed triangular separators of the scene behind g."""
    result, _ = enumerate_with_stats(g, labels, backend, workers)
    return result


def enumerate_with_stats(g: ArrangementGraph, labels: RankLabels | None = None,
                         backend: str = "rank", workers: int | None = None
                         ) -> tuple[set[CanonicalTriangle], EnumerationStats]:
    if backend == "rank":
        if labels is None:
            raise ValueError("rank backend needs computed labels")
        rank = labels.rank

        def pred(vid: int) -> bool:
            return rank[vid] < 2
        extremes = labels.extremes
        if not extremes:
            raise ValueError("rank backend needs computed extremes")
    elif backend == "oracle":
        memo: dict[int, bool] = {}

        def pred(vid: int) -> bool:
            got = memo.get(vid)
            if got is None:
                if g.vertices[vid].vtype == TYPE_II:
                    got = True  # tangency points carry no wedge of their own
                else:
                    got = semi_triangle_red_empty(vid, g)
                memo[vid] = got
            return got
        extremes = directional_extremes(g, pred)
    else:
        raise ValueError(f"unknown backend {backend!r}")

    stats = EnumerationStats()
    corners = [v.vertex_id for v in g.vertices
               if v.vtype in (TYPE_I, TYPE_IV) and len(v.incident) == 2]
    stats.corners_considered = len(corners)

    nw = _worker_count(workers)
    buckets = [corners[i::nw] for i in range(nw)]

    # flat lookup tables keep the inner loop free of attribute chasing
    vtx = g.vertices
    points = [v.point for v in vtx]
    pair_of = [(v.incident[0], v.incident[1]) if len(v.incident) == 2 else None
               for v in vtx]
    touch_index = [tl.touch_index for tl in g.lines]
    crossing = g.crossing_vertex

    verdict_cache: dict[tuple, bool] = {}
    found: set[CanonicalTriangle] = set()
    scene = g.scene

    def walk(v: int, la: int, lb: int) -> None:
        # second corner runs outward along lb; third corner sits on la
        side_u = -g.side_of_touch(v, la)
        if extremes.get((la, side_u)) is None:
            return
        ti_a = touch_index[la]
        for w in g.outward_slice(lb, -g.side_of_touch(v, lb)):
            stats.walk_steps += 1
            if not pred(w):
                break
            pw = pair_of[w]
            if pw is None:
                continue
            (la1, _), (la2, _) = pw
            m_w = la2 if la1 == lb else (la1 if la2 == lb else None)
            if m_w is None:
                continue
            u = crossing(m_w, la)
            if u is None:
                continue
            # the la-side of the triangle must span la's tangency point,
            # so u may not fall strictly on v's side of it
            pu = pair_of[u]
            if pu is None:
                iu = g.index_on_line(u, la)
            else:
                iu = pu[0][1] if pu[0][0] == la else pu[1][1]
            u_side = (iu > ti_a) - (iu < ti_a)
            if u_side == -side_u:
                continue
            if not pred(u):
                continue
            corners = (points[v], points[w], points[u])
            key = (corners[0].key(), corners[1].key(), corners[2].key())
            key = tuple(sorted(key))
            verdict = verdict_cache.get(key)
            if verdict is None:
                verdict = validate_separator(Triangle(*corners), scene).ok
                verdict_cache[key] = verdict
                if verdict:
                    stats.emitted += 1
                    found.add(CanonicalTriangle.make(corners, (la, lb, m_w)))
                else:
                    stats.rejected_by_validation += 1
            else:
                stats.duplicates += 1

    for bucket in buckets:
        for v in bucket:
            if not pred(v):
                continue
            stats.corners_processed += 1
            l1, l2 = vtx[v].line_ids
            walk(v, l1, l2)
            walk(v, l2, l1)
    return found, stats


def sorted_separators(triangles) -> list[CanonicalTriangle]:
    return sorted(triangles)


def triangle_record(t: CanonicalTriangle) -> dict:
    """JSON-friendly record with exact rational corner coordinates."""
    return {
        "corners": [list(p.coord_strings()) for p in t.corners],
        "support_lines": list(t.support_lines),
    }
