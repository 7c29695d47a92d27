"""Approximate maximum triangular separator in a convex environment.

When no full separator exists, the pipeline is: grow the blue hull edge
by edge until each supporting line rests on a red point or exits the
environment, intersect the resulting half-planes with the environment
(the enlarged convex separator), then search a dyadic family of
triangles anchored at one of its vertices. Exhaustive optima over the
separator's vertices back every approximation claim with an exact
reference value.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NonConvexEnvironment, RedInsideHull, SceneTooLarge
from .geometry import (
    LEFT,
    ConvexChain,
    Line,
    Point,
    Triangle,
    convex_hull,
    orientation,
    point_in_triangle,
    triangle_inside_polygon,
)
from .scene import Scene


@dataclass(frozen=True)
class ConvexSeparator:
    """Enlarged convex separator: all blues inside, no red strictly
    inside, every edge witnessed by a red point or an environment
    contact."""

    chain: ConvexChain
    edge_witness: tuple[tuple[str, int], ...]  # ("red", i) or ("boundary", poly vertex)

    def __len__(self) -> int:
        return len(self.chain)


@dataclass(frozen=True)
class CandidateFamily:
    apex: int  # index into the separator chain
    triangles: tuple[tuple[int, int, int], ...]  # (apex, a, b) chain indices


@dataclass(frozen=True)
class MaxSepResult:
    triangle: Triangle
    blue_count: int
    apex_used: Point
    family_size: int


def _require_convex(scene: Scene) -> None:
    poly = scene.polygon
    n = len(poly)
    for i in range(n):
        if orientation(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) != LEFT:
            raise NonConvexEnvironment("environment polygon is not strictly convex")


def _clip_halfplane(region: list[Point], a: int, b: int, rhs: int) -> list[Point]:
    """Keep the part of a convex region with a*x + b*y <= rhs, exactly."""

    def side(p: Point) -> int:
        v = a * p.hx + b * p.hy - rhs * p.hw
        return (v > 0) - (v < 0)

    sides = [side(p) for p in region]
    if all(s <= 0 for s in sides):
        return region
    cut = Line(a, b, -rhs)  # sign normalization does not move the line
    out: list[Point] = []
    n = len(region)
    for i in range(n):
        p, sp = region[i], sides[i]
        q, sq = region[(i + 1) % n], sides[(i + 1) % n]
        if sp <= 0:
            out.append(p)
        if sp * sq < 0:
            out.append(cut.intersect(Line.through(p, q)))
    return out


def _normalize_cycle(pts: list[Point]) -> list[Point]:
    dedup: list[Point] = []
    for p in pts:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    # drop collinear middles
    out = []
    n = len(dedup)
    for i in range(n):
        a, b, c = dedup[(i - 1) % n], dedup[i], dedup[(i + 1) % n]
        if orientation(a, b, c) != 0:
            out.append(b)
    if len(out) >= 3:
        start = min(range(len(out)), key=lambda i: out[i])
        out = out[start:] + out[:start]
    return out


def build_enlarged_separator(scene: Scene) -> ConvexSeparator:
    """Translate each blue-hull edge outward to its first red or
    environment contact and intersect the half-planes with the
    environment."""
    _require_convex(scene)
    hull = convex_hull(list(scene.blue))
    for i, p in enumerate(scene.red):
        if hull.contains(p, "closed"):
            raise RedInsideHull(i)

    constraints: list[tuple[int, int, int, tuple[str, int]]] = []
    for a, b in hull.edges():
        dx = b.hx - a.hx
        dy = b.hy - a.hy
        nx, ny = dy, -dx  # outward normal of a counterclockwise edge
        base = nx * a.hx + ny * a.hy

        def offset(p: Point) -> int:
            return nx * p.hx + ny * p.hy - base

        red_hits = [(offset(p), i) for i, p in enumerate(scene.red) if offset(p) > 0]
        if red_hits:
            delta, widx = min(red_hits)
            witness = ("red", widx)
        else:
            delta, widx = max((offset(p), i) for i, p in enumerate(scene.polygon))
            witness = ("boundary", widx)
        constraints.append((nx, ny, base + delta, witness))

    region = list(scene.polygon)
    for nx, ny, rhs, _ in constraints:
        region = _clip_halfplane(region, nx, ny, rhs)
    region = _normalize_cycle(region)
    chain = ConvexChain(tuple(region))

    witnesses: list[tuple[str, int]] = []
    poly = scene.polygon
    npoly = len(poly)
    for a, b in chain.edges():
        tagged = None
        for nx, ny, rhs, witness in constraints:
            if nx * a.hx + ny * a.hy == rhs * a.hw and nx * b.hx + ny * b.hy == rhs * b.hw:
                if tagged is None or (tagged[0] == "boundary" and witness[0] == "red"):
                    tagged = witness
        if tagged is None:
            for i in range(npoly):
                e = Line.through(poly[i], poly[(i + 1) % npoly])
                if e.side(a) == 0 and e.side(b) == 0:
                    tagged = ("boundary", i)
                    break
        if tagged is None:
            raise NonConvexEnvironment("separator edge matches no constraint")
        witnesses.append(tagged)
    return ConvexSeparator(chain=chain, edge_witness=tuple(witnesses))


def candidate_family(c: ConvexSeparator, apex: int) -> CandidateFamily:
    """Dyadic triangle family anchored at one separator vertex.

    A pair of other vertices qualifies when the chain between them that
    avoids the apex has d strictly interior vertices with d zero or a
    power of two.
    """
    n = len(c.chain)
    allowed = {0}
    d = 1
    while d <= n:
        allowed.add(d)
        d *= 2
    tris = []
    for s in range(1, n - 1):
        for t in range(s + 1, n):
            if t - s - 1 in allowed:
                tris.append((apex, (apex + s) % n, (apex + t) % n))
    return CandidateFamily(apex=apex, triangles=tuple(tris))


def count_blue_closed(t: Triangle, scene: Scene) -> int:
    return sum(1 for p in scene.blue if point_in_triangle(p, t, "closed"))


def _chain_triangle(c: ConvexSeparator, idxs: tuple[int, int, int]) -> Triangle:
    v = c.chain.vertices
    return Triangle(v[idxs[0]], v[idxs[1]], v[idxs[2]])


def _tri_key(t: Triangle):
    return tuple(p.key() for p in t.sorted_vertices())


def _best(candidates) -> tuple[Triangle, int]:
    """Maximum blue count with deterministic ties: smallest sorted corner
    tuple wins."""
    best = None
    for tri, count in candidates:
        item = (-count, tuple(t.sorted_vertices() for t in (tri,))[0], tri)
        if best is None or (item[0], item[1]) < (best[0], best[1]):
            best = item
    if best is None:
        raise ValueError("no candidate triangles")
    return best[2], -best[0]


def exact_apex_optimum(c: ConvexSeparator, apex: int, scene: Scene) -> tuple[Triangle, int]:
    """Exhaustive best triangle anchored at one separator vertex."""
    n = len(c.chain)
    cands = []
    for s in range(1, n - 1):
        for t in range(s + 1, n):
            tri = _chain_triangle(c, (apex, (apex + s) % n, (apex + t) % n))
            cands.append((tri, count_blue_closed(tri, scene)))
    return _best(cands)


def exact_vertex_optimum(c: ConvexSeparator, scene: Scene) -> tuple[Triangle, int]:
    """Exhaustive best triangle over all separator vertex triples."""
    n = len(c.chain)
    cands = []
    for i, j, k in combinations(range(n), 3):
        tri = _chain_triangle(c, (i, j, k))
        cands.append((tri, count_blue_closed(tri, scene)))
    return _best(cands)


def family_optimum(c: ConvexSeparator, apex: int, scene: Scene) -> tuple[Triangle, int]:
    """Exhaustive best triangle within the dyadic family of one apex."""
    fam = candidate_family(c, apex)
    cands = [( _chain_triangle(c, idxs), 0) for idxs in fam.triangles]
    cands = [(tri, count_blue_closed(tri, scene)) for tri, _ in cands]
    return _best(cands)


def approx_max_separator(scene: Scene, apex_policy: str = "lowest_vertex") -> MaxSepResult:
    """Constant-factor approximation of the maximum triangular separator.

    The returned triangle lies inside the enlarged convex separator, so
    it contains no red strictly and stays inside the environment; its
    blue count is within a factor 28 of the best achievable by any
    triangle.
    """
    c = build_enlarged_separator(scene)
    n = len(c.chain)
    if apex_policy == "lowest_vertex":
        apexes = [min(range(n), key=lambda i: c.chain.vertices[i])]
    elif apex_policy == "all_vertices":
        apexes = list(range(n))
    else:
        raise ValueError(f"unknown apex policy {apex_policy!r}")

    best = None
    family_size = 0
    for apex in apexes:
        fam = candidate_family(c, apex)
        family_size += len(fam.triangles)
        for idxs in fam.triangles:
            tri = _chain_triangle(c, idxs)
            count = count_blue_closed(tri, scene)
            item = (-count, tri.sorted_vertices(), tri, apex)
            if best is None or (item[0], item[1]) < (best[0], best[1]):
                best = item
    tri, apex = best[2], best[3]
    return MaxSepResult(triangle=tri, blue_count=-best[0],
                        apex_used=c.chain.vertices[apex], family_size=family_size)


def line_family_optimum(scene: Scene) -> tuple[Triangle, int]:
    """Exhaustive reference search over triangles whose side lines pass
    through two scene points each; a lower bound on the true optimum.
    Gated to small scenes."""
    pts = list(scene.red) + list(scene.blue)
    n = len(pts)
    if n > 12:
        raise SceneTooLarge(f"{n} points exceeds the exhaustive-search gate of 12")
    lines = []
    seen = set()
    for i in range(n):
        for j in range(i + 1, n):
            ln = Line.through(pts[i], pts[j])
            key = (ln.a, ln.b, ln.c)
            if key not in seen:
                seen.add(key)
                lines.append(ln)

    poly = list(scene.polygon)
    best: tuple[Triangle, int] | None = None
    for la, lb, lc in combinations(lines, 3):
        p1 = la.intersect(lb)
        p2 = la.intersect(lc)
        p3 = lb.intersect(lc)
        if p1 is None or p2 is None or p3 is None:
            continue
        tri = Triangle(p1, p2, p3)
        if tri.is_degenerate():
            continue
        count = count_blue_closed(tri, scene)
        if best is not None and count <= best[1]:
            continue
        if any(point_in_triangle(q, tri, "open") for q in scene.red):
            continue
        if not triangle_inside_polygon(tri, poly):
            continue
        best = (tri, count)
    if best is None:
        # no admissible triangle at all; report a degenerate zero result
        return None, 0
    return best


def lemma_chain_report(scene: Scene) -> dict:
    """All approximation-chain inequalities on one scene, as data."""
    c = build_enlarged_separator(scene)
    n = len(c.chain)
    vo_tri, vo = exact_vertex_optimum(c, scene)
    per_apex = []
    ok_vertex_vs_apex = True
    ok_family_sandwich = True
    for apex in range(n):
        _, ao = exact_apex_optimum(c, apex, scene)
        _, fo = family_optimum(c, apex, scene)
        per_apex.append({"apex": apex, "apex_optimum": ao, "family_optimum": fo})
        if vo > 2 * ao:
            ok_vertex_vs_apex = False
        if not (fo <= ao <= 2 * fo):
            ok_family_sandwich = False
    result = approx_max_separator(scene)
    report = {
        "separator_size": n,
        "vertex_optimum": vo,
        "per_apex": per_apex,
        "approx_blue_count": result.blue_count,
        "vertex_le_2_apex": ok_vertex_vs_apex,
        "family_sandwich": ok_family_sandwich,
    }
    if scene.b + scene.r <= 12:
        _, lfo = line_family_optimum(scene)
        report["line_family_optimum"] = lfo
        report["external_le_28_approx"] = lfo <= 28 * result.blue_count
    return report
