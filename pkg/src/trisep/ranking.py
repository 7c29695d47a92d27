"""Rank, level and extreme labels over the arrangement graph.

The labels implement the candidacy filter for separator corners:

  rank      counts, per incident line, the reds known to obstruct the
            vertex's tangent wedge. It is built by outward sweeps along
            each line from its tangency point: passing the line's own
            red adds one (that red stays on the wedge boundary), and
            passing a crossing whose other line carries its red between
            the crossing and that line's tangency point adds one (that
            red then lies strictly inside every farther wedge). A vertex
            that itself coincides with a red also counts itself once.
            Vertices with rank >= 2 are never separator corners, while
            vertices with an empty wedge always stay below 2.
  level     breadth-first discovery depth from the ancestor set.
  extreme   per line and side of its tangency point, the outermost
            vertex of rank < 2 before the first vertex of rank >= 2.

Sweeps are deterministic, process every (vertex, line) incidence exactly
once, and keep the maximum over a vertex's incident lines when the two
sweeps disagree, so reruns are byte-identical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .arrangement import ArrangementGraph, TYPE_I, TYPE_III


@dataclass
class RankStats:
    rank_assignments: int = 0
    level_assignments: int = 0
    monotonicity_violations: list[tuple[int, int, int]] = field(default_factory=list)


@dataclass
class RankLabels:
    rank: list[int]
    level: list[int | None]
    red_parent: dict[int, tuple[int, int] | None]
    ancestors: frozenset[int]
    extremes: dict[tuple[int, int], int | None]
    stats: RankStats

    def extreme_for(self, g: ArrangementGraph, vid: int, lid: int) -> int | None:
        """Directional extreme a corner at vid must pair with on lid:
        the one on the far side of the line's tangency point."""
        side = g.side_of_touch(vid, lid)
        if side == 0:
            return None
        return self.extremes.get((lid, -side))


def _canonical_upper(d: tuple[int, int]) -> tuple[int, int]:
    dx, dy = d
    if dy < 0 or (dy == 0 and dx < 0):
        return (-dx, -dy)
    return (dx, dy)


def _min_angle_line(g: ArrangementGraph, line_ids: list[int]) -> int:
    """Line of smallest direction angle in [0, pi), vertical counting as
    pi/2; exact comparison by cross product of upper-half directions."""
    best = line_ids[0]
    best_d = _canonical_upper(g.lines[best].line.direction())
    for lid in line_ids[1:]:
        d = _canonical_upper(g.lines[lid].line.direction())
        cross = best_d[0] * d[1] - best_d[1] * d[0]
        if cross < 0:
            best, best_d = lid, d
    return best


def initialize_ancestors(g: ArrangementGraph) -> frozenset[int]:
    """The rank-0 seed set: for every tangency-point vertex, the first
    vertices in both directions along its single line, or along its
    minimum-slope line when several lines touch there."""
    out: set[int] = set()
    seen_touch: set[int] = set()
    for tl in g.lines:
        tv = tl.touch_vid
        if tv in seen_touch:
            continue
        seen_touch.add(tv)
        lids = g.vertices[tv].line_ids
        chosen = lids[0] if len(lids) == 1 else _min_angle_line(g, lids)
        order = g.lines[chosen].vertex_order
        idx = order.index(tv)
        if idx > 0:
            out.add(order[idx - 1])
        if idx + 1 < len(order):
            out.add(order[idx + 1])
    return frozenset(out)


def propagate_ranks(g: ArrangementGraph, ancestors: frozenset[int]) -> RankLabels:
    """Assign rank and level to every vertex of the graph."""
    nv = len(g.vertices)
    rank = [0] * nv
    stats = RankStats()

    # per-line outward sweeps; a vertex keeps the maximum over its lines
    for tl in g.lines:
        order = tl.vertex_order
        ti = order.index(tl.touch_vid)
        lo, hi = tl.params_range
        red_on_segment = lo <= tl.red_param <= hi
        for direction in (1, -1):
            idxs = range(ti + 1, len(order)) if direction == 1 else range(ti - 1, -1, -1)
            wedge = 0
            passed_red = 0
            for oi in idxs:
                vid = order[oi]
                t = tl.params[oi]
                if red_on_segment and passed_red == 0:
                    if (direction == 1 and tl.touch_param < tl.red_param < t) or \
                       (direction == -1 and t < tl.red_param < tl.touch_param):
                        passed_red = 1
                value = wedge + passed_red
                if g.vertices[vid].vtype == TYPE_I:
                    value += 1
                stats.rank_assignments += 1
                if value > rank[vid]:
                    rank[vid] = value
                # crossing event: the other line's red sits between this
                # crossing and that line's tangency point, so it falls
                # strictly inside every wedge farther out on this side
                other = g.other_line(vid, tl.line_id)
                if other is not None:
                    om = g.lines[other]
                    t_on_other = None
                    for l2, i2 in g.vertices[vid].incident:
                        if l2 == other:
                            t_on_other = om.params[i2]
                            break
                    lo2 = min(om.touch_param, t_on_other)
                    hi2 = max(om.touch_param, t_on_other)
                    if lo2 < om.red_param < hi2:
                        wedge += 1

    # levels: plain breadth-first distance from the ancestor set;
    # boundary vertices are discovered but not expanded
    level: list[int | None] = [None] * nv
    queue = deque()
    for vid in sorted(ancestors):
        level[vid] = 0
        queue.append(vid)
        stats.level_assignments += 1
    while queue:
        vid = queue.popleft()
        if g.vertices[vid].vtype == TYPE_III:
            continue
        for u, _lid in g.neighbors(vid):
            if level[u] is None:
                level[u] = level[vid] + 1
                stats.level_assignments += 1
                queue.append(u)

    red_parent: dict[int, tuple[int, int] | None] = {}
    for tl in g.lines:
        red_key = g.scene.red[tl.red_index].key()
        vid = g.vertex_at(g.scene.red[tl.red_index])
        if vid is not None and g.vertices[vid].point.key() == red_key \
                and tl.line_id in g.vertices[vid].line_ids:
            red_parent[tl.line_id] = (vid, level[vid] if level[vid] is not None else -1)
        else:
            red_parent[tl.line_id] = None

    for tl in g.lines:
        for side in (1, -1):
            prev = None
            for vid in g.outward_slice(tl.line_id, side):
                if prev is not None and rank[vid] < prev:
                    stats.monotonicity_violations.append((tl.line_id, side, vid))
                prev = rank[vid]

    return RankLabels(rank=rank, level=level, red_parent=red_parent,
                      ancestors=ancestors, extremes={}, stats=stats)


def compute_extremes(g: ArrangementGraph, labels: RankLabels) -> RankLabels:
    """Fill the per-(line, side) extreme table in place and return it."""
    labels.extremes = directional_extremes(g, lambda vid: labels.rank[vid] < 2)
    return labels


def directional_extremes(g: ArrangementGraph, candidate) -> dict[tuple[int, int], int | None]:
    """Outermost vertex satisfying the candidacy predicate before the
    first failing vertex, per line and per side of its tangency point."""
    out: dict[tuple[int, int], int | None] = {}
    for tl in g.lines:
        for side in (1, -1):
            last = None
            for vid in g.outward_slice(tl.line_id, side):
                if not candidate(vid):
                    break
                last = vid
            out[(tl.line_id, side)] = last
    return out


def rank_arrangement(g: ArrangementGraph) -> RankLabels:
    """Ancestors, ranks, levels and extremes in one call."""
    labels = propagate_ranks(g, initialize_ancestors(g))
    return compute_extremes(g, labels)


def rank_table(g: ArrangementGraph, labels: RankLabels) -> str:
    """Plain-text dump of (vertex, type, rank, level, extremes)."""
    rows = ["vid  type  rank  level  extreme"]
    for v in g.vertices:
        if v.vtype == TYPE_III and len(v.incident) < 2:
            ext = "-"
        else:
            parts = []
            for lid in v.line_ids:
                e = labels.extreme_for(g, v.vertex_id, lid)
                parts.append(f"v{e}" if e is not None else "-")
            ext = ",".join(parts) if parts else "-"
        lv = labels.level[v.vertex_id]
        rows.append(f"v{v.vertex_id:<4} {v.vtype:<4} {labels.rank[v.vertex_id]:<5} "
                    f"{lv if lv is not None else '-':<6} {ext}")
    return "\n".join(rows)
