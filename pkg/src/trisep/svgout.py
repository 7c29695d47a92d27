"""Deterministic SVG rendering of scenes and overlays.

Coordinates are converted to floats for display only; element order,
colors and number formatting are fixed so identical inputs give
byte-identical files.
"""

from __future__ import annotations

from .geometry import Point

_MARGIN = 30.0
_SIZE = 720.0

_STYLE = {
    "polygon": 'fill="#f7f7f2" stroke="#444444" stroke-width="1.5"',
    "hull": 'fill="none" stroke="#2868c8" stroke-width="1.2" stroke-dasharray="6,3"',
    "line": 'stroke="#b8b8b8" stroke-width="0.7"',
    "separator": 'fill="#30b05022" stroke="#30b050" stroke-width="0.8"',
    "convexsep": 'fill="none" stroke="#8030b0" stroke-width="1.4"',
    "result": 'fill="#f0a03033" stroke="#f0a030" stroke-width="1.6"',
    "blue": 'fill="#2868c8"',
    "red": 'fill="#d03020"',
    "label": 'font-family="monospace" font-size="9" fill="#333333"',
}


class _View:
    def __init__(self, points: list[Point]):
        xs = [float(p.x) for p in points]
        ys = [float(p.y) for p in points]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1.0)
        self.scale = (_SIZE - 2 * _MARGIN) / span
        self.x0 = x0
        self.y1 = y1
        self.w = (x1 - x0) * self.scale + 2 * _MARGIN
        self.h = (y1 - y0) * self.scale + 2 * _MARGIN

    def pt(self, p: Point) -> tuple[str, str]:
        sx = (float(p.x) - self.x0) * self.scale + _MARGIN
        sy = (self.y1 - float(p.y)) * self.scale + _MARGIN
        return (f"{sx:.3f}", f"{sy:.3f}")


def _poly_path(view: _View, pts) -> str:
    return " ".join(",".join(view.pt(p)) for p in pts)


def render_svg(scene, overlays=(), graph=None, labels=None, separators=None,
               convex_separator=None, result_triangle=None) -> str:
    """Render a scene with any of the overlays: hull, arrangement, ranks,
    separators, convex_separator, result. Structures not passed in are
    computed on demand."""
    overlays = set(overlays)
    need_graph = overlays & {"arrangement", "ranks"}
    if need_graph and graph is None:
        from .arrangement import build_arrangement
        graph = build_arrangement(scene)
    if "ranks" in overlays and labels is None:
        from .ranking import rank_arrangement
        labels = rank_arrangement(graph)
    if "separators" in overlays and separators is None:
        from .arrangement import build_arrangement
        from .enumeration import enumerate_separators
        from .ranking import rank_arrangement
        if graph is None:
            graph = build_arrangement(scene)
        if labels is None:
            labels = rank_arrangement(graph)
        separators = enumerate_separators(graph, labels, "rank")
    if "convex_separator" in overlays and convex_separator is None:
        from .maxsep import build_enlarged_separator
        convex_separator = build_enlarged_separator(scene)
    if "result" in overlays and result_triangle is None:
        from .maxsep import approx_max_separator
        result_triangle = approx_max_separator(scene).triangle

    view = _View(list(scene.polygon))
    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(f'<svg xmlns="http://www.w3.org/2000/svg" width="{view.w:.0f}" '
               f'height="{view.h:.0f}" viewBox="0 0 {view.w:.3f} {view.h:.3f}">')
    out.append(f'<polygon points="{_poly_path(view, scene.polygon)}" {_STYLE["polygon"]}/>')

    if "arrangement" in overlays:
        for tl in graph.lines:
            a = view.pt(tl.clip_a)
            b = view.pt(tl.clip_b)
            out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" {_STYLE["line"]}/>')

    if "hull" in overlays:
        from .geometry import convex_hull
        hull = graph.hull if graph is not None else convex_hull(list(scene.blue))
        out.append(f'<polygon points="{_poly_path(view, hull.vertices)}" {_STYLE["hull"]}/>')

    if "separators" in overlays:
        for tri in sorted(separators):
            out.append(f'<polygon points="{_poly_path(view, tri.corners)}" {_STYLE["separator"]}/>')

    if "convex_separator" in overlays:
        out.append(f'<polygon points="{_poly_path(view, convex_separator.chain.vertices)}" '
                   f'{_STYLE["convexsep"]}/>')

    if "result" in overlays:
        out.append(f'<polygon points="{_poly_path(view, result_triangle.vertices())}" '
                   f'{_STYLE["result"]}/>')

    for p in scene.blue:
        x, y = view.pt(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="3.2" {_STYLE["blue"]}/>')
    for p in scene.red:
        x, y = view.pt(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="3.2" {_STYLE["red"]}/>')

    if "ranks" in overlays:
        for v in graph.vertices:
            x, y = view.pt(v.point)
            out.append(f'<text x="{x}" y="{y}" dx="4" dy="-3" {_STYLE["label"]}>'
                       f'v{v.vertex_id}:{labels.rank[v.vertex_id]}</text>')

    out.append("</svg>")
    return "\n".join(out) + "\n"
