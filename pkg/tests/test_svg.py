import pathlib

from trisep.svgout import render_svg

GOLDEN = pathlib.Path(__file__).parent / "golden" / "s1_hull.svg"


def test_points_only(s1_scene):
    svg = render_svg(s1_scene)
    assert svg.startswith("<?xml")
    assert svg.count("<circle") == s1_scene.b + s1_scene.r
    assert "<polygon" in svg  # the environment itself


def test_deterministic(s1_scene):
    a = render_svg(s1_scene, ("hull", "arrangement", "separators"))
    b = render_svg(s1_scene, ("hull", "arrangement", "separators"))
    assert a == b


def test_golden_hull_overlay(s1_scene):
    svg = render_svg(s1_scene, ("hull",))
    assert svg == GOLDEN.read_text()


def test_rank_labels(s1_scene):
    svg = render_svg(s1_scene, ("ranks",))
    assert "<text" in svg and "v0:" in svg


def test_maxsep_overlays():
    from trisep.generators import generate_tight_ring
    scene = generate_tight_ring(6, 12)
    svg = render_svg(scene, ("hull", "convex_separator", "result"))
    assert svg.count("<polygon") >= 4  # environment, hull, separator, result
