import pytest

from trisep.errors import NonConvexEnvironment, RedInsideHull, SceneTooLarge
from trisep.generators import generate_random, generate_tight_ring
from trisep.geometry import ConvexChain, Point, Triangle, point_in_triangle
from trisep.maxsep import (
    ConvexSeparator,
    approx_max_separator,
    build_enlarged_separator,
    candidate_family,
    count_blue_closed,
    exact_apex_optimum,
    exact_vertex_optimum,
    family_optimum,
    lemma_chain_report,
    line_family_optimum,
)
from trisep.scene import Scene
from .conftest import L_SHAPE

PLUS_SCENE = dict(
    blue=[(-4, -4), (4, -4), (4, 4), (-4, 4)],
    red=[(6, 0), (0, 6), (-6, 0), (0, -6)],
    polygon=[(20, -20), (20, 20), (-20, 20), (-20, -20)],
)


def plus_scene():
    return Scene.from_ints(check_general_position=False, **PLUS_SCENE)


class TestEnlargedSeparator:
    def test_every_edge_stops_at_its_red(self):
        c = build_enlarged_separator(plus_scene())
        assert {v.key() for v in c.chain.vertices} == \
            {(6, 6, 1), (-6, 6, 1), (-6, -6, 1), (6, -6, 1)}
        assert sorted(c.edge_witness) == [("red", 0), ("red", 1), ("red", 2), ("red", 3)]

    def test_no_reds_gives_whole_environment(self):
        scene = Scene.from_ints(blue=PLUS_SCENE["blue"], red=[],
                                polygon=PLUS_SCENE["polygon"], check_general_position=False)
        c = build_enlarged_separator(scene)
        assert set(v.key() for v in c.chain.vertices) == \
            set(Point(x, y).key() for x, y in PLUS_SCENE["polygon"])
        assert all(w[0] == "boundary" for w in c.edge_witness)

    def test_containment_properties(self):
        for spec in (plus_scene(), generate_tight_ring(6, 12)):
            c = build_enlarged_separator(spec)
            for p in spec.blue:
                assert c.chain.contains(p, "closed")
            for p in spec.red:
                assert not c.chain.contains(p, "open")
            poly_chain = ConvexChain(tuple(spec.polygon))
            for v in c.chain.vertices:
                assert poly_chain.contains(v, "closed")

    def test_nonconvex_environment_rejected(self):
        scene = Scene.from_ints(blue=[(0, 0), (4, 0), (0, 4)], red=[],
                                polygon=L_SHAPE, check_general_position=False)
        with pytest.raises(NonConvexEnvironment):
            build_enlarged_separator(scene)

    def test_red_inside_hull_rejected(self):
        scene = Scene.from_ints(blue=PLUS_SCENE["blue"], red=[(0, 0)],
                                polygon=PLUS_SCENE["polygon"], check_general_position=False)
        with pytest.raises(RedInsideHull):
            build_enlarged_separator(scene)


HEXAGON = ConvexChain(tuple(Point(x, y) for x, y in
                            [(4, 0), (2, 3), (-2, 3), (-4, 0), (-2, -3), (2, -3)]))


def hexagon_separator():
    return ConvexSeparator(chain=HEXAGON, edge_witness=tuple([("boundary", 0)] * 6))


class TestCandidateFamily:
    def test_triangle_chain_single_member(self):
        tri_chain = ConvexChain(tuple(Point(x, y) for x, y in [(0, 0), (4, 0), (0, 4)]))
        c = ConvexSeparator(chain=tri_chain, edge_witness=tuple([("boundary", 0)] * 3))
        fam = candidate_family(c, 0)
        assert fam.triangles == ((0, 1, 2),)

    def test_hexagon_frozen_size(self):
        # admissible interior gap sizes are {0, 1, 2, 4}; direct pair scan
        # over a 6-cycle yields nine members
        fam = candidate_family(hexagon_separator(), 0)
        assert len(fam.triangles) == 9
        assert all(t[0] == 0 for t in fam.triangles)

    @pytest.mark.parametrize("n", [3, 4, 5, 6, 9, 13, 17])
    def test_size_bound(self, n):
        import math
        pts = []
        for i in range(n):
            ang = 2 * math.pi * i / n
            pts.append(Point(round(1000 * math.cos(ang)), round(1000 * math.sin(ang))))
        chain = ConvexChain(tuple(pts))
        c = ConvexSeparator(chain=chain, edge_witness=tuple([("boundary", 0)] * n))
        fam = candidate_family(c, 0)
        assert len(fam.triangles) <= (n - 1) * (math.floor(math.log2(n)) + 2)


class TestCounting:
    def test_count_blue_closed(self):
        scene = plus_scene()
        everything = Triangle(Point(-19, -19), Point(19, -19), Point(0, 19))
        assert count_blue_closed(everything, scene) == scene.b
        nothing = Triangle(Point(10, 10), Point(12, 10), Point(10, 12))
        assert count_blue_closed(nothing, scene) == 0
        # boundary counts as covered
        corner = Triangle(Point(-4, -4), Point(4, -4), Point(4, 4))
        assert count_blue_closed(corner, scene) == 3


FIXTURE_SEED = dict(seed=11, b=7, r=5, k=8, env_shape="convex")


class TestOptima:
    def test_generated_fixture_frozen_values(self):
        # values frozen from the exhaustive scans on this deterministic scene
        scene = generate_random(**FIXTURE_SEED)
        c = build_enlarged_separator(scene)
        assert len(c.chain) == 6
        assert exact_vertex_optimum(c, scene)[1] == 7
        assert [exact_apex_optimum(c, a, scene)[1] for a in range(6)] == [7, 4, 7, 7, 6, 5]
        assert [family_optimum(c, a, scene)[1] for a in range(6)] == [7, 4, 7, 7, 6, 5]

    def test_apex_below_vertex_optimum(self):
        scene = generate_random(**FIXTURE_SEED)
        c = build_enlarged_separator(scene)
        _, vo = exact_vertex_optimum(c, scene)
        for a in range(len(c.chain)):
            assert exact_apex_optimum(c, a, scene)[1] <= vo

    def test_triangle_environment_unique_triple(self):
        # triangular environment, no reds: the separator is the whole
        # triangle and the unique vertex triple covers everything
        scene = Scene.from_ints(blue=[(0, 8), (-7, -4), (8, -5)], red=[],
                                polygon=[(40, -30), (1, 45), (-40, -31)])
        c = build_enlarged_separator(scene)
        assert len(c.chain) == 3
        tri, count = exact_vertex_optimum(c, scene)
        assert count == scene.b
        res = approx_max_separator(scene)
        assert res.blue_count == scene.b and res.family_size == 1


class TestApprox:
    def test_full_coverage_when_separator_exists(self):
        scene = generate_random(**FIXTURE_SEED)
        res = approx_max_separator(scene)
        assert res.blue_count == scene.b == 7
        assert res.family_size == 9

    def test_all_vertices_at_least_as_good(self):
        scene = generate_random(**FIXTURE_SEED)
        low = approx_max_separator(scene, "lowest_vertex")
        best = approx_max_separator(scene, "all_vertices")
        assert best.blue_count >= low.blue_count

    def test_result_triangle_stays_in_separator(self):
        ring = generate_tight_ring(6, 12)
        res = approx_max_separator(ring)
        assert res.blue_count > 0
        c = build_enlarged_separator(ring)
        for v in res.triangle.vertices():
            assert c.chain.contains(v, "closed")
        for p in ring.red:
            assert not point_in_triangle(p, res.triangle, "open")

    def test_deterministic(self):
        a = approx_max_separator(generate_tight_ring(6, 12))
        b = approx_max_separator(generate_tight_ring(6, 12))
        assert a == b


class TestLineFamily:
    def test_no_reds_triangular_hull(self):
        scene = Scene.from_ints(blue=[(0, 8), (-7, -4), (8, -5)], red=[],
                                polygon=[(30, -29), (28, 31), (-31, 27), (-29, -32)])
        _, count = line_family_optimum(scene)
        assert count == scene.b

    def test_gate(self):
        scene = generate_random(2, b=10, r=6, k=8, env_shape="convex")
        with pytest.raises(SceneTooLarge):
            line_family_optimum(scene)

    def test_fixture_value_frozen(self):
        scene = generate_random(**FIXTURE_SEED)
        assert line_family_optimum(scene)[1] == 7


class TestLemmaChain:
    def test_plus_scene(self):
        rep = lemma_chain_report(plus_scene())
        assert rep["vertex_le_2_apex"] and rep["family_sandwich"]
        assert rep["external_le_28_approx"]

    def test_tight_ring(self):
        rep = lemma_chain_report(generate_tight_ring(6, 12))
        assert rep["vertex_le_2_apex"] and rep["family_sandwich"]
        assert rep["approx_blue_count"] > 0
