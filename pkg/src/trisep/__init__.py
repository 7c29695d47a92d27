"""Triangular separation of red/blue point scenes in polygonal environments.

The package enumerates every inscribed triangular separator of a scene
(a triangle inside the environment covering all blue points and no red
point strictly), and, when none exists, computes a 28-approximate
maximum triangular separator inside a convex environment. All geometry
is exact over rational arithmetic.
"""

from .arrangement import (
    ArrangementGraph,
    ArrVertex,
    TangentLine,
    build_arrangement,
    build_tangent_lines,
    semi_triangle_red_empty,
)
from .enumeration import (
    CanonicalTriangle,
    brute_force_separators,
    enumerate_separators,
    enumerate_with_stats,
    validate_separator,
)
from .geometry import (
    BOUNDARY,
    COLLINEAR,
    INSIDE,
    LEFT,
    OUTSIDE,
    RIGHT,
    ConvexChain,
    Line,
    Point,
    Triangle,
    convex_hull,
    first_polygon_hit,
    orientation,
    point_in_simple_polygon,
    point_in_triangle,
    tangents_from_point,
    triangle_inside_polygon,
)
from .generators import generate_lower_bound, generate_random, generate_tight_ring
from .maxsep import (
    CandidateFamily,
    ConvexSeparator,
    MaxSepResult,
    approx_max_separator,
    build_enlarged_separator,
    candidate_family,
    count_blue_closed,
    exact_apex_optimum,
    exact_vertex_optimum,
    lemma_chain_report,
    line_family_optimum,
)
from .ranking import (
    RankLabels,
    compute_extremes,
    initialize_ancestors,
    propagate_ranks,
    rank_arrangement,
    rank_table,
)
from .scene import Scene, validate_scene
from .sceneio import load_scene, parse_scene, save_scene, scene_digest, write_scene
from .svgout import render_svg

__version__ = "0.1.0"
