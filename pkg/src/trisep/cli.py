"""Command line interface.

Subcommands: validate, enumerate, maxsep, generate, bench. Domain
outcomes (such as a red point inside the blue hull) are reported as
results with exit code 0; malformed inputs exit 2; violated runtime
preconditions exit 1. Reports are JSON on stdout; timings are included
but excluded from any reproducibility claims.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .arrangement import build_arrangement
from .enumeration import (
    brute_force_separators,
    enumerate_with_stats,
    sorted_separators,
    triangle_record,
)
from .errors import (
    NonConvexEnvironment,
    RedInsideHull,
    SceneError,
    SceneTooLarge,
    TriSepError,
)
from .generators import generate_lower_bound, generate_random, generate_tight_ring
from .maxsep import approx_max_separator, lemma_chain_report
from .ranking import rank_arrangement, rank_table
from .sceneio import load_scene, scene_digest, write_scene
from .svgout import render_svg


def _emit(report: dict) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))


def _cmd_validate(args) -> int:
    try:
        scene = load_scene(args.scene, check_general_position=not args.no_gp_check)
    except SceneError as e:
        print(f"invalid scene: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    _emit({"ok": True, "digest": scene_digest(scene),
           "blue": scene.b, "red": scene.r, "polygon_vertices": scene.k})
    return 0


def _cmd_enumerate(args) -> int:
    try:
        scene = load_scene(args.scene, check_general_position=not args.no_gp_check)
    except SceneError as e:
        print(f"invalid scene: {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    report = {"mode": "enumerate", "digest": scene_digest(scene), "backend": args.backend}
    timings = {}
    t0 = time.perf_counter()
    try:
        graph = build_arrangement(scene)
    except RedInsideHull as e:
        report.update({"separators": [], "separator_count": 0, "reason": "RedInsideHull",
                       "red_index": e.index})
        _emit(report)
        return 0
    timings["arrangement_s"] = round(time.perf_counter() - t0, 6)

    t0 = time.perf_counter()
    labels = rank_arrangement(graph)
    timings["ranking_s"] = round(time.perf_counter() - t0, 6)

    t0 = time.perf_counter()
    triangles, stats = enumerate_with_stats(graph, labels, args.backend, args.workers)
    timings["enumeration_s"] = round(time.perf_counter() - t0, 6)

    ordered = sorted_separators(triangles)
    report.update({
        "reason": None,
        "separator_count": len(ordered),
        "vertex_type_counts": graph.type_counts(),
        "counters": {
            "corners_considered": stats.corners_considered,
            "corners_processed": stats.corners_processed,
            "walk_steps": stats.walk_steps,
            "rejected_by_validation": stats.rejected_by_validation,
            "rank_assignments": labels.stats.rank_assignments,
            "edges": graph.edge_count(),
            "monotonicity_violations": len(labels.stats.monotonicity_violations),
        },
        "timings": timings,
    })

    if args.brute_force:
        t0 = time.perf_counter()
        oracle = brute_force_separators(scene)
        report["timings"]["brute_force_s"] = round(time.perf_counter() - t0, 6)
        report["brute_force_count"] = len(oracle)
        match = oracle == triangles
        report["match"] = match
        _emit(report)
        print("MATCH" if match else "MISMATCH")
        if not match:
            return 1
    else:
        _emit(report)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for t in ordered:
                fh.write(json.dumps(triangle_record(t), sort_keys=True) + "\n")
    if args.ranks_table:
        with open(args.ranks_table, "w", encoding="utf-8") as fh:
            fh.write(rank_table(graph, labels) + "\n")
    if args.svg:
        svg = render_svg(scene, ("hull", "arrangement", "separators"),
                         graph=graph, labels=labels, separators=triangles)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_maxsep(args) -> int:
    try:
        scene = load_scene(args.scene, check_general_position=not args.no_gp_check)
    except SceneError as e:
        print(f"invalid scene: {type(e).__name__}: {e}", file=sys.stderr)
        return 2

    report = {"mode": "maxsep", "digest": scene_digest(scene)}
    policy = "all_vertices" if args.apex == "all" else "lowest_vertex"
    t0 = time.perf_counter()
    try:
        result = approx_max_separator(scene, policy)
    except RedInsideHull as e:
        report.update({"reason": "RedInsideHull", "red_index": e.index})
        _emit(report)
        return 0
    except (NonConvexEnvironment, SceneTooLarge) as e:
        print(f"domain error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    report.update({
        "reason": None,
        "blue_count": result.blue_count,
        "blue_total": scene.b,
        "apex": list(result.apex_used.coord_strings()),
        "family_size": result.family_size,
        "guarantee_factor": 28,
        "triangle": [list(p.coord_strings()) for p in result.triangle.vertices()],
        "timings": {"maxsep_s": round(time.perf_counter() - t0, 6)},
    })
    if args.oracles:
        chain = lemma_chain_report(scene)
        report["oracles"] = chain
        checks = [("vertex_le_2_apex", chain["vertex_le_2_apex"]),
                  ("family_sandwich", chain["family_sandwich"])]
        if "external_le_28_approx" in chain:
            checks.append(("external_le_28_approx", chain["external_le_28_approx"]))
        _emit(report)
        for name, ok in checks:
            print(f"{name}: {'OK' if ok else 'FAIL'}")
        if not all(ok for _, ok in checks):
            return 1
    else:
        _emit(report)
    if args.svg:
        svg = render_svg(scene, ("hull", "convex_separator", "result"),
                         result_triangle=result.triangle)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return 0


def _cmd_generate(args) -> int:
    try:
        if args.kind == "random":
            scene = generate_random(args.seed, args.blue, args.red, args.poly,
                                    env_shape=args.env_shape,
                                    allow_red_inside=args.allow_red_inside,
                                    red_profile=args.red_profile)
        elif args.kind == "lower-bound":
            scene = generate_lower_bound(args.t)
        else:
            scene = generate_tight_ring(args.blue, args.red)
    except TriSepError as e:
        print(f"generation failed: {e}", file=sys.stderr)
        return 1
    text = write_scene(scene)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_bench(args) -> int:
    t0 = time.perf_counter()
    scene = generate_random(args.seed, args.blue, args.red, args.poly,
                            env_shape="convex", red_profile="ring")
    gen_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    graph = build_arrangement(scene, strict=False)
    arr_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    labels = rank_arrangement(graph)
    rank_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    triangles, stats = enumerate_with_stats(graph, labels, "rank", args.workers)
    enum_s = time.perf_counter() - t0

    two_r = 2 * scene.r
    vertex_bound = two_r * (two_r - 1) // 2 + 6 * scene.r
    edges = graph.edge_count()
    report = {
        "mode": "bench",
        "digest": scene_digest(scene),
        "blue": scene.b, "red": scene.r, "polygon_vertices": scene.k,
        "vertices": len(graph.vertices),
        "vertex_bound": vertex_bound,
        "vertices_within_bound": len(graph.vertices) <= vertex_bound,
        "edges": edges,
        "rank_assignments": labels.stats.rank_assignments,
        "rank_assignments_within_bound": labels.stats.rank_assignments <= 2 * edges,
        "separators": len(triangles),
        "walk_steps": stats.walk_steps,
        "timings": {
            "generate_s": round(gen_s, 3),
            "arrangement_s": round(arr_s, 3),
            "ranking_s": round(rank_s, 3),
            "enumeration_s": round(enum_s, 3),
            "pipeline_s": round(arr_s + rank_s + enum_s, 3),
        },
    }
    _emit(report)
    ok = report["vertices_within_bound"] and report["rank_assignments_within_bound"]
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trisep",
                                 description="Triangular separators of red/blue scenes "
                                             "in polygonal environments")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a scene file against every invariant")
    p.add_argument("scene")
    p.add_argument("--no-gp-check", action="store_true",
                   help="skip the cubic collinearity sweep (large scenes)")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("enumerate", help="report all inscribed triangular separators")
    p.add_argument("scene")
    p.add_argument("--backend", choices=("rank", "oracle"), default="rank")
    p.add_argument("--brute-force", action="store_true",
                   help="also run the exhaustive oracle and compare")
    p.add_argument("--out", help="write one JSON record per separator to this file")
    p.add_argument("--svg", help="write an SVG rendering to this file")
    p.add_argument("--ranks-table", help="write the label table to this file")
    p.add_argument("--workers", type=int, default=None,
                   help="candidate partitions (default TRISEP_THREADS or 1)")
    p.add_argument("--no-gp-check", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("maxsep", help="28-approximate maximum triangular separator")
    p.add_argument("scene")
    p.add_argument("--apex", choices=("lowest", "all"), default="lowest")
    p.add_argument("--oracles", action="store_true",
                   help="also check every approximation-chain inequality")
    p.add_argument("--svg", help="write an SVG rendering to this file")
    p.add_argument("--no-gp-check", action="store_true")
    p.set_defaults(func=_cmd_maxsep)

    p = sub.add_parser("generate", help="write a generated scene")
    p.add_argument("kind", choices=("random", "lower-bound", "tight-ring"))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--blue", type=int, default=8)
    p.add_argument("--red", type=int, default=5)
    p.add_argument("--poly", type=int, default=8)
    p.add_argument("--env-shape", choices=("convex", "star"), default="convex")
    p.add_argument("--red-profile", choices=("spread", "ring"), default="spread")
    p.add_argument("--allow-red-inside", action="store_true")
    p.add_argument("--t", type=int, default=3, help="fan size for the lower-bound family")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="time the pipeline on a large ring scene")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--blue", type=int, default=1000)
    p.add_argument("--red", type=int, default=200)
    p.add_argument("--poly", type=int, default=64)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_bench)
    return ap


def cli(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
