"""Deterministic scene generators.

All generators are pure functions of their parameters: the RNG seed is
derived by hashing the full parameter tuple, retries increment a nonce,
and every emitted scene has passed full validation, so a given call
always returns byte-identical output.
"""

from __future__ import annotations

import hashlib
import math
import random

from .arrangement import build_arrangement
from .enumeration import brute_force_separators, validate_separator
from .errors import GenerationFailed, SceneError, TriSepError
from .geometry import INSIDE, ConvexChain, Line, Point, Triangle, convex_hull, point_in_simple_polygon
from .scene import Scene


def _derived_seed(*parts) -> int:
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


class _Retry(Exception):
    pass


def _sample_convex_polygon(rng: random.Random, k: int, radius: int) -> list[tuple[int, int]]:
    for _ in range(50):
        offsets = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
        pts = []
        for th in offsets:
            x = round(radius * math.cos(th))
            y = round(radius * math.sin(th))
            pts.append((x, y))
        if len(set(pts)) != k:
            continue
        try:
            ConvexChain(tuple(Point(x, y) for x, y in pts))
        except TriSepError:
            continue
        return pts
    raise _Retry


def _sample_star_polygon(rng: random.Random, k: int, radius: int) -> list[tuple[int, int]]:
    for _ in range(50):
        offsets = sorted(rng.uniform(0, 2 * math.pi) for _ in range(k))
        if min(b - a for a, b in zip(offsets, offsets[1:])) < 0.05:
            continue
        pts = []
        for i, th in enumerate(offsets):
            rr = rng.randint(int(radius * 0.4), radius) if i % 2 else radius
            pts.append((round(rr * math.cos(th)), round(rr * math.sin(th))))
        if len(set(pts)) != k:
            continue
        return pts
    raise _Retry


def _sample_disk_points(rng: random.Random, count: int, radius: int,
                        keep, taken: set) -> list[tuple[int, int]]:
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 400 * count + 400:
            raise _Retry
        x = rng.randint(-radius, radius)
        y = rng.randint(-radius, radius)
        if x * x + y * y > radius * radius:
            continue
        if (x, y) in taken or not keep(x, y):
            continue
        taken.add((x, y))
        out.append((x, y))
    return out


def generate_random(seed: int, b: int, r: int, k: int, env_shape: str = "convex",
                    allow_red_inside: bool = False,
                    red_profile: str = "spread") -> Scene:
    """Random valid scene: b blues clustered centrally, r reds spread in
    the environment outside the blue hull (or ringing it closely under
    the "ring" profile), k-vertex convex or star environment."""
    if b < 3:
        raise GenerationFailed("at least 3 blue points are required")
    if k < 3:
        raise GenerationFailed("at least 3 polygon vertices are required")
    if env_shape not in ("convex", "star"):
        raise GenerationFailed(f"unknown environment shape {env_shape!r}")
    base = _derived_seed("random", seed, b, r, k, env_shape, allow_red_inside, red_profile)
    big_scene = b + r + k > 60
    for attempt in range(400):
        rng = random.Random(base + attempt)
        try:
            scene = _try_random(rng, b, r, k, env_shape, allow_red_inside,
                                red_profile, big_scene)
        except (_Retry, SceneError):
            continue
        return scene
    raise GenerationFailed(f"no valid scene after 400 attempts (seed {seed})")


def _try_random(rng, b, r, k, env_shape, allow_red_inside, red_profile, big_scene) -> Scene:
    env_radius = rng.randint(850, 1000)
    if env_shape == "convex":
        poly = _sample_convex_polygon(rng, k, env_radius)
    else:
        poly = _sample_star_polygon(rng, k, env_radius)
    poly_pts = [Point(x, y) for x, y in poly]

    taken: set = set(poly)
    blue_radius = 300 if big_scene else 140
    blues = _sample_disk_points(rng, b, blue_radius, lambda x, y: True, taken)
    try:
        hull = convex_hull([Point(x, y) for x, y in blues])
    except TriSepError:
        raise _Retry

    def inside_env(x: int, y: int) -> bool:
        return point_in_simple_polygon(Point(x, y), poly_pts) == INSIDE

    def outside_hull(x: int, y: int) -> bool:
        return not hull.contains(Point(x, y), "closed")

    reds: list[tuple[int, int]] = []
    if allow_red_inside:
        # negative-test mode: force one red strictly inside the hull
        cx = sum(x for x, _ in blues) // b
        cy = sum(y for _, y in blues) // b
        for _ in range(200):
            x = cx + rng.randint(-10, 10)
            y = cy + rng.randint(-10, 10)
            if (x, y) not in taken and hull.contains(Point(x, y), "open") and inside_env(x, y):
                taken.add((x, y))
                reds.append((x, y))
                break
        if not reds:
            raise _Retry

    remaining = r - len(reds)
    if red_profile == "ring":
        hull_reach = max(max(abs(p.hx), abs(p.hy)) for p in hull.vertices)
        lo = int(hull_reach * 1.1) + 2
        hi = int(hull_reach * 1.35) + 6

        def keep(x, y):
            d2 = x * x + y * y
            return lo * lo <= d2 <= hi * hi and inside_env(x, y) and outside_hull(x, y)
        reds += _sample_disk_points(rng, remaining, hi, keep, taken)
    else:
        spread = int(env_radius * 0.72)

        def keep(x, y):
            return inside_env(x, y) and (allow_red_inside or outside_hull(x, y))
        reds += _sample_disk_points(rng, remaining, spread, keep, taken)

    scene = Scene.from_ints(blue=blues, red=reds, polygon=poly,
                            check_general_position=not big_scene)
    if not allow_red_inside and not big_scene and r <= 32:
        build_arrangement(scene)  # vets line-level general position
    return scene


def generate_lower_bound(t: int) -> Scene:
    """Scene family with at least t**3 separators: three fans of t reds,
    one per vertex of a triangular blue hull, each fan tucked behind the
    next fan's tangent lines so any one line per fan bounds a valid
    separator."""
    if t < 2:
        raise GenerationFailed("t must be at least 2")
    b1, b2, b3 = (0, 10), (-9, -5), (9, -5)
    blues = [b1, b2, b3]
    fan1 = [(60 + 5 * j, 11 + 2 * j + j * j) for j in range(t)]
    fan2 = [(-13 - j, 40 + 12 * j + j * j) for j in range(t)]
    fan3 = [(-31 - 5 * j, -45 - 10 * j - j * j) for j in range(t)]
    reds = fan1 + fan2 + fan3
    polygon = [(2001, -1999), (1999, 2001), (-2001, 1999), (-1999, -2001)]
    try:
        scene = Scene.from_ints(blue=blues, red=reds, polygon=polygon)
    except SceneError as e:
        raise GenerationFailed(f"fan construction degenerated: {e}") from e

    # every one-line-per-fan triple must bound a separator
    anchors = [Point(*b1), Point(*b2), Point(*b3)]
    fans = [fan1, fan2, fan3]
    lines = [[Line.through(Point(*rp), anchors[fi]) for rp in fan] for fi, fan in enumerate(fans)]
    for la in lines[0]:
        for lb in lines[1]:
            for lc in lines[2]:
                pa, pb, pc = la.intersect(lb), la.intersect(lc), lb.intersect(lc)
                if pa is None or pb is None or pc is None:
                    raise GenerationFailed("fan lines became parallel")
                tri = Triangle(pa, pb, pc)
                if tri.is_degenerate() or not validate_separator(tri, scene).ok:
                    raise GenerationFailed("a fan triple stopped separating")
    return scene


def generate_tight_ring(b: int, r: int) -> Scene:
    """Scene where reds ring the blue hull so closely that no inscribed
    separator exists; emptiness is certified by the exhaustive oracle
    before the scene is returned."""
    if r < 8:
        raise GenerationFailed("at least 8 red points are required for a tight ring")
    if b < 3:
        raise GenerationFailed("at least 3 blue points are required")
    base = _derived_seed("tight-ring", b, r)
    polygon = [(501, -499), (499, 501), (-501, 499), (-499, -501)]
    blue_radius = 60
    for attempt in range(300):
        rng = random.Random(base + attempt)
        red_radius = blue_radius + 3 + (attempt % 6)
        try:
            blues = _ring_points(rng, b, blue_radius, jitter=2)
            reds = _ring_points(rng, r, red_radius, jitter=1, phase=0.5 / r)
            scene = Scene.from_ints(blue=blues, red=reds, polygon=polygon)
            hull = convex_hull(list(scene.blue))
            if any(hull.contains(p, "closed") for p in scene.red):
                raise _Retry
            if brute_force_separators(scene):
                raise _Retry
        except (_Retry, SceneError, TriSepError):
            continue
        return scene
    raise GenerationFailed(f"no separator-free ring found for b={b} r={r}")


def _ring_points(rng: random.Random, count: int, radius: int,
                 jitter: int, phase: float = 0.0) -> list[tuple[int, int]]:
    pts = []
    for i in range(count):
        th = 2 * math.pi * (i / count + phase) + rng.uniform(-0.3 / count, 0.3 / count)
        rr = radius + rng.randint(0, jitter)
        pts.append((round(rr * math.cos(th)), round(rr * math.sin(th))))
    if len(set(pts)) != count:
        raise _Retry
    return pts
