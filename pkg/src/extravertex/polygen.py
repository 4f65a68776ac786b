"""Seeded convex polygons and labelled query points.

Polygons: n sorted angles on a fixed-radius circle (always convex), with a
minimum angular gap of 0.1 * 2pi/n, then a random orientation-preserving
linear map. Linear maps keep convexity, so no rejection loop is needed.

Query points are built away from the tolerance band and confirmed with the
half-plane oracle before they are returned.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence, Union

from .classify import Classification, classify_half_plane_oracle
from .geometry import Orientation, Point, Polygon, validate

Seed = Union[int, random.Random]

MIN_GAP_FRACTION = 0.1


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int = 0
    radius: float = 100.0
    jitter: float = 0.25
    orientation: Orientation = Orientation.CLOCKWISE

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be >= 3, got {self.n}")
        if not self.radius > 0:
            raise ValueError("radius must be > 0")
        if not 0 <= self.jitter < 0.5:
            raise ValueError("jitter must be in [0, 0.5)")


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def gen_convex(cfg: GenConfig) -> Polygon:
    rng = random.Random(cfg.seed)
    n = cfg.n
    min_gap = MIN_GAP_FRACTION * 2 * math.pi / n
    cuts = sorted(rng.random() for _ in range(n))
    raw = [cuts[i + 1] - cuts[i] for i in range(n - 1)] + [1.0 - cuts[-1] + cuts[0]]
    # n * min_gap + (1 - MIN_GAP_FRACTION) * 2pi == 2pi
    gaps = [min_gap + (1 - MIN_GAP_FRACTION) * 2 * math.pi * g for g in raw]
    theta = rng.uniform(0, 2 * math.pi)
    angles = []
    for g in gaps:
        angles.append(theta)
        theta += g

    j = cfg.jitter
    a, b, c, d = (rng.uniform(-j, j) for _ in range(4))
    m00, m01, m10, m11 = 1 + a, b, c, 1 + d
    assert m00 * m11 - m01 * m10 > 0
    r = cfg.radius
    pts = []
    for t in angles:
        x, y = r * math.cos(t), r * math.sin(t)
        pts.append((m00 * x + m01 * y, m10 * x + m11 * y))
    if cfg.orientation is Orientation.CLOCKWISE:
        pts.reverse()
    poly = validate(pts)
    assert poly.convex and poly.orientation is cfg.orientation
    return poly


def convex_combination(points: Sequence[Point], weights: Sequence[float]) -> Point:
    return Point(sum(w * p[0] for p, w in zip(points, weights)),
                 sum(w * p[1] for p, w in zip(points, weights)))


def push_out(poly: Polygon, b: Point, t: float) -> Point:
    """centroid + t * (b - centroid)."""
    c = poly.centroid()
    return Point(c.x + t * (b[0] - c.x), c.y + t * (b[1] - c.y))


def lerp(a: Point, b: Point, u: float) -> Point:
    return Point(a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]))


def _confirmed(poly, rng, make, want):
    for _ in range(1000):
        p = make(rng)
        if classify_half_plane_oracle(poly, p) is want:
            return p
    raise RuntimeError(f"could not generate a {want.value} point")


def gen_point_inside(poly: Polygon, seed: Seed) -> Point:
    def make(rng):
        idx = rng.sample(range(poly.n), 3)
        e = [rng.expovariate(1.0) for _ in range(3)]
        tot = sum(e)
        w = [0.05 + 0.85 * x / tot for x in e]
        return convex_combination([poly.vertices[i] for i in idx], w)

    return _confirmed(poly, _rng(seed), make, Classification.INSIDE)


def gen_point_outside(poly: Polygon, seed: Seed, t_range: tuple[float, float] = (1.1, 3.0)) -> Point:
    def make(rng):
        i = rng.randrange(poly.n)
        b = lerp(poly.vertices[i], poly.vertices[(i + 1) % poly.n], rng.random())
        return push_out(poly, b, rng.uniform(*t_range))

    return _confirmed(poly, _rng(seed), make, Classification.OUTSIDE)


def gen_point_on_edge(poly: Polygon, seed: Seed) -> Point:
    rng = _rng(seed)
    i = rng.randrange(poly.n)
    return lerp(poly.vertices[i], poly.vertices[(i + 1) % poly.n], rng.uniform(0.1, 0.9))


def gen_point_near_boundary(poly: Polygon, seed: Seed) -> Point:
    """Point within 0.1% of the boundary along a centroid ray, either side.

    Labels are tolerance-sensitive here; use for stress runs, not agreement checks.
    """
    rng = _rng(seed)
    i = rng.randrange(poly.n)
    b = lerp(poly.vertices[i], poly.vertices[(i + 1) % poly.n], rng.random())
    return push_out(poly, b, rng.uniform(0.999, 1.001))
