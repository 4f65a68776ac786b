"""Planar primitives: shoelace sums, areas, orientation, convexity, validation.

Sign convention: ``cross_det(a, b) = a.x * b.y - b.x * a.y``. Under it a
counter-clockwise ring has a positive shoelace sum and a clockwise ring a
negative one.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInput


class Point(NamedTuple):
    x: float
    y: float


class Orientation(enum.Enum):
    CLOCKWISE = "cw"
    COUNTER_CLOCKWISE = "ccw"


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerances.

    ``abs_eps`` is in area units, ``rel_eps`` is relative to the larger of the
    two compared areas, ``angle_eps`` is in radians.
    """

    abs_eps: float = 1e-9
    rel_eps: float = 1e-12
    angle_eps: float = 1e-6

    def __post_init__(self):
        for name in ("abs_eps", "rel_eps", "angle_eps"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and > 0, got {v!r}")

    def area_band(self, a1: float, a2: float) -> float:
        return self.abs_eps + self.rel_eps * max(abs(a1), abs(a2))

    def areas_equal(self, a1: float, a2: float) -> bool:
        return abs(a1 - a2) <= self.area_band(a1, a2)


DEFAULT_TOL = Tolerance()

# winding check inside validate(); independent of any caller tolerance
_TURN_EPS = 1e-6


@dataclass(frozen=True)
class Polygon:
    """Validated vertex ring. Build with :func:`validate`, not directly."""

    vertices: tuple[Point, ...]
    signed_sum: float
    orientation: Orientation
    convex: bool
    # per-edge cache: (x_i, y_i, x_{i+1}, y_{i+1}, cross_det(v_i, v_{i+1}))
    edge_terms: tuple[tuple[float, float, float, float, float], ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self):
        terms = tuple((a.x, a.y, b.x, b.y, a.x * b.y - b.x * a.y)
                      for a, b in zip(self.vertices, self.vertices[1:] + self.vertices[:1]))
        object.__setattr__(self, "edge_terms", terms)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> float:
        return 0.5 * abs(self.signed_sum)

    def edges(self):
        vs = self.vertices
        return zip(vs, vs[1:] + vs[:1])

    def centroid(self) -> Point:
        """Vertex average; strictly interior for a convex ring."""
        n = len(self.vertices)
        return Point(sum(v.x for v in self.vertices) / n,
                     sum(v.y for v in self.vertices) / n)


def cross_det(a: Point, b: Point) -> float:
    return a[0] * b[1] - b[0] * a[1]


def triangle_signed2(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle abc (positive when counter-clockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def shoelace_signed_sum(vertices: Sequence[Point]) -> float:
    """Raw cyclic sum of ``cross_det(v_i, v_{i+1})``: not halved, not absolute."""
    n = len(vertices)
    if n < 3:
        raise DegenerateInput(f"need at least 3 vertices, got {n}")
    total = 0.0
    prev = vertices[-1]
    for v in vertices:
        total += prev[0] * v[1] - v[0] * prev[1]
        prev = v
    return total


def area(poly: Polygon) -> float:
    return 0.5 * abs(poly.signed_sum)


def is_convex_ring(vertices: Sequence[Point]) -> bool:
    """True if every corner turns the same way (or not at all) and the ring
    winds exactly once. A collinear back-track (spike) is not convex."""
    n = len(vertices)
    sign = 0
    turning = 0.0
    for i in range(n):
        a, b, c = vertices[i - 1], vertices[i], vertices[(i + 1) % n]
        ux, uy = b[0] - a[0], b[1] - a[1]
        wx, wy = c[0] - b[0], c[1] - b[1]
        cr = ux * wy - uy * wx
        dot = ux * wx + uy * wy
        if cr == 0.0:
            if dot < 0.0:
                return False
            continue
        s = 1 if cr > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
        turning += math.atan2(cr, dot)
    return abs(abs(turning) - 2.0 * math.pi) <= _TURN_EPS


def validate(raw: Iterable) -> Polygon:
    """Check a vertex ring and return an immutable :class:`Polygon`.

    Accepts any iterable of coordinate pairs. Vertex order is preserved.
    Raises :class:`DegenerateInput` for fewer than 3 vertices, non-finite
    coordinates, repeated consecutive vertices and zero-area rings.
    Non-convex rings are accepted with ``convex=False``.
    """
    pts = []
    for item in raw:
        try:
            x, y = item
            p = Point(float(x), float(y))
        except (TypeError, ValueError) as exc:
            raise DegenerateInput(f"bad vertex {item!r}") from exc
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise DegenerateInput(f"non-finite coordinate in {item!r}")
        pts.append(p)
    if len(pts) < 3:
        raise DegenerateInput(f"need at least 3 vertices, got {len(pts)}")
    for i, p in enumerate(pts):
        if p == pts[i - 1]:
            raise DegenerateInput(f"repeated consecutive vertex {p} at index {i}")
    s = shoelace_signed_sum(pts)
    if s == 0.0 or not math.isfinite(s):
        raise DegenerateInput("ring encloses zero area")
    orient = Orientation.CLOCKWISE if s < 0 else Orientation.COUNTER_CLOCKWISE
    return Polygon(tuple(pts), s, orient, is_convex_ring(pts))


def is_point_on_ring(poly: Polygon, p: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True if ``p`` lies in the tolerance band of some edge segment.

    The band is measured the same way every classifier measures it: the
    triangle (v_i, p, v_{i+1}) must have area within the polygon's area
    tolerance, and p must project inside the edge (with the same slack).
    """
    band2 = 2.0 * tol.area_band(poly.area, poly.area)
    px, py = p
    for a, b in poly.edges():
        ex, ey = b[0] - a[0], b[1] - a[1]
        dx, dy = px - a[0], py - a[1]
        if abs(ex * dy - ey * dx) > band2:
            continue
        proj = ex * dx + ey * dy
        if -band2 <= proj <= ex * ex + ey * ey + band2:
            return True
    return False


def translated(poly: Polygon, dx: float, dy: float) -> Polygon:
    return validate((v.x + dx, v.y + dy) for v in poly.vertices)


def scaled(poly: Polygon, s: float) -> Polygon:
    return validate((v.x * s, v.y * s) for v in poly.vertices)


def rotated_list(poly: Polygon, k: int) -> Polygon:
    """Same ring, vertex list cyclically shifted to start at index ``k``."""
    k %= poly.n
    return validate(poly.vertices[k:] + poly.vertices[:k])


def reversed_list(poly: Polygon) -> Polygon:
    return validate(poly.vertices[::-1])
