"""Point-in-convex-polygon classifiers.

Extra-vertex methods insert the query point into the ring as one more vertex
and compare the new shoelace area with the original one: smaller means the
point is inside, larger means outside, equal means it sits on an edge.

``classify_extra_vertex_append`` does this literally, always inserting on the
closing edge v_{n-1} -> v_0. That is only sound in one direction: it never
calls an inside point outside, but an outside point lying on the interior side
of the closing edge's line comes back ``INSIDE`` (unit square, (2, 0.5)).
``classify_extra_vertex_best_edge`` tries every edge using the O(1)
insertion delta and is exact up to tolerance.
"""
from __future__ import annotations

import enum
import math
from typing import Callable

from .errors import BadIndex, InternalInconsistency, NotConvex
from .geometry import (
    DEFAULT_TOL,
    Point,
    Polygon,
    Tolerance,
    cross_det,
    is_point_on_ring,
    shoelace_signed_sum,
    triangle_signed2,
)


class Classification(enum.Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "boundary"

    def __str__(self):
        return self.value


class AlgorithmId(enum.Enum):
    EXTRA_VERTEX_APPEND = "extra-vertex-append"
    EXTRA_VERTEX_BEST_EDGE = "extra-vertex"
    TRIANGULATION = "triangulation"
    RAY_CASTING = "ray-casting"
    ANGLE_SUM = "angle-sum"
    HALF_PLANE_ORACLE = "half-plane-oracle"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, name: str) -> "AlgorithmId":
        name = name.strip().lower()
        if name == "extra-vertex-best-edge":
            return cls.EXTRA_VERTEX_BEST_EDGE
        return cls(name)


def _require_convex(poly: Polygon) -> None:
    if not poly.convex:
        raise NotConvex("classifier requires a convex polygon")


def _check_edge(poly: Polygon, edge_index: int) -> None:
    if not 0 <= edge_index < poly.n:
        raise BadIndex(f"edge index {edge_index} outside [0, {poly.n})")


def _compare(original: float, new: float, tol: Tolerance) -> Classification:
    if tol.areas_equal(original, new):
        return Classification.ON_BOUNDARY
    return Classification.INSIDE if new < original else Classification.OUTSIDE


def insertion_delta(poly: Polygon, edge_index: int, p: Point) -> float:
    """Change in the shoelace sum when ``p`` is inserted between vertex
    ``edge_index`` and its successor."""
    _check_edge(poly, edge_index)
    ax, ay, bx, by, edge_det = poly.edge_terms[edge_index]
    return cross_det((ax, ay), p) + cross_det(p, (bx, by)) - edge_det


def area_with_insertion(poly: Polygon, edge_index: int, p: Point) -> float:
    """Area of the (n+1)-gon with ``p`` inserted after vertex ``edge_index``,
    by full recomputation."""
    _check_edge(poly, edge_index)
    vs = list(poly.vertices)
    vs.insert(edge_index + 1, Point(*p))
    return 0.5 * abs(shoelace_signed_sum(vs))


def classify_extra_vertex_append(poly: Polygon, p: Point,
                                 tol: Tolerance = DEFAULT_TOL) -> Classification:
    _require_convex(poly)
    return _compare(poly.area, area_with_insertion(poly, poly.n - 1, p), tol)


def classify_extra_vertex_best_edge(poly: Polygon, p: Point,
                                    tol: Tolerance = DEFAULT_TOL) -> Classification:
    _require_convex(poly)
    s = poly.signed_sum
    base = abs(s)
    # doubled-area thresholds of tol.areas_equal(|S|/2, |S+d|/2), solved for |S+d|
    hi = (base + 2 * tol.abs_eps) / (1 - tol.rel_eps)
    lo = base - 2 * tol.abs_eps - tol.rel_eps * base
    px, py = p
    on_edge = False
    for ax, ay, bx, by, edge_det in poly.edge_terms:
        grown = abs(s + (ax * py - px * ay) + (px * by - bx * py) - edge_det)
        if grown > hi:
            return Classification.OUTSIDE
        if grown >= lo:
            on_edge = True
    return Classification.ON_BOUNDARY if on_edge else Classification.INSIDE


def triangle_sum(poly: Polygon, p: Point) -> float:
    """Sum of |area(p, v_i, v_{i+1})| over all edges."""
    px, py = p
    vs = poly.vertices
    prev = vs[-1]
    s = 0.0
    for v in vs:
        s += abs((prev[0] - px) * (v[1] - py) - (v[0] - px) * (prev[1] - py))
        prev = v
    return 0.5 * s


def classify_triangulation(poly: Polygon, p: Point,
                           tol: Tolerance = DEFAULT_TOL) -> Classification:
    _require_convex(poly)
    a = poly.area
    s = triangle_sum(poly, p)
    if tol.areas_equal(s, a):
        if is_point_on_ring(poly, p, tol):
            return Classification.ON_BOUNDARY
        return Classification.INSIDE
    if s > a:
        return Classification.OUTSIDE
    raise InternalInconsistency(f"triangle sum {s!r} below polygon area {a!r}")


def classify_ray_casting(poly: Polygon, p: Point,
                         tol: Tolerance = DEFAULT_TOL) -> Classification:
    if is_point_on_ring(poly, p, tol):
        return Classification.ON_BOUNDARY
    px, py = p
    inside = False
    vs = poly.vertices
    a = vs[-1]
    for b in vs:
        if (a[1] > py) != (b[1] > py):
            xi = a[0] + (py - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            if xi > px:
                inside = not inside
        a = b
    return Classification.INSIDE if inside else Classification.OUTSIDE


def angle_sum(poly: Polygon, p: Point) -> float:
    """Signed sum of the angles each edge subtends at ``p``; -2pi for a point
    inside a clockwise ring, +2pi for counter-clockwise, ~0 outside."""
    px, py = p
    vs = poly.vertices
    a = vs[-1]
    total = 0.0
    for b in vs:
        ax, ay = a[0] - px, a[1] - py
        bx, by = b[0] - px, b[1] - py
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
        a = b
    return total


def classify_angle_sum(poly: Polygon, p: Point,
                       tol: Tolerance = DEFAULT_TOL) -> Classification:
    if is_point_on_ring(poly, p, tol):
        return Classification.ON_BOUNDARY
    total = abs(angle_sum(poly, p))
    assert (abs(total) <= tol.angle_eps
            or abs(total - 2 * math.pi) <= tol.angle_eps * poly.n), total
    return Classification.INSIDE if total > math.pi else Classification.OUTSIDE


def classify_half_plane_oracle(poly: Polygon, p: Point,
                               tol: Tolerance = DEFAULT_TOL) -> Classification:
    """Ground truth for convex rings: which side of every edge line is p on.

    Uses only per-edge orientation tests; the polygon area enters solely
    through the tolerance band.
    """
    _require_convex(poly)
    band2 = 2.0 * tol.area_band(poly.area, poly.area)
    # exterior points make triangle (v_i, p, v_{i+1}) wind like the ring
    exterior = 1.0 if poly.signed_sum > 0 else -1.0
    near_edge = False
    for a, b in poly.edges():
        s = exterior * triangle_signed2(a, p, b)
        if s > band2:
            return Classification.OUTSIDE
        if s >= -band2:
            ex, ey = b[0] - a[0], b[1] - a[1]
            proj = ex * (p[0] - a[0]) + ey * (p[1] - a[1])
            if -band2 <= proj <= ex * ex + ey * ey + band2:
                near_edge = True
    return Classification.ON_BOUNDARY if near_edge else Classification.INSIDE


CLASSIFIERS: dict[AlgorithmId, Callable[[Polygon, Point, Tolerance], Classification]] = {
    AlgorithmId.EXTRA_VERTEX_APPEND: classify_extra_vertex_append,
    AlgorithmId.EXTRA_VERTEX_BEST_EDGE: classify_extra_vertex_best_edge,
    AlgorithmId.TRIANGULATION: classify_triangulation,
    AlgorithmId.RAY_CASTING: classify_ray_casting,
    AlgorithmId.ANGLE_SUM: classify_angle_sum,
    AlgorithmId.HALF_PLANE_ORACLE: classify_half_plane_oracle,
}


def classify(poly: Polygon, p: Point, algorithm: AlgorithmId | str = AlgorithmId.EXTRA_VERTEX_BEST_EDGE,
             tol: Tolerance = DEFAULT_TOL) -> Classification:
    if isinstance(algorithm, str):
        algorithm = AlgorithmId.parse(algorithm)
    return CLASSIFIERS[algorithm](poly, Point(*p), tol)
