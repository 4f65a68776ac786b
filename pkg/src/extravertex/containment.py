"""Segment and polygon containment in a convex polygon.

For a convex outer ring, a segment lies inside iff both endpoints do, and a
polygon lies inside iff all its vertices do. Boundary contact counts as
inside (closed containment).
"""
from __future__ import annotations

from .classify import Classification, classify_extra_vertex_best_edge
from .errors import DegenerateInput, NotConvex
from .geometry import DEFAULT_TOL, Point, Polygon, Tolerance, triangle_signed2

_IN = (Classification.INSIDE, Classification.ON_BOUNDARY)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    # assumes p collinear with ab
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _sign(v: float) -> int:
    return (v > 0) - (v < 0)


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True if closed segments ab and cd share a point (touching and
    collinear overlap included). Exact orientation tests, no tolerance."""
    if tuple(a) == tuple(b) or tuple(c) == tuple(d):
        raise DegenerateInput("zero-length segment")
    o1 = _sign(triangle_signed2(a, b, c))
    o2 = _sign(triangle_signed2(a, b, d))
    o3 = _sign(triangle_signed2(c, d, a))
    o4 = _sign(triangle_signed2(c, d, b))
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return ((o1 == 0 and _on_segment(a, b, c))
            or (o2 == 0 and _on_segment(a, b, d))
            or (o3 == 0 and _on_segment(c, d, a))
            or (o4 == 0 and _on_segment(c, d, b)))


def segment_inside(poly: Polygon, a: Point, b: Point, tol: Tolerance = DEFAULT_TOL) -> bool:
    if not poly.convex:
        raise NotConvex("segment containment requires a convex polygon")
    return (classify_extra_vertex_best_edge(poly, a, tol) in _IN
            and classify_extra_vertex_best_edge(poly, b, tol) in _IN)


def polygon_inside(outer: Polygon, inner: Polygon, tol: Tolerance = DEFAULT_TOL) -> bool:
    if not outer.convex:
        raise NotConvex("polygon containment requires a convex outer polygon")
    return all(classify_extra_vertex_best_edge(outer, v, tol) in _IN for v in inner.vertices)
