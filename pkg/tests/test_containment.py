import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from extravertex.classify import Classification, classify_half_plane_oracle
from extravertex.containment import polygon_inside, segment_inside, segments_intersect
from extravertex.errors import DegenerateInput, NotConvex
from extravertex.geometry import Point, validate
from extravertex.polygen import GenConfig, gen_convex, gen_point_inside, lerp

small = st.integers(-3, 3)
pt = st.tuples(small, small)


@pytest.mark.parametrize("a, b, c, d, expected", [
    ((0, 0), (2, 2), (0, 2), (2, 0), True),
    ((0, 0), (1, 0), (0, 1), (1, 1), False),
    ((0, 0), (2, 0), (1, 0), (3, 0), True),
    ((0, 0), (1, 0), (2, 0), (3, 0), False),  # collinear, disjoint
    ((0, 0), (1, 0), (1, 0), (1, 5), True),   # endpoint touch
    ((0, 0), (2, 0), (1, 0), (1, 5), True),   # T junction
    ((0, 0), (2, 0), (1, 1), (1, 5), False),
])
def test_segments_intersect(a, b, c, d, expected):
    assert segments_intersect(a, b, c, d) is expected


def test_zero_length_segment():
    with pytest.raises(DegenerateInput):
        segments_intersect((0, 0), (0, 0), (1, 1), (2, 2))


def _param_intersect(a, b, c, d):
    """Solve a + t(b-a) = c + s(d-c) exactly; collinear case by 1-D overlap."""
    from fractions import Fraction as F
    rx, ry = F(b[0] - a[0]), F(b[1] - a[1])
    sx, sy = F(d[0] - c[0]), F(d[1] - c[1])
    qx, qy = F(c[0] - a[0]), F(c[1] - a[1])
    den = rx * sy - ry * sx
    if den != 0:
        t = (qx * sy - qy * sx) / den
        u = (qx * ry - qy * rx) / den
        return 0 <= t <= 1 and 0 <= u <= 1
    if qx * ry - qy * rx != 0:
        return False  # parallel, distinct lines
    rr = rx * rx + ry * ry
    t0 = (qx * rx + qy * ry) / rr
    t1 = t0 + (sx * rx + sy * ry) / rr
    return max(min(t0, t1), 0) <= min(max(t0, t1), 1)


@given(pt, pt, pt, pt)
def test_segments_intersect_symmetry_and_exact_solve(a, b, c, d):
    if a == b or c == d:
        return
    r = segments_intersect(a, b, c, d)
    assert r == segments_intersect(c, d, a, b) == segments_intersect(b, a, d, c)
    assert r == _param_intersect(a, b, c, d)


def test_segment_inside_examples(square_cw):
    assert segment_inside(square_cw, Point(0.2, 0.2), Point(0.8, 0.8))
    assert not segment_inside(square_cw, Point(0.5, 0.5), Point(2, 0.5))
    assert segment_inside(square_cw, Point(0, 0), Point(1, 1))


def test_polygon_inside_examples(square_cw):
    inner = validate([(0.25, 0.25), (0.25, 0.75), (0.75, 0.75), (0.75, 0.25)])
    assert polygon_inside(square_cw, inner)
    assert not polygon_inside(square_cw, validate([(0.5, 0.5), (2, 2), (0.5, 0.9)]))
    assert polygon_inside(square_cw, square_cw)


def test_concave_outer_rejected(square_cw, dart):
    with pytest.raises(NotConvex):
        segment_inside(dart, Point(1, 0.1), Point(3, 0.1))
    with pytest.raises(NotConvex):
        polygon_inside(dart, square_cw)
    # concave inner is fine
    assert polygon_inside(validate([(-1, -1), (5, -1), (5, 5), (-1, 5)]), dart)


@given(st.integers(0, 2**31))
def test_segment_inside_matches_sampling(seed):
    rng = random.Random(seed)
    poly = gen_convex(GenConfig(n=rng.randint(3, 30), seed=seed))
    a = Point(rng.uniform(-150, 150), rng.uniform(-150, 150))
    b = gen_point_inside(poly, rng) if rng.random() < 0.5 else Point(rng.uniform(-150, 150), rng.uniform(-150, 150))
    samples = [lerp(a, b, k / 99) for k in range(100)]
    sampled = all(classify_half_plane_oracle(poly, p) is not Classification.OUTSIDE for p in samples)
    assert segment_inside(poly, a, b) == sampled


def test_polygon_inside_transitive():
    outer = gen_convex(GenConfig(n=20, seed=1, radius=100))
    mid = gen_convex(GenConfig(n=12, seed=2, radius=50))
    inner = gen_convex(GenConfig(n=7, seed=3, radius=20))
    assert polygon_inside(outer, mid) and polygon_inside(mid, inner)
    assert polygon_inside(outer, inner)
