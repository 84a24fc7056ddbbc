from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _gen import bernstein, random_cubic
from bezconvex.bezier import (
    BezierCurve,
    CubicBezier,
    control_quad_convex,
    frame_at,
    line_cubic,
    point_at,
    point_at_general,
    quad_orientation,
    region_convexity_oracle,
    sample,
    tangent_segment,
)
from bezconvex.errors import DegenerateError, GeometryError
from bezconvex.geom import Point2, Tolerances, convex_hull, orientation

ARCH = CubicBezier((0, 0), (0, 1), (1, 1), (1, 0))
S_CURVE = CubicBezier((0, 0), (1, 1), (2, -1), (3, 0))
FLAT = CubicBezier((0, 0), (1, 0), (2, 0), (3, 0))

coord = st.floats(min_value=-100, max_value=100, allow_nan=False)
cubic = st.tuples(*[st.tuples(coord, coord)] * 4).filter(
    lambda ps: len(set(ps)) > 1
).map(lambda ps: CubicBezier(*ps))
unit = st.floats(min_value=0.0, max_value=1.0)


def test_midpoint_frame():
    f = frame_at(ARCH, 0.5)
    assert (f.q0, f.q1, f.q2) == ((0, 0.5), (0.5, 1), (1, 0.5))
    assert (f.r0, f.r1) == ((0.25, 0.75), (0.75, 0.75))
    assert f.s == (0.5, 0.75)
    assert tangent_segment(ARCH, 0.5) == ((0.25, 0.75), (0.75, 0.75))


def test_endpoint_mapping():
    assert point_at(ARCH, 1.0) == ARCH.p0
    assert point_at(ARCH, 0.0) == ARCH.p3


def test_parameter_range():
    with pytest.raises(GeometryError, match="parameter out of range"):
        frame_at(ARCH, 1.5)
    with pytest.raises(GeometryError, match="parameter out of range"):
        point_at(ARCH, -0.1)
    with pytest.raises(GeometryError):
        tangent_segment(ARCH, 1.0)


def test_degenerate_tangent():
    cusp = CubicBezier((0, 0), (1, 1), (0, 1), (1, 0))
    # r0 == r1 at the cusp parameter u = 1/2.
    with pytest.raises(DegenerateError, match="degenerate tangent"):
        tangent_segment(cusp, 0.5)


def test_all_coincident_cubic_rejected():
    with pytest.raises(DegenerateError):
        CubicBezier((1, 1), (1, 1), (1, 1), (1, 1))


def test_tangent_near_start_approaches_first_leg():
    r0, r1 = tangent_segment(ARCH, 1.0 - 1e-9)
    assert orientation(ARCH.p0, ARCH.p1, r0, 1e-8) == 0
    assert orientation(ARCH.p0, ARCH.p1, r1, 1e-8) == 0


def test_flat_cubic_tangent_stays_on_line():
    for u in (0.1, 0.5, 0.9):
        r0, r1 = tangent_segment(FLAT, u)
        assert r0.y == r1.y == 0.0


def test_control_quad_examples():
    assert control_quad_convex(ARCH)
    assert not control_quad_convex(S_CURVE)
    assert control_quad_convex(FLAT)
    assert quad_orientation(ARCH) == -1
    assert quad_orientation(ARCH.reversed()) == 1
    with pytest.raises(DegenerateError):
        control_quad_convex(CubicBezier((0, 0), (0, 0), (1, 1), (1, 0)))


def test_region_oracle_examples():
    assert region_convexity_oracle(ARCH)
    assert not region_convexity_oracle(S_CURVE)
    assert region_convexity_oracle(FLAT)
    with pytest.raises(GeometryError):
        region_convexity_oracle(ARCH, m=10)


def test_sample_examples():
    assert sample(ARCH, 2) == [ARCH.p3, ARCH.p0]
    assert sample(ARCH, 3) == [(1, 0), (0.5, 0.75), (0, 0)]
    assert all(p.y == 0.0 for p in sample(FLAT, 17))
    with pytest.raises(GeometryError):
        sample(ARCH, 1)


def test_line_cubic_thirds():
    c = line_cubic((0, 0), (3, 6))
    assert c == ((0, 0), (1, 2), (2, 4), (3, 6))


def test_general_evaluation_examples():
    assert point_at_general(BezierCurve(((0, 0), (2, 2))), 0.25) == (1.5, 1.5)
    assert point_at_general(BezierCurve(((0, 0), (1, 1), (2, 0))), 0.5) == (1.0, 0.5)
    with pytest.raises(GeometryError):
        point_at_general(BezierCurve(((0, 0), (1, 1))), 2.0)
    with pytest.raises(GeometryError):
        BezierCurve(((0, 0),))
    assert BezierCurve(((0, 0), (1, 1), (2, 0))).degree == 2


@given(cubic, unit)
def test_frame_identity(c, u):
    f = frame_at(c, u)
    p = list(c)
    scale = max(1.0, max(abs(v) for q in p for v in q))
    tol = 1e-12 * scale

    def lerp(a, b):
        return (u * a[0] + (1 - u) * b[0], u * a[1] + (1 - u) * b[1])

    for got, want in [
        (f.q0, lerp(p[0], p[1])),
        (f.q1, lerp(p[1], p[2])),
        (f.q2, lerp(p[2], p[3])),
        (f.r0, lerp(f.q0, f.q1)),
        (f.r1, lerp(f.q1, f.q2)),
        (f.s, lerp(f.r0, f.r1)),
    ]:
        assert abs(got[0] - want[0]) <= tol and abs(got[1] - want[1]) <= tol


@given(cubic)
def test_endpoint_law(c):
    assert point_at(c, 0.0) == c.p3
    assert point_at(c, 1.0) == c.p0


@given(cubic, unit, st.tuples(*[st.floats(-3, 3)] * 6))
def test_affine_invariance(c, u, m):
    a, b, cc, d, e, f = m

    def t(p):
        return Point2(a * p[0] + b * p[1] + e, cc * p[0] + d * p[1] + f)

    try:
        moved = c.transformed(t)
    except DegenerateError:
        return  # singular map collapsed every control point
    got = point_at(moved, u)
    want = t(point_at(c, u))
    scale = 1.0 + max(abs(v) for q in moved for v in q)
    assert abs(got.x - want.x) <= 1e-9 * scale
    assert abs(got.y - want.y) <= 1e-9 * scale


@given(cubic)
def test_samples_inside_control_hull(c):
    tol = Tolerances.for_points(list(c))
    hull = convex_hull(list(c), tol).vertices
    if len(hull) < 3:
        return
    for p in sample(c, 65):
        for u, v in zip(hull, hull[1:] + hull[:1]):
            assert orientation(u, v, p, tol.eps_col) >= 0


def test_point_at_matches_bernstein():
    rng = random.Random(5)
    for _ in range(50):
        c = random_cubic(rng)
        ref = bernstein(c, 33)
        # Textbook t runs from p0, the package's u runs from p3.
        for k, (x, y) in enumerate(ref):
            p = point_at(c, 1.0 - k / 32)
            assert math.isclose(p.x, x, abs_tol=1e-12)
            assert math.isclose(p.y, y, abs_tol=1e-12)


def test_general_matches_cubic_frame():
    c = CubicBezier((0, 0), (1, 3), (4, 2), (5, -1))
    for k in range(11):
        u = k / 10
        g = point_at_general(BezierCurve(tuple(c)), u)
        s = point_at(c, u)
        assert math.isclose(g.x, s.x, abs_tol=1e-12) and math.isclose(g.y, s.y, abs_tol=1e-12)


def test_reversed_and_transformed():
    assert ARCH.reversed() == (ARCH.p3, ARCH.p2, ARCH.p1, ARCH.p0)
    moved = ARCH.transformed(lambda p: (p[0] + 1, p[1]))
    assert moved.p0 == (1, 0)
