from __future__ import annotations

import random

import pytest

from _gen import random_outline
from bezconvex.bezier import BezierCurve, CubicBezier
from bezconvex.convexify import (
    hull_degree_curve,
    sample_boundary,
    shape_deviation,
    smooth_junctions,
)
from bezconvex.errors import DegenerateError, GeometryError, RepairError
from bezconvex.fixtures import circle_path, logo_like_path
from bezconvex.geom import Tolerances, convex_hull, is_convex_polygon, orientation
from bezconvex.path import (
    ClosedBezierPath,
    JunctionClass,
    analyze,
    classify_junction,
    control_polygon,
    default_tolerances,
    is_convex,
)


def _one_reflex_path(b=(1.0, -0.1)):
    # Junction 0: A=(-1,0), J=(0,0), B=b on a counter-clockwise outline.
    first = CubicBezier((-2, 2), (-2, 0.5), (-1, 0), (0, 0))
    second = CubicBezier((0, 0), b, (2, 2), (-2, 2))
    return ClosedBezierPath((first, second))


def test_projection_example():
    path = _one_reflex_path()
    assert classify_junction(path, 0) is JunctionClass.NONCONVEX_NON_SMOOTH
    fixed, moved = smooth_junctions(path)
    a2 = fixed.segments[0].p2
    b2 = fixed.segments[1].p1
    # Projection of A=(-1,0) onto the line through J=(0,0) along d = B - A.
    d = (2.0, -0.1)
    k = (-1.0 * d[0]) / (d[0] ** 2 + d[1] ** 2)
    assert a2.x == pytest.approx(k * d[0], abs=1e-12)
    assert a2.y == pytest.approx(k * d[1], abs=1e-12)
    assert orientation(a2, (0, 0), b2, 1e-15) == 0
    assert fixed.segments[0].p3 == (0, 0)
    assert classify_junction(fixed, 0) is JunctionClass.SMOOTH_CONVEX
    assert moved == pytest.approx(max(a2.distance((-1, 0)), b2.distance((1, -0.1))))


def test_unit_projection_example():
    # A=(-1,0), J=(0,0), B=(1,-0.2): direction (2,-0.2) normalised.
    path = _one_reflex_path((1.0, -0.2))
    fixed, _ = smooth_junctions(path)
    a2 = fixed.segments[0].p2
    assert a2.x == pytest.approx(-100 / 101, abs=1e-12)
    assert a2.y == pytest.approx(10 / 101, abs=1e-12)


def test_fixture_smoothing():
    path = logo_like_path()
    fixed, moved = smooth_junctions(path)
    report = analyze(fixed)
    assert report.is_convex
    assert set(report.junction_classes) <= {
        JunctionClass.SMOOTH_CONVEX,
        JunctionClass.CONVEX_NON_SMOOTH,
    }
    assert 0.0 < moved < 1.0
    # Junction points never move.
    for a, b in zip(path.segments, fixed.segments):
        assert a.p0 == b.p0 and a.p3 == b.p3
    again, moved2 = smooth_junctions(fixed)
    assert again == fixed and moved2 == 0.0
    assert shape_deviation(path, fixed) <= moved


def test_convex_input_unchanged():
    circle = circle_path()
    fixed, moved = smooth_junctions(circle)
    assert fixed is circle and moved == 0.0


def test_smooth_all_makes_every_junction_smooth():
    fixed, _ = smooth_junctions(logo_like_path(), smooth_all=True)
    report = analyze(fixed)
    assert report.is_convex
    assert set(report.junction_classes) == {JunctionClass.SMOOTH_CONVEX}


def test_nonconvex_segment_is_refused():
    s_curve = CubicBezier((0, 0), (1, 1), (2, -1), (3, 0))
    back = CubicBezier((3, 0), (3, -3), (0, -3), (0, 0))
    with pytest.raises(RepairError, match="not convex"):
        smooth_junctions(ClosedBezierPath((s_curve, back)))


def test_max_iter_validation():
    with pytest.raises(ValueError):
        smooth_junctions(logo_like_path(), max_iter=0)


def test_repair_property_on_random_outlines():
    rng = random.Random(11)
    repaired = 0
    for _ in range(200):
        path, _ = random_outline(rng, rng.randint(3, 8))
        try:
            fixed, moved = smooth_junctions(path)
        except (RepairError, DegenerateError):
            continue
        repaired += 1
        tol = default_tolerances(path)
        report = analyze(fixed, tol)
        assert report.is_convex
        assert JunctionClass.NONCONVEX_NON_SMOOTH not in report.junction_classes
        again, moved2 = smooth_junctions(fixed, tol)
        assert again == fixed and moved2 == 0.0
    assert repaired > 150


def test_hull_curve_on_fixture():
    path = logo_like_path()
    closed = hull_degree_curve(path)
    opened = hull_degree_curve(path, closed=False)
    assert closed.degree == 26
    assert opened.degree == 25
    assert closed.control[0] == closed.control[-1]
    assert list(opened.control) == list(closed.control[:-1])
    assert is_convex_polygon(opened.control)
    assert closed.control[0] == min(
        opened.control, key=lambda p: p.distance(control_polygon(path).vertices[0])
    )


def test_hull_curve_samples_inside_original_hull():
    rng = random.Random(4)
    for _ in range(20):
        path, _ = random_outline(rng, rng.randint(3, 8))
        tol = default_tolerances(path)
        hull = convex_hull(control_polygon(path).vertices, tol).vertices
        curve = hull_degree_curve(path, tol)
        assert is_convex_polygon(curve.control[:-1], tol)
        for p in sample_boundary(curve, 200):
            for u, v in zip(hull, hull[1:] + hull[:1]):
                assert orientation(u, v, p, tol.eps_col) >= 0


def test_hull_curve_is_counter_clockwise_for_clockwise_input():
    curve = hull_degree_curve(logo_like_path().reversed(), closed=False)
    assert curve.degree == 25
    from bezconvex.geom import signed_area

    assert signed_area(curve.control) > 0


def test_shape_deviation_properties():
    a = logo_like_path()
    b, _ = smooth_junctions(a)
    assert shape_deviation(a, a) == 0.0
    assert shape_deviation(a, b) == pytest.approx(shape_deviation(b, a), rel=1e-9)
    curve = hull_degree_curve(a)
    assert shape_deviation(a, curve) > 0.0
    with pytest.raises(GeometryError):
        shape_deviation(a, b, m=10)


def test_sample_boundary_rejects_other_types():
    with pytest.raises(TypeError):
        sample_boundary([(0, 0)], 100)
    line = BezierCurve(((0, 0), (1, 1), (2, 0), (3, 3)))
    pts = sample_boundary(line, 64)
    assert pts[0] == (3, 3) and pts[-1] == (0, 0)


def test_explicit_tolerances_are_respected():
    path = logo_like_path()
    tol = Tolerances(eps_col=1e-6, eps_join=1e-6)
    fixed, _ = smooth_junctions(path, tol)
    assert is_convex(fixed, tol)
