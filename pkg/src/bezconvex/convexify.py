"""Two ways to turn a non-convex piecewise-cubic outline into a convex one.

``smooth_junctions`` nudges the two control points around each offending
junction onto a common line through the junction. ``hull_degree_curve``
drops the offending points and uses the hull of the control points as the
control polygon of a single high-degree curve.
"""

from __future__ import annotations

from scipy.spatial.distance import directed_hausdorff

from .bezier import BezierCurve, CubicBezier, _eval_many, point_at_general
from .errors import DegenerateError, GeometryError, RepairError
from .geom import Point2, Tolerances, convex_hull
from .path import (
    ClosedBezierPath,
    JunctionClass,
    classify_junction,
    control_polygon,
    default_tolerances,
    junction_points,
    path_orientation,
    segment_convex,
)

__all__ = ["smooth_junctions", "hull_degree_curve", "shape_deviation", "sample_boundary"]


def _project(p: Point2, origin: Point2, d: Point2) -> Point2:
    t = (p - origin).dot(d)
    return Point2(origin.x + t * d.x, origin.y + t * d.y)


def smooth_junctions(
    path: ClosedBezierPath,
    tol: Tolerances | None = None,
    max_iter: int = 10,
    smooth_all: bool = False,
) -> tuple[ClosedBezierPath, float]:
    """Collinearize the controls around every reflex junction.

    For junction ``(A, J, B)`` both ``A`` and ``B`` are replaced by their
    orthogonal projections onto the line through ``J`` parallel to ``B - A``:
    the smallest squared movement that makes the junction smooth with ``J``
    fixed. With ``smooth_all`` every non-smooth junction is treated.

    Returns the repaired path and the largest distance any control point
    moved. Raises :class:`RepairError` if a segment stops being convex or if
    offending junctions remain after ``max_iter`` passes.
    """
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    tol = tol or default_tolerances(path)
    w = path_orientation(path, tol)
    n = len(path.segments)
    for k, seg in enumerate(path.segments):
        if not segment_convex(seg, w, tol):
            raise RepairError(f"segment {k} is not convex; junction smoothing cannot repair it")

    targets = {JunctionClass.NONCONVEX_NON_SMOOTH}
    if smooth_all:
        targets.add(JunctionClass.CONVEX_NON_SMOOTH)

    original = path
    current = path
    for _ in range(max_iter):
        todo = [
            k for k in range(n)
            if classify_junction(current, k, tol, winding=w) in targets
        ]
        if not todo:
            break
        segs = [list(s) for s in current.segments]
        for k in todo:
            a, j, b = junction_points(current, k)
            ab = b - a
            length = ab.norm()
            if length <= tol.eps_join:
                raise DegenerateError(f"degenerate junction direction at junction {k}")
            d = ab / length
            a2 = _project(a, j, d)
            b2 = _project(b, j, d)
            if (a2 - j).dot(d) >= 0.0 or (b2 - j).dot(d) <= 0.0:
                raise DegenerateError(
                    f"degenerate junction direction at junction {k}: "
                    "junction does not lie between its projected neighbours"
                )
            segs[k][2] = a2
            segs[(k + 1) % n][1] = b2
        current = ClosedBezierPath(tuple(CubicBezier(*s) for s in segs))
        for k in {k for j in todo for k in (j, (j + 1) % n)}:
            if not segment_convex(current.segments[k], w, tol):
                raise RepairError(f"repair broke segment convexity at segment {k}")
    else:
        left = [
            k for k in range(n)
            if classify_junction(current, k, tol, winding=w) in targets
        ]
        if left:
            raise RepairError(f"did not converge in {max_iter} iterations; junctions {left} remain")

    if current is original:
        return original, 0.0
    before = control_polygon(original).vertices
    after = control_polygon(current).vertices
    return current, max(p.distance(q) for p, q in zip(before, after))


def hull_degree_curve(
    path: ClosedBezierPath, tol: Tolerances | None = None, closed: bool = True
) -> BezierCurve:
    """Single Bezier curve whose control polygon is the hull of the path's controls.

    Hull vertices are taken counter-clockwise starting at the one nearest the
    path's first point. With ``closed`` the start vertex is repeated at the
    end, giving degree ``H`` for ``H`` hull vertices; otherwise degree
    ``H - 1``.
    """
    tol = tol or default_tolerances(path)
    verts = control_polygon(path).vertices
    hull, _ = convex_hull(verts, tol)
    if len(hull) < 3:
        raise DegenerateError(f"degenerate hull: {len(hull)} vertices")
    start = verts[0]
    # min() keeps the first of equally near vertices.
    i0 = min(range(len(hull)), key=lambda i: hull[i].distance(start))
    ring = hull[i0:] + hull[:i0]
    if closed:
        ring.append(ring[0])
    return BezierCurve(tuple(ring))


def sample_boundary(shape, m: int) -> list[Point2]:
    """``m`` boundary points; for paths, spread evenly over the segments.

    Samples come at fixed parameters, so two paths with the same segment
    count are sampled at corresponding points.
    """
    if isinstance(shape, BezierCurve):
        if shape.degree == 3:
            return _eval_many(CubicBezier(*shape.control), [k / (m - 1) for k in range(m)])
        return [point_at_general(shape, k / (m - 1)) for k in range(m)]
    if isinstance(shape, ClosedBezierPath):
        n = len(shape.segments)
        out = []
        for i in range(m):
            g = i * n / m
            k = min(int(g), n - 1)
            # Reverse parameter convention: u = 1 is the segment start.
            out.extend(_eval_many(shape.segments[k], [1.0 - (g - k)]))
        return out
    raise TypeError(f"cannot sample {type(shape).__name__}")


def shape_deviation(a, b, m: int = 1024) -> float:
    """Symmetric Hausdorff distance between ``m``-point samplings of two boundaries."""
    if m < 64:
        raise GeometryError(f"shape_deviation needs m >= 64, got {m}")
    pa = sample_boundary(a, m)
    pb = sample_boundary(b, m)
    return max(directed_hausdorff(pa, pb)[0], directed_hausdorff(pb, pa)[0])
