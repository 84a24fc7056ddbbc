"""Cubic and general-degree Bezier curves.

Interpolation follows ``q_i = u*p_i + (1-u)*p_{i+1}``: the weight ``u`` sits on
the lower-index point. This is the reverse of the usual Bernstein convention,
so ``u = 1`` evaluates to ``p0`` and ``u = 0`` to ``p3``. Use ``1 - t`` to
convert from the textbook parameter ``t``.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateError, GeometryError
from .geom import Point2, Tolerances, as_point, is_convex_polygon, signed_area

__all__ = [
    "CubicBezier",
    "DeCasteljauFrame",
    "BezierCurve",
    "frame_at",
    "point_at",
    "tangent_segment",
    "control_quad_convex",
    "quad_orientation",
    "sample",
    "region_convexity_oracle",
    "point_at_general",
    "line_cubic",
]


def _lerp(a: Point2, b: Point2, u: float) -> Point2:
    return Point2(u * a.x + (1.0 - u) * b.x, u * a.y + (1.0 - u) * b.y)


def _check_u(u: float, open_interval: bool = False) -> float:
    u = float(u)
    if open_interval:
        ok = 0.0 < u < 1.0
    else:
        ok = 0.0 <= u <= 1.0
    if not ok:
        raise GeometryError(f"parameter out of range: u={u!r}")
    return u


class CubicBezier(namedtuple("CubicBezier", "p0 p1 p2 p3")):
    """Four control points of one cubic segment (one ``curveto``)."""

    __slots__ = ()

    def __new__(cls, p0, p1, p2, p3):
        pts = [as_point(p) for p in (p0, p1, p2, p3)]
        if pts[1] == pts[0] and pts[2] == pts[0] and pts[3] == pts[0]:
            raise DegenerateError("degenerate cubic: all control points coincide")
        return super().__new__(cls, *pts)

    def reversed(self) -> "CubicBezier":
        return CubicBezier(self.p3, self.p2, self.p1, self.p0)

    def transformed(self, fn) -> "CubicBezier":
        """Apply a point map ``fn((x, y)) -> (x', y')`` to every control point."""
        return CubicBezier(*(fn(p) for p in self))


def line_cubic(a, b) -> CubicBezier:
    """Straight segment from ``a`` to ``b`` with controls at its thirds."""
    a = as_point(a)
    b = as_point(b)
    c1 = Point2((2.0 * a.x + b.x) / 3.0, (2.0 * a.y + b.y) / 3.0)
    c2 = Point2((a.x + 2.0 * b.x) / 3.0, (a.y + 2.0 * b.y) / 3.0)
    return CubicBezier(a, c1, c2, b)


@dataclass(frozen=True)
class DeCasteljauFrame:
    """All intermediate points of one de Casteljau evaluation.

    ``[r0, r1]`` is the tangent segment at the curve point ``s``.
    """

    u: float
    q0: Point2
    q1: Point2
    q2: Point2
    r0: Point2
    r1: Point2
    s: Point2


def frame_at(c: CubicBezier, u: float) -> DeCasteljauFrame:
    u = _check_u(u)
    q0 = _lerp(c.p0, c.p1, u)
    q1 = _lerp(c.p1, c.p2, u)
    q2 = _lerp(c.p2, c.p3, u)
    r0 = _lerp(q0, q1, u)
    r1 = _lerp(q1, q2, u)
    return DeCasteljauFrame(u, q0, q1, q2, r0, r1, _lerp(r0, r1, u))


def point_at(c: CubicBezier, u: float) -> Point2:
    return frame_at(c, u).s


def tangent_segment(
    c: CubicBezier, u: float, tol: Tolerances | None = None
) -> tuple[Point2, Point2]:
    """Tangent segment ``(r0, r1)`` at interior parameter ``u``."""
    u = _check_u(u, open_interval=True)
    tol = tol or Tolerances.for_points(c)
    f = frame_at(c, u)
    if f.r0.distance(f.r1) <= tol.eps_join:
        raise DegenerateError(f"degenerate tangent at u={u!r}")
    return f.r0, f.r1


def control_quad_convex(c: CubicBezier, tol: Tolerances | None = None) -> bool:
    """Convexity of the control quadrilateral ``[p0, p1, p2, p3, p0]``.

    Equivalent to convexity of the region bounded by the curve and the chord
    ``[p0, p3]``.
    """
    return is_convex_polygon(list(c), tol or Tolerances.for_points(c))


def quad_orientation(c: CubicBezier, tol: Tolerances | None = None) -> int:
    """Winding sign of the control quadrilateral, 0 when (nearly) flat."""
    tol = tol or Tolerances.for_points(c)
    a2 = 2.0 * signed_area(list(c))
    if a2 > tol.eps_col:
        return 1
    if a2 < -tol.eps_col:
        return -1
    return 0


def _eval_many(c: CubicBezier, params) -> list[Point2]:
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = c
    out = []
    for u in params:
        v = 1.0 - u
        ax, ay = u * x0 + v * x1, u * y0 + v * y1
        bx, by = u * x1 + v * x2, u * y1 + v * y2
        cx, cy = u * x2 + v * x3, u * y2 + v * y3
        dx, dy = u * ax + v * bx, u * ay + v * by
        ex, ey = u * bx + v * cx, u * by + v * cy
        out.append(Point2(u * dx + v * ex, u * dy + v * ey))
    return out


def sample(c: CubicBezier, m: int) -> list[Point2]:
    """``m`` points at ``u = k/(m-1)``; runs from ``p3`` to ``p0``."""
    if m < 2:
        raise GeometryError(f"need at least 2 samples, got {m}")
    return _eval_many(c, [k / (m - 1) for k in range(m)])


def _dedupe_cyclic(pts: list[Point2], eps: float) -> list[Point2]:
    out: list[Point2] = []
    for p in pts:
        if not out or out[-1].distance(p) > eps:
            out.append(p)
    while len(out) > 1 and out[-1].distance(out[0]) <= eps:
        out.pop()
    return out


# Parameter ladder next to each endpoint (ratio sqrt(2), down to 2**-40):
# inflections close to an endpoint and chord crossings next to p0/p3 live
# far below the uniform spacing 1/m and are too thin for float signs.
_END_OFFSETS = tuple(2.0 ** (-k / 2) for k in range(80, 3, -1))


def _exact_ladder(c: CubicBezier, at_p0: bool) -> list[tuple[int, int, int]]:
    """Ladder samples as exact homogeneous integer points ``(w, X, Y)``.

    Coordinates are scaled by a common power of two so every control point is
    an integer; a sample at ``u = a/D`` is ``(D**3, X, Y)`` with the Bernstein
    sum over integers. Signs of 3x3 determinants are then exact.
    """
    if at_p0:
        us = [1.0 - h for h in reversed(_END_OFFSETS)] + [1.0]
    else:
        us = [0.0, *_END_OFFSETS]
    xs, ys = _integer_controls(c)
    out = []
    for u in us:
        a, d = u.as_integer_ratio()
        b = d - a
        k0, k1, k2, k3 = a * a * a, 3 * a * a * b, 3 * a * b * b, b * b * b
        out.append((
            d * d * d,
            k0 * xs[0] + k1 * xs[1] + k2 * xs[2] + k3 * xs[3],
            k0 * ys[0] + k1 * ys[1] + k2 * ys[2] + k3 * ys[3],
        ))
    return out


def _integer_controls(c: CubicBezier) -> tuple[list[int], list[int]]:
    ratios = [v.as_integer_ratio() for p in c for v in p]
    den = max(d for _, d in ratios)
    ints = [n * (den // d) for n, d in ratios]
    return ints[0::2], ints[1::2]


def _hdet(p, q, r) -> int:
    return (
        p[0] * (q[1] * r[2] - q[2] * r[1])
        - p[1] * (q[0] * r[2] - q[2] * r[0])
        + p[2] * (q[0] * r[1] - q[1] * r[0])
    )


def region_convexity_oracle(
    c: CubicBezier, m: int = 1024, tol: Tolerances | None = None
) -> bool:
    """Slow direct check that the curve plus its chord bound a convex region.

    Three sampled conditions, all necessary for convexity and jointly
    sufficient as sampling refines:

    * the ring of ``m`` uniform curve samples closed by ``[p0, p3]`` is a
      convex polygon (float arithmetic, ``tol`` applies);
    * no sample of a geometric parameter ladder next to ``p0`` and ``p3``
      lies strictly outside the chord line;
    * consecutive ladder samples never turn against the ring's orientation.

    The ladder checks run in exact rational arithmetic with no threshold.
    Meant for validating :func:`control_quad_convex`, not for production use.
    """
    if m < 64:
        raise GeometryError(f"oracle needs at least 64 samples, got {m}")
    tol = tol or Tolerances.for_points(c)
    ring = _dedupe_cyclic(sample(c, m), tol.eps_join)
    # Fully flat curves may collapse onto a segment: still a (degenerate) convex set.
    if len(ring) < 3:
        return True
    if not is_convex_polygon(ring, tol):
        return False
    area2 = 2.0 * signed_area(ring)
    if abs(area2) <= tol.eps_col:
        return True
    s = 1 if area2 > 0 else -1
    xs, ys = _integer_controls(c)
    h0 = (1, xs[0], ys[0])
    h3 = (1, xs[3], ys[3])
    for seq in (_exact_ladder(c, at_p0=False), _exact_ladder(c, at_p0=True)):
        for q in seq[1:-1]:
            if s * _hdet(h0, h3, q) < 0:
                return False
        for i in range(1, len(seq) - 1):
            if s * _hdet(seq[i - 1], seq[i], seq[i + 1]) < 0:
                return False
    return True


@dataclass(frozen=True)
class BezierCurve:
    """Bezier curve of arbitrary degree ``len(control) - 1``."""

    control: tuple

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.control)
        if len(pts) < 2:
            raise GeometryError("a Bezier curve needs at least 2 control points")
        object.__setattr__(self, "control", pts)

    @property
    def degree(self) -> int:
        return len(self.control) - 1


def point_at_general(b: BezierCurve | Sequence, u: float) -> Point2:
    """de Casteljau evaluation for any degree, same convention as :func:`frame_at`."""
    u = _check_u(u)
    pts = list(b.control if isinstance(b, BezierCurve) else (as_point(p) for p in b))
    if len(pts) < 2:
        raise GeometryError("a Bezier curve needs at least 2 control points")
    while len(pts) > 1:
        pts = [_lerp(pts[i], pts[i + 1], u) for i in range(len(pts) - 1)]
    return pts[0]
