"""Closed piecewise-cubic paths, their control polygon and junction analysis.

Segments are numbered ``0..N-1``. Junction ``k`` is the shared point between
segment ``k`` and segment ``(k + 1) % N``, so junction ``N-1`` closes the
path back onto the start of segment 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .bezier import CubicBezier, control_quad_convex, quad_orientation
from .errors import DegenerateError, GeometryError, OpenPathError
from .geom import (
    Point2,
    Tolerances,
    convex_hull,
    is_convex_polygon,
    orientation,
    signed_area,
    turning_number,
)

__all__ = [
    "ClosedBezierPath",
    "ControlPolygon",
    "JunctionClass",
    "ConvexityReport",
    "from_segments",
    "control_polygon",
    "path_orientation",
    "classify_junction",
    "is_convex",
    "analyze",
    "default_tolerances",
]


@dataclass(frozen=True)
class ClosedBezierPath:
    """N >= 2 cubic segments where each end point is the next start point.

    Direct construction requires exact continuity; use :func:`from_segments`
    to snap nearly-coincident endpoints.
    """

    segments: tuple

    def __post_init__(self):
        segs = tuple(s if isinstance(s, CubicBezier) else CubicBezier(*s) for s in self.segments)
        if len(segs) < 2:
            raise GeometryError(f"a closed path needs at least 2 segments, got {len(segs)}")
        n = len(segs)
        for k in range(n):
            if segs[k].p3 != segs[(k + 1) % n].p0:
                raise OpenPathError(f"open path at junction {k}", junction=k)
        object.__setattr__(self, "segments", segs)

    def __len__(self):
        return len(self.segments)

    @property
    def control_points(self) -> list[Point2]:
        return control_polygon(self).vertices

    def reversed(self) -> "ClosedBezierPath":
        return ClosedBezierPath(tuple(s.reversed() for s in reversed(self.segments)))

    def transformed(self, fn) -> "ClosedBezierPath":
        """Apply a point map to every control point (shared junctions stay shared)."""
        return ClosedBezierPath(tuple(s.transformed(fn) for s in self.segments))


def from_segments(segs: Sequence, tol: Tolerances | None = None) -> ClosedBezierPath:
    segs = [s if isinstance(s, CubicBezier) else CubicBezier(*s) for s in segs]
    n = len(segs)
    if n < 2:
        raise GeometryError(f"a closed path needs at least 2 segments, got {n}")
    tol = tol or Tolerances.for_points([p for s in segs for p in s])
    ends = [s.p3 for s in segs]
    for k in range(n):
        a = ends[k]
        b = segs[(k + 1) % n].p0
        if a.distance(b) > tol.eps_join:
            raise OpenPathError(
                f"open path at junction {k}: gap {a.distance(b):.6g} exceeds "
                f"eps_join={tol.eps_join:.3g}",
                junction=k,
            )
        ends[k] = a if a == b else Point2((a.x + b.x) / 2.0, (a.y + b.y) / 2.0)
    snapped = [
        CubicBezier(ends[k - 1], s.p1, s.p2, ends[k]) for k, s in enumerate(segs)
    ]
    return ClosedBezierPath(tuple(snapped))


@dataclass(frozen=True)
class ControlPolygon:
    vertices: list
    junction_positions: tuple


def control_polygon(path: ClosedBezierPath) -> ControlPolygon:
    """The 3N-vertex polygon through all control points, junctions once.

    Vertex ``3k`` is the start of segment ``k``; junction ``k`` (the end of
    segment ``k``) sits at position ``3(k+1) mod 3N``.
    """
    verts = []
    for s in path.segments:
        verts.extend((s.p0, s.p1, s.p2))
    n = len(path.segments)
    return ControlPolygon(verts, tuple((3 * (k + 1)) % (3 * n) for k in range(n)))


def default_tolerances(path: ClosedBezierPath) -> Tolerances:
    return Tolerances.for_points(control_polygon(path).vertices)


def path_orientation(path: ClosedBezierPath, tol: Tolerances | None = None) -> int:
    """Winding sign of the control polygon: +1 counter-clockwise."""
    tol = tol or default_tolerances(path)
    a2 = 2.0 * signed_area(control_polygon(path).vertices)
    if abs(a2) <= tol.eps_col:
        raise DegenerateError("degenerate path: control polygon has zero area")
    return 1 if a2 > 0 else -1


class JunctionClass(enum.Enum):
    CONVEX_NON_SMOOTH = "ConvexNonSmooth"
    SMOOTH_CONVEX = "SmoothConvex"
    NONCONVEX_NON_SMOOTH = "NonConvexNonSmooth"

    def __str__(self):
        return self.value


def junction_points(path: ClosedBezierPath, k: int) -> tuple[Point2, Point2, Point2]:
    """``(A, J, B)``: the incoming control, the junction, the outgoing control."""
    n = len(path.segments)
    if not 0 <= k < n:
        raise IndexError(f"junction index {k} out of range for {n} segments")
    left = path.segments[k]
    right = path.segments[(k + 1) % n]
    return left.p2, left.p3, right.p1


def classify_junction(
    path: ClosedBezierPath,
    k: int,
    tol: Tolerances | None = None,
    winding: int | None = None,
) -> JunctionClass:
    """Three-way class of junction ``k`` from its turn sign versus the winding.

    Only meaningful when both adjacent segments are convex and bulge
    outward; :func:`analyze` reports that separately.
    """
    tol = tol or default_tolerances(path)
    a, j, b = junction_points(path, k)
    if a.distance(j) <= tol.eps_join or b.distance(j) <= tol.eps_join:
        raise DegenerateError(f"degenerate junction {k}: control point coincides with junction")
    w = winding if winding is not None else path_orientation(path, tol)
    t = orientation(a, j, b, tol.eps_col)
    if t == 0:
        return JunctionClass.SMOOTH_CONVEX
    if t == w:
        return JunctionClass.CONVEX_NON_SMOOTH
    return JunctionClass.NONCONVEX_NON_SMOOTH


def is_convex(path: ClosedBezierPath, tol: Tolerances | None = None) -> bool:
    """Convexity of the region bounded by the path, via its control polygon."""
    tol = tol or default_tolerances(path)
    return is_convex_polygon(control_polygon(path).vertices, tol)


def segment_convex(seg: CubicBezier, winding: int, tol: Tolerances) -> bool:
    """Control quad convex and not wound against the path (no inward bulge)."""
    if not control_quad_convex(seg, tol):
        return False
    return quad_orientation(seg, tol) in (0, winding)


@dataclass(frozen=True)
class ConvexityReport:
    is_convex: bool
    orientation: int
    per_segment_quad_convex: tuple
    junction_classes: tuple
    hull_vertex_indices: frozenset
    control_points: int
    hull_points: int
    nonconvex_junctions: int
    turning_number: int = 1
    tolerances: Tolerances = field(default_factory=Tolerances)

    @property
    def counts(self) -> dict:
        return {
            "control_points": self.control_points,
            "hull_points": self.hull_points,
            "nonconvex_junctions": self.nonconvex_junctions,
        }

    @property
    def nonconvex_junction_indices(self) -> list[int]:
        return [
            k for k, c in enumerate(self.junction_classes)
            if c is JunctionClass.NONCONVEX_NON_SMOOTH
        ]

    @property
    def nonconvex_segment_indices(self) -> list[int]:
        return [k for k, ok in enumerate(self.per_segment_quad_convex) if not ok]

    def is_consistent(self) -> bool:
        """Polygon verdict agrees with the per-segment/per-junction one."""
        local = (
            all(self.per_segment_quad_convex)
            and not self.nonconvex_junction_indices
            and abs(self.turning_number) == 1
        )
        return (
            self.is_convex == local
            and self.control_points == 3 * len(self.per_segment_quad_convex)
            and self.hull_points == len(self.hull_vertex_indices)
            and self.nonconvex_junctions == len(self.nonconvex_junction_indices)
        )


def analyze(path: ClosedBezierPath, tol: Tolerances | None = None) -> ConvexityReport:
    tol = tol or default_tolerances(path)
    poly = control_polygon(path)
    w = path_orientation(path, tol)
    quads = tuple(segment_convex(s, w, tol) for s in path.segments)
    classes = tuple(
        classify_junction(path, k, tol, winding=w) for k in range(len(path.segments))
    )
    _, hull_idx = convex_hull(poly.vertices, tol)
    report = ConvexityReport(
        is_convex=is_convex_polygon(poly.vertices, tol),
        orientation=w,
        per_segment_quad_convex=quads,
        junction_classes=classes,
        hull_vertex_indices=frozenset(hull_idx),
        control_points=len(poly.vertices),
        hull_points=len(hull_idx),
        nonconvex_junctions=sum(c is JunctionClass.NONCONVEX_NON_SMOOTH for c in classes),
        turning_number=turning_number(poly.vertices, tol),
        tolerances=tol,
    )
    if not report.is_consistent():
        raise AssertionError(f"inconsistent convexity report: {report}")
    return report
