"""Convexity of closed piecewise-cubic Bezier outlines.

A closed outline made of cubic segments is convex exactly when the polygon
through all its control points is convex. This package checks that, tells
which junctions break it, and offers two repairs.
"""

from .bezier import BezierCurve, CubicBezier, frame_at, point_at, point_at_general
from .convexify import hull_degree_curve, shape_deviation, smooth_junctions
from .errors import (
    DegenerateError,
    GeometryError,
    OpenPathError,
    PathSyntaxError,
    RepairError,
)
from .geom import Point2, Tolerances, convex_hull, is_convex_polygon, orientation
from .path import (
    ClosedBezierPath,
    ConvexityReport,
    JunctionClass,
    analyze,
    classify_junction,
    control_polygon,
    from_segments,
    is_convex,
)
from .pathio import parse_postscript_path, parse_svg_path, read_path_file

__all__ = [
    "BezierCurve",
    "ClosedBezierPath",
    "ConvexityReport",
    "CubicBezier",
    "DegenerateError",
    "GeometryError",
    "JunctionClass",
    "OpenPathError",
    "PathSyntaxError",
    "Point2",
    "RepairError",
    "Tolerances",
    "analyze",
    "classify_junction",
    "control_polygon",
    "convex_hull",
    "frame_at",
    "from_segments",
    "hull_degree_curve",
    "is_convex",
    "is_convex_polygon",
    "orientation",
    "parse_postscript_path",
    "parse_svg_path",
    "point_at",
    "point_at_general",
    "read_path_file",
    "shape_deviation",
    "smooth_junctions",
]

__version__ = "0.1.0"
