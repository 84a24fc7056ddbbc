"""Reference shapes used by tests, docs and the bundled data files.

``logo_like_path`` is a synthetic stand-in built to have the structure of a
rounded logo outline: 11 cubic segments (33 control points), every control
quadrilateral convex, 7 junctions pushed slightly inside the chord of their
neighbours (26 hull points remain). It is not any real logo's geometry.
"""

from __future__ import annotations

import math
from importlib import resources

from .bezier import CubicBezier
from .geom import Point2
from .path import ClosedBezierPath

KAPPA = 4.0 * (math.sqrt(2.0) - 1.0) / 3.0

LOGO_SEGMENTS = 11
LOGO_DENTED_JUNCTIONS = (0, 1, 3, 4, 6, 8, 9)


def circle_path(radius: float = 1.0, center=(0.0, 0.0), n: int = 4) -> ClosedBezierPath:
    """Counter-clockwise circle approximation with ``n`` cubic arcs.

    Each arc of angle ``a`` uses handles of length ``4/3 tan(a/4) r``; for
    ``n = 4`` that is the usual kappa constant.
    """
    cx, cy = center
    step = 2.0 * math.pi / n
    h = 4.0 / 3.0 * math.tan(step / 4.0) * radius
    if n == 4:
        h = KAPPA * radius
    # Exact axis points for n = 4 keep the kappa circle's symmetry bit-exact.
    def on_circle(t):
        c, s = math.cos(t), math.sin(t)
        if n == 4:
            c, s = round(c), round(s)
        return cx + radius * c, cy + radius * s, -s, c

    segs = []
    for k in range(n):
        x0, y0, tx0, ty0 = on_circle(k * step)
        x3, y3, tx3, ty3 = on_circle((k + 1) * step if k + 1 < n else 0.0)
        segs.append(
            CubicBezier(
                (x0, y0),
                (x0 + h * tx0, y0 + h * ty0),
                (x3 - h * tx3, y3 - h * ty3),
                (x3, y3),
            )
        )
    return ClosedBezierPath(tuple(segs))


def two_arc_path() -> ClosedBezierPath:
    """Two half-circle cubics meeting at (1, 0) and (-1, 0)."""
    h = 4.0 / 3.0
    upper = CubicBezier((1.0, 0.0), (1.0, h), (-1.0, h), (-1.0, 0.0))
    lower = CubicBezier((-1.0, 0.0), (-1.0, -h), (1.0, -h), (1.0, 0.0))
    return ClosedBezierPath((upper, lower))


def _outline(theta: float) -> tuple[float, float]:
    # Slightly squashed, wobbly oval; convex because 0.02 * (3**2 - 1) << 1.
    r = 1.0 + 0.02 * math.cos(3.0 * theta + 0.4)
    return 150.0 + 118.0 * r * math.cos(theta), 140.0 + 106.0 * r * math.sin(theta)


def logo_like_path(dent: float = 0.35, digits: int = 2) -> ClosedBezierPath:
    """The 11-segment, 33-control-point fixture (counter-clockwise, y up).

    Interior control points and the four undented junctions lie on a convex
    oval. Each dented junction sits ``dent`` units inside the chord joining
    its two neighbouring controls, so it is a reflex corner of the control
    polygon and falls strictly inside the hull. Coordinates are rounded to
    ``digits`` decimals, like a real PostScript export.
    """
    n = 3 * LOGO_SEGMENTS
    # Uneven spacing, as a hand-placed pen-tool outline would have.
    thetas = [2.0 * math.pi * (i + 0.18 * math.sin(1.7 * i)) / n for i in range(n)]
    raw = [_outline(t) for t in thetas]
    pts = [Point2(round(x, digits), round(y, digits)) for x, y in raw]
    for j in LOGO_DENTED_JUNCTIONS:
        # Junction j closes segment j: vertex 3(j+1) mod n.
        v = (3 * (j + 1)) % n
        a, b = pts[v - 1], pts[(v + 1) % n]
        mx, my = (a.x + b.x) / 2.0, (a.y + b.y) / 2.0
        dx, dy = b.x - a.x, b.y - a.y
        length = math.hypot(dx, dy)
        # Inward normal of a counter-clockwise chord is its left normal.
        nx, ny = -dy / length, dx / length
        pts[v] = Point2(round(mx + dent * nx, digits), round(my + dent * ny, digits))
    segs = []
    for k in range(LOGO_SEGMENTS):
        i = 3 * k
        segs.append(CubicBezier(pts[i], pts[i + 1], pts[i + 2], pts[(i + 3) % n]))
    return ClosedBezierPath(tuple(segs))


def data_path(name: str):
    """Path to a bundled data file, e.g. ``data_path("logo_like.ps")``."""
    return resources.files("bezconvex") / "data" / name


def bundled_sources() -> dict[str, str]:
    """File name -> text of every bundled data file, generated from the shapes above."""
    from .pathio import format_postscript, format_svg_path_data

    def svg_doc(path, title):
        return (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1">\n'
            f"<title>{title}</title>\n"
            f'<path d="{format_svg_path_data(path)}"/>\n'
            "</svg>\n"
        )

    logo = logo_like_path()
    circle = circle_path(radius=100.0, center=(120.0, 120.0))
    return {
        "logo_like.ps": format_postscript(logo, "synthetic 11-segment rounded outline"),
        "logo_like.svg": svg_doc(logo, "synthetic 11-segment rounded outline"),
        "circle.ps": format_postscript(circle, "4-arc circle"),
        "circle.svg": svg_doc(circle, "4-arc circle"),
        "two_arcs.txt": format_svg_path_data(two_arc_path()) + "\n",
    }


if __name__ == "__main__":
    import sys
    from pathlib import Path

    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data")
    for name, text in bundled_sources().items():
        (out / name).write_text(text)
        print(out / name)
