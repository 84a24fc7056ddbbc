"""Planar primitives: points, orientation, signed area, convexity and hulls.

Every predicate takes an explicit collinearity threshold applied to the raw
orientation determinant (squared path units). Use :meth:`Tolerances.for_points`
to obtain defaults scaled to the input's bounding box.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateError, GeometryError

__all__ = [
    "Point2",
    "Tolerances",
    "Hull",
    "orientation",
    "cross",
    "signed_area",
    "turning_number",
    "is_convex_polygon",
    "convex_hull",
    "bbox_diagonal",
]

TWO_PI = 2.0 * math.pi


class Point2(namedtuple("Point2", "x y")):
    """Immutable 2D point with finite float coordinates.

    Arithmetic is vector arithmetic, not tuple concatenation.
    """

    __slots__ = ()

    def __new__(cls, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise GeometryError(f"non-finite coordinate ({x!r}, {y!r})")
        return super().__new__(cls, x, y)

    def __add__(self, other):
        return Point2(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point2(self.x - other[0], self.y - other[1])

    def __mul__(self, k):
        return Point2(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return Point2(self.x / k, self.y / k)

    def __neg__(self):
        return Point2(-self.x, -self.y)

    def dot(self, other) -> float:
        return self.x * other[0] + self.y * other[1]

    def cross(self, other) -> float:
        return self.x * other[1] - self.y * other[0]

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other) -> float:
        return math.hypot(self.x - other[0], self.y - other[1])


def as_point(p) -> Point2:
    return p if isinstance(p, Point2) else Point2(p[0], p[1])


def bbox_diagonal(points: Iterable) -> float:
    """Length of the bounding-box diagonal, 0.0 for a single point."""
    xs, ys = [], []
    for p in points:
        xs.append(p[0])
        ys.append(p[1])
    if not xs:
        return 0.0
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


@dataclass(frozen=True)
class Tolerances:
    """Numerical policy for every verdict.

    Attributes:
        eps_col: collinearity threshold on the orientation determinant
            (squared path units).
        eps_join: distance below which two points are coincident (path units).
        samples: sampling density used by the oracles.
    """

    eps_col: float = 1e-12
    eps_join: float = 1e-9
    samples: int = 1024

    def __post_init__(self):
        if not (self.eps_col >= 0.0 and math.isfinite(self.eps_col)):
            raise ValueError(f"eps_col must be finite and >= 0, got {self.eps_col!r}")
        if not (self.eps_join >= 0.0 and math.isfinite(self.eps_join)):
            raise ValueError(f"eps_join must be finite and >= 0, got {self.eps_join!r}")
        if int(self.samples) != self.samples or self.samples < 16:
            raise ValueError(f"samples must be an integer >= 16, got {self.samples!r}")

    @classmethod
    def for_points(
        cls,
        points: Iterable,
        *,
        rel_col: float = 1e-12,
        rel_join: float = 1e-9,
        samples: int = 1024,
    ) -> "Tolerances":
        """Tolerances scaled by the bounding-box diagonal ``d`` of ``points``.

        ``eps_col = rel_col * d**2`` and ``eps_join = rel_join * d``. A
        zero-size box falls back to ``d = 1``.
        """
        d = bbox_diagonal(points) or 1.0
        if not math.isfinite(d * d):
            raise GeometryError("coordinates too large for a finite tolerance scale")
        return cls(eps_col=rel_col * d * d, eps_join=rel_join * d, samples=samples)

    def scaled(self, factor: float) -> "Tolerances":
        """Tolerances for the same geometry uniformly scaled by ``factor``."""
        return Tolerances(self.eps_col * factor * factor, self.eps_join * abs(factor), self.samples)


def cross(a, b, c) -> float:
    """Raw orientation determinant ``(b - a) x (c - a)``."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _sign(det: float, eps: float) -> int:
    if det > eps:
        return 1
    if det < -eps:
        return -1
    return 0


def orientation(a, b, c, eps_col: float = 0.0) -> int:
    """+1 for a left turn a->b->c, -1 for a right turn, 0 if collinear.

    Collinear means ``|det| <= eps_col``.
    """
    return _sign(cross(a, b, c), eps_col)


def signed_area(points: Sequence) -> float:
    """Shoelace area; positive for counter-clockwise vertex order."""
    n = len(points)
    if n < 3:
        raise DegenerateError("degenerate polygon: fewer than 3 vertices")
    s = 0.0
    for i in range(n):
        x0, y0 = points[i - 1][0], points[i - 1][1]
        x1, y1 = points[i][0], points[i][1]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def _check_polygon(points: Sequence, tol: Tolerances) -> list[Point2]:
    pts = [as_point(p) for p in points]
    n = len(pts)
    if n < 3:
        raise DegenerateError("degenerate polygon: fewer than 3 vertices")
    for i in range(n):
        if pts[i].distance(pts[(i + 1) % n]) <= tol.eps_join:
            raise DegenerateError(
                f"degenerate polygon: vertices {i} and {(i + 1) % n} coincide"
            )
    return pts


def _turns(pts: list[Point2], eps: float) -> tuple[list[int], float]:
    """Per-vertex turn signs and the total signed turning angle.

    A zero-sign reversal (the polygon doubling back on itself) counts as a
    half turn in the direction of the first nonzero turn.
    """
    n = len(pts)
    signs = []
    total = 0.0
    reversals = 0
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        e1x, e1y = b.x - a.x, b.y - a.y
        e2x, e2y = c.x - b.x, c.y - b.y
        det = e1x * e2y - e1y * e2x
        dot = e1x * e2x + e1y * e2y
        s = _sign(det, eps)
        signs.append(s)
        if s == 0 and dot < 0.0:
            reversals += 1
        else:
            total += math.atan2(det, dot)
    if reversals:
        ref = next((s for s in signs if s), 1)
        total += ref * math.pi * reversals
    return signs, total


def turning_number(points: Sequence, tol: Tolerances | None = None) -> int:
    """Total turning of the closed polygon in units of full turns."""
    tol = tol or Tolerances.for_points(points)
    pts = _check_polygon(points, tol)
    _, total = _turns(pts, tol.eps_col)
    return round(total / TWO_PI)


def is_convex_polygon(points: Sequence, tol: Tolerances | None = None) -> bool:
    """True iff the closed polygon is convex.

    All turns must share one sign (collinear turns allowed) and the polygon
    must turn exactly once, which rules out star-shaped self-intersections.
    Raises :class:`DegenerateError` for fewer than 3 vertices or for
    consecutive vertices closer than ``tol.eps_join``.
    """
    tol = tol or Tolerances.for_points(points)
    pts = _check_polygon(points, tol)
    signs, total = _turns(pts, tol.eps_col)
    if 1 in signs and -1 in signs:
        return False
    return abs(round(total / TWO_PI)) == 1


class Hull(NamedTuple):
    vertices: list
    indices: frozenset


def convex_hull(points: Sequence, tol: Tolerances | None = None) -> Hull:
    """Strict convex hull by monotone chain.

    Returns the hull vertices in counter-clockwise order and the set of input
    positions they come from. Points inside a hull edge (collinear within
    ``tol.eps_col``) are not vertices. Repeated points map to their first
    occurrence. One or two distinct points give a degenerate hull.
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise DegenerateError("convex hull of an empty point set")
    tol = tol or Tolerances.for_points(pts)
    eps = tol.eps_col

    first = {}
    for i, p in enumerate(pts):
        first.setdefault(p, i)
    order = sorted(first.values(), key=lambda i: (pts[i].x, pts[i].y))
    if len(order) == 1:
        return Hull([pts[order[0]]], frozenset(order))

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0.0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    idx = lower[:-1] + upper[:-1]
    if len(idx) < 2:
        idx = [order[0], order[-1]]
    # Drop nearly collinear vertices afterwards: doing it inside the chain
    # can discard a true extreme when the sort order runs against a
    # near-vertical edge.
    exact = list(idx)
    changed = eps > 0.0
    while changed and len(idx) > 2:
        changed = False
        for k in range(len(idx)):
            a, b, c = idx[k - 1], idx[k], idx[(k + 1) % len(idx)]
            if cross(pts[a], pts[b], pts[c]) <= eps:
                del idx[k]
                changed = True
                break
    if len(idx) == 2 and len(exact) > 2:
        # A sliver: keep its two farthest-apart vertices.
        pair = max(
            ((a, b) for a in exact for b in exact if a < b),
            key=lambda ab: pts[ab[0]].distance(pts[ab[1]]),
        )
        idx = sorted(pair, key=lambda i: (pts[i].x, pts[i].y))
    return Hull([pts[i] for i in idx], frozenset(idx))
