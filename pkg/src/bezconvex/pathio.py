"""Reading closed cubic paths from PostScript and SVG; writing SVG and JSON.

Only a path-construction subset of PostScript is understood (``moveto``,
``lineto``, ``curveto``, ``closepath``). There is no graphics state: operators
that would change the path geometry (relative moves, arcs, transforms, ...)
are rejected, everything else is skipped. SVG input is path data with
``M``/``L``/``C``/``Z`` in either case.

Parsing keeps y as written. Rendering flips PostScript (y-up) input for
display; analysis never does, since convexity does not care about the
reflection.
"""

from __future__ import annotations

import json
import math
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from .bezier import BezierCurve, CubicBezier, line_cubic
from .errors import GeometryError, PathSyntaxError
from .geom import Point2, Tolerances, bbox_diagonal
from .path import ClosedBezierPath, ConvexityReport, control_polygon, from_segments

__all__ = [
    "PathDocument",
    "RenderOptions",
    "parse_postscript_path",
    "parse_svg_path",
    "read_path_file",
    "detect_format",
    "emit_svg",
    "emit_report_json",
    "format_svg_path_data",
    "format_postscript",
    "format_control_points",
]


@dataclass(frozen=True)
class PathDocument:
    path: ClosedBezierPath
    source_format: str
    source_name: str = "<string>"


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _error(text: str, offset: int, message: str) -> PathSyntaxError:
    line, col = _line_col(text, offset)
    return PathSyntaxError(message, offset, line, col)


_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


class _Builder:
    """Accumulates one subpath; shared by both parsers."""

    def __init__(self, text: str, tol: Tolerances | None):
        self.text = text
        self.tol = tol
        self.start: Point2 | None = None
        self.current: Point2 | None = None
        self.segments: list[CubicBezier] = []
        self.closed = False
        self.end_offset = len(text)

    def _point(self, x, y, offset) -> Point2:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise _error(self.text, offset, "non-finite coordinate")
        return Point2(x, y)

    def _check_open(self, offset, op):
        if self.closed:
            raise _error(self.text, offset, f"multiple subpaths: {op} after closepath")

    def move(self, x, y, offset):
        self._check_open(offset, "moveto")
        if self.segments:
            raise _error(self.text, offset, "multiple subpaths: second moveto")
        self.start = self.current = self._point(x, y, offset)

    def line(self, x, y, offset, op="lineto"):
        self._check_open(offset, op)
        if self.current is None:
            raise _error(self.text, offset, f"{op} before moveto")
        p = self._point(x, y, offset)
        if p == self.current:
            raise _error(self.text, offset, f"zero-length {op}")
        self.segments.append(line_cubic(self.current, p))
        self.current = p

    def curve(self, coords, offset, op="curveto"):
        self._check_open(offset, op)
        if self.current is None:
            raise _error(self.text, offset, f"{op} before moveto")
        pts = [self._point(coords[i], coords[i + 1], offset) for i in (0, 2, 4)]
        try:
            seg = CubicBezier(self.current, *pts)
        except GeometryError as exc:
            raise _error(self.text, offset, str(exc)) from None
        self.segments.append(seg)
        self.current = pts[2]

    def close(self, offset, op="closepath"):
        if self.current is None:
            raise _error(self.text, offset, f"{op} before moveto")
        if self.closed:
            return
        gap = self.current.distance(self.start)
        if gap > self._eps_join():
            self.segments.append(line_cubic(self.current, self.start))
            self.current = self.start
        self.closed = True

    def _eps_join(self) -> float:
        if self.tol is not None:
            return self.tol.eps_join
        pts = [p for s in self.segments for p in s] or [self.start]
        return Tolerances.for_points(pts).eps_join

    def finish(self) -> ClosedBezierPath:
        off = self.end_offset
        if self.current is None:
            raise _error(self.text, off, "no path: missing moveto")
        if not self.closed:
            if not self.segments or self.current.distance(self.start) > self._eps_join():
                raise _error(self.text, off, "unclosed path without closepath")
        if len(self.segments) < 2:
            raise _error(
                self.text, off, f"fewer than 2 segments in path ({len(self.segments)})"
            )
        try:
            return from_segments(self.segments, self.tol)
        except GeometryError as exc:
            raise _error(self.text, off, str(exc)) from None


# PostScript ------------------------------------------------------------------

_PS_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\r\n]*)
  | (?P<string>\()
  | (?P<hexstr><(?!<)[0-9A-Fa-f\s]*>)
  | (?P<dict><<|>>)
  | (?P<open>\{)
  | (?P<close>\})
  | (?P<bracket>[\[\]])
  | (?P<word>[^\s()<>\[\]{}/%]+|/[^\s()<>\[\]{}/%]*)
    """,
    re.VERBOSE,
)

_PS_PATH_OPS = {"moveto": 2, "lineto": 2, "curveto": 6, "closepath": 0}
# Operators that would alter the current path or its coordinates: not supported.
_PS_REJECTED = {
    "rmoveto", "rlineto", "rcurveto", "arc", "arcn", "arct", "arcto",
    "charpath", "strokepath", "flattenpath", "reversepath", "clippath",
    "pathforall", "ustroke", "uappend", "upath",
    "translate", "scale", "rotate", "concat", "setmatrix", "transform",
    "exec", "run", "load",
}


def _looks_numeric(word: str) -> bool:
    return bool(re.match(r"[+-]?\.?\d", word))


def _ps_string_end(text: str, i: int) -> int:
    """Index just past the ``)`` closing the string opened at ``text[i]``."""
    depth = 0
    j = i
    while j < len(text):
        ch = text[j]
        if ch == "\\":
            j += 2
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                return j + 1
        j += 1
    raise _error(text, i, "unterminated string")


def parse_postscript_path(
    text: str | bytes, tol: Tolerances | None = None, source_name: str = "<string>"
) -> PathDocument:
    """Parse one closed subpath from PostScript-subset text.

    ``lineto`` and a gap closed by ``closepath`` become straight cubics.
    Procedure bodies (``{ ... }``) and strings are skipped unexecuted. Errors
    are :class:`PathSyntaxError` with line and column.
    """
    if isinstance(text, bytes):
        text = text.decode("latin-1")
    b = _Builder(text, tol)
    stack: list[tuple[float, int]] = []
    depth = 0
    i = 0
    n = len(text)
    while i < n:
        m = _PS_TOKEN.match(text, i)
        if m is None:
            raise _error(text, i, f"unexpected character {text[i]!r}")
        kind = m.lastgroup
        start = i
        i = m.end()
        if kind in ("ws", "comment"):
            continue
        if kind == "string":
            i = _ps_string_end(text, start)
            continue
        if kind == "open":
            depth += 1
            continue
        if kind == "close":
            if depth == 0:
                raise _error(text, start, "unmatched '}'")
            depth -= 1
            continue
        if depth:
            continue
        if kind in ("hexstr", "dict", "bracket"):
            stack.clear()
            continue
        word = m.group()
        if _looks_numeric(word):
            nm = _NUMBER.fullmatch(word)
            if nm is None:
                raise _error(text, start, f"malformed number {word!r}")
            stack.append((float(word), start))
            continue
        if word.startswith("/"):
            stack.clear()
            continue
        if word in _PS_PATH_OPS:
            need = _PS_PATH_OPS[word]
            if len(stack) < need:
                raise _error(
                    text, start, f"{word} needs {need} operands, found {len(stack)}"
                )
            args = [v for v, _ in stack[len(stack) - need:]]
            stack.clear()
            if word == "moveto":
                b.move(args[0], args[1], start)
            elif word == "lineto":
                b.line(args[0], args[1], start)
            elif word == "curveto":
                b.curve(args, start)
            else:
                b.close(start)
            continue
        if word in _PS_REJECTED:
            raise _error(text, start, f"unsupported path operator {word!r}")
        # Painting, colour, save/restore, newpath... clear their operands.
        stack.clear()
    if depth:
        raise _error(text, n, "unterminated procedure '{'")
    return PathDocument(b.finish(), "postscript", source_name)


# SVG path data ----------------------------------------------------------------

_SVG_ARGS = {"M": 2, "L": 2, "C": 6, "Z": 0}
_SVG_UNSUPPORTED = set("AQSTHVaqsthv")
_WSP = re.compile(r"[\s,]*")
_SVG_NUMBER = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")


def parse_svg_path(
    d: str, tol: Tolerances | None = None, source_name: str = "<string>"
) -> PathDocument:
    """Parse SVG path data holding exactly one closed subpath.

    Supports ``M m L l C c Z z`` with implicit repetition (extra pairs after
    ``M`` are line-tos). Errors are :class:`PathSyntaxError`; ``offset`` is
    the character position in ``d``.
    """
    b = _Builder(d, tol)
    i = 0
    n = len(d)
    cmd = None
    cmd_offset = 0
    first = True

    def skip(j):
        return _WSP.match(d, j).end()

    i = skip(i)
    while i < n:
        ch = d[i]
        if ch.isalpha():
            if ch in _SVG_UNSUPPORTED:
                raise _error(d, i, f"unsupported command {ch}")
            if ch.upper() not in _SVG_ARGS:
                raise _error(d, i, f"unknown command {ch!r}")
            if first and ch not in "Mm":
                raise _error(d, i, "path data must start with a moveto")
            cmd, cmd_offset = ch, i
            first = False
            i = skip(i + 1)
            if cmd in "Zz":
                b.close(cmd_offset, op=cmd)
                continue
            if i >= n or not _SVG_NUMBER.match(d, i):
                raise _error(d, i, f"command {cmd} needs arguments")
        elif cmd is None:
            raise _error(d, i, "path data must start with a moveto")
        elif cmd in "Zz":
            raise _error(d, i, "expected a command after closepath")
        need = _SVG_ARGS[cmd.upper()]
        args = []
        arg_start = i
        for _ in range(need):
            m = _SVG_NUMBER.match(d, i)
            if m is None:
                raise _error(d, i, f"malformed path data: expected a number for {cmd}")
            args.append(float(m.group()))
            i = skip(m.end())
        rel = cmd.islower()
        base = b.current if (rel and b.current is not None) else Point2(0.0, 0.0)
        if cmd in "Mm":
            b.move(base.x + args[0], base.y + args[1], arg_start)
            # Subsequent pairs are implicit line-tos.
            cmd = "l" if rel else "L"
        elif cmd in "Ll":
            b.line(base.x + args[0], base.y + args[1], arg_start, op=cmd)
        else:
            coords = [
                base.x + args[k] if k % 2 == 0 else base.y + args[k] for k in range(6)
            ]
            b.curve(coords, arg_start, op=cmd)
    return PathDocument(b.finish(), "svg", source_name)


def _svg_d_from_document(text: str) -> tuple[str, int]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        line, col = exc.position
        raise PathSyntaxError(f"malformed SVG: {exc}", -1, line, col + 1) from None
    for el in root.iter():
        if el.tag == "path" or el.tag.endswith("}path"):
            d = el.get("d")
            if d is not None:
                return d, 0
    raise PathSyntaxError("SVG document has no path element with a 'd' attribute", 0, 1, 1)


def detect_format(name: str, text: str) -> str:
    """``"ps"`` or ``"svg"`` from the file extension, then from the content."""
    suffix = Path(name).suffix.lower()
    if suffix in (".ps", ".eps"):
        return "ps"
    if suffix == ".svg":
        return "svg"
    head = text.lstrip()
    if head.startswith("%!") or re.search(r"\b(?:moveto|curveto)\b", text):
        return "ps"
    return "svg"


def read_path_file(
    path: str | Path, fmt: str = "auto", tol: Tolerances | None = None
) -> PathDocument:
    """Load a path from a PostScript file, an SVG file or bare SVG path data."""
    path = Path(path)
    raw = path.read_bytes()
    text = raw.decode("utf-8", errors="replace")
    if fmt == "auto":
        fmt = detect_format(path.name, text)
    if fmt == "ps":
        return parse_postscript_path(raw.decode("latin-1"), tol, str(path))
    if fmt != "svg":
        raise ValueError(f"unknown format {fmt!r}")
    if text.lstrip().startswith("<"):
        d, _ = _svg_d_from_document(text)
    else:
        d = text
    return parse_svg_path(d, tol, str(path))


# Writers -----------------------------------------------------------------------

def _num(v: float) -> str:
    """Shortest round-trip decimal; integers without a trailing ``.0``."""
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def format_svg_path_data(path: ClosedBezierPath) -> str:
    """Absolute ``M ... C ... Z`` path data at full precision."""
    s0 = path.segments[0].p0
    parts = [f"M {_num(s0.x)} {_num(s0.y)}"]
    for s in path.segments:
        parts.append(
            "C " + " ".join(f"{_num(p.x)} {_num(p.y)}" for p in (s.p1, s.p2, s.p3))
        )
    parts.append("Z")
    return " ".join(parts)


def format_postscript(path: ClosedBezierPath, title: str | None = None) -> str:
    """Minimal PostScript program drawing the path at full precision."""
    lines = ["%!PS-Adobe-3.0"]
    if title:
        lines.append(f"%%Title: {title}")
    s0 = path.segments[0].p0
    lines.append("newpath")
    lines.append(f"{_num(s0.x)} {_num(s0.y)} moveto")
    for s in path.segments:
        lines.append(
            " ".join(f"{_num(p.x)} {_num(p.y)}" for p in (s.p1, s.p2, s.p3)) + " curveto"
        )
    lines += ["closepath", "fill", "showpage", ""]
    return "\n".join(lines)


def format_control_points(curve: BezierCurve) -> str:
    """One ``x y`` line per control point."""
    return "".join(f"{_num(p.x)} {_num(p.y)}\n" for p in curve.control)


@dataclass(frozen=True)
class RenderOptions:
    show_controls: bool = True
    show_hull: bool = True
    show_junctions: bool = True
    margin: float = 0.08
    width: int = 600


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def emit_svg(
    doc: PathDocument, report: ConvexityReport, options: RenderOptions | None = None
) -> str:
    """Standalone SVG: the outline plus optional control polygon and markers.

    Hull vertices are filled dots, reflex junctions are open dots, and every
    control point gets a small marker when controls are shown.
    """
    opt = options or RenderOptions()
    path = doc.path
    verts = control_polygon(path).vertices
    flip = doc.source_format == "postscript"
    xs = [p.x for p in verts]
    ys = [p.y for p in verts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    diag = bbox_diagonal(verts) or 1.0
    pad = opt.margin * diag
    vx, vw = x0 - pad, (x1 - x0) + 2 * pad
    vh = (y1 - y0) + 2 * pad
    vy = (-y1 - pad) if flip else (y0 - pad)
    height = max(1, round(opt.width * vh / vw))

    def pt(p: Point2) -> tuple[str, str]:
        return _fmt(p.x), _fmt(-p.y if flip else p.y)

    r = 0.012 * diag
    sw = 0.003 * diag
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opt.width}" '
        f'height="{height}" viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
        f"<title>{escape(doc.source_name)} convex={'yes' if report.is_convex else 'no'}</title>",
    ]
    s0 = path.segments[0].p0
    d = [f"M {' '.join(pt(s0))}"]
    for s in path.segments:
        d.append("C " + " ".join(" ".join(pt(p)) for p in (s.p1, s.p2, s.p3)))
    d.append("Z")
    out.append(
        f'<path class="outline" d="{" ".join(d)}" fill="#e6ecf5" stroke="#1f3b73" '
        f'stroke-width="{_fmt(2 * sw)}"/>'
    )
    if opt.show_controls:
        poly = " ".join(",".join(pt(p)) for p in verts + [verts[0]])
        out.append(
            f'<polyline class="control-polygon" points="{poly}" fill="none" '
            f'stroke="#888888" stroke-width="{_fmt(sw)}" stroke-dasharray="{_fmt(4 * sw)}"/>'
        )
        for p in verts:
            cx, cy = pt(p)
            out.append(
                f'<circle class="control-point" cx="{cx}" cy="{cy}" r="{_fmt(r / 3)}" fill="#888888"/>'
            )
    if opt.show_hull:
        for i in sorted(report.hull_vertex_indices):
            cx, cy = pt(verts[i])
            out.append(f'<circle class="hull-vertex" cx="{cx}" cy="{cy}" r="{_fmt(r)}" fill="#000000"/>')
    if opt.show_junctions:
        poly = control_polygon(path)
        for k in report.nonconvex_junction_indices:
            cx, cy = pt(verts[poly.junction_positions[k]])
            out.append(
                f'<circle class="nonconvex-junction" cx="{cx}" cy="{cy}" r="{_fmt(r)}" '
                f'fill="#ffffff" stroke="#000000" stroke-width="{_fmt(sw)}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_report_json(report: ConvexityReport) -> str:
    """Report as JSON with a fixed key order."""
    data = {
        "is_convex": report.is_convex,
        "orientation": report.orientation,
        "control_points": report.control_points,
        "hull_points": report.hull_points,
        "nonconvex_junctions": report.nonconvex_junctions,
        "junction_classes": [c.value for c in report.junction_classes],
        "per_segment_quad_convex": list(report.per_segment_quad_convex),
        "hull_vertex_indices": sorted(report.hull_vertex_indices),
        "tolerances": {
            "eps_col": report.tolerances.eps_col,
            "eps_join": report.tolerances.eps_join,
        },
    }
    return json.dumps(data, indent=2) + "\n"
