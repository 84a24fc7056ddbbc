"""Command-line front end.

Exit codes: 0 convex / success, 1 not convex, 2 input or usage error,
3 repair failure.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .convexify import hull_degree_curve, smooth_junctions
from .errors import GeometryError, RepairError
from .geom import Tolerances
from .path import ConvexityReport, analyze, default_tolerances
from .pathio import (
    PathDocument,
    RenderOptions,
    emit_report_json,
    emit_svg,
    format_control_points,
    format_svg_path_data,
    read_path_file,
)

EXIT_CONVEX, EXIT_NONCONVEX, EXIT_INPUT, EXIT_REPAIR = 0, 1, 2, 3


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _load(input_path: str, fmt: str, eps_col, eps_join) -> tuple[PathDocument, Tolerances]:
    try:
        doc = read_path_file(input_path, fmt)
    except OSError as exc:
        raise InputError(f"cannot read {input_path}: {exc.strerror or exc}") from None
    except GeometryError as exc:
        raise InputError(f"{input_path}: {exc}") from None
    tol = default_tolerances(doc.path)
    if eps_col is not None or eps_join is not None:
        tol = Tolerances(
            eps_col=tol.eps_col if eps_col is None else eps_col,
            eps_join=tol.eps_join if eps_join is None else eps_join,
        )
        # Re-read so snapping at junctions honours the explicit eps_join.
        try:
            doc = read_path_file(input_path, fmt, tol)
        except GeometryError as exc:
            raise InputError(f"{input_path}: {exc}") from None
    return doc, tol


def _analyze(doc: PathDocument, tol: Tolerances) -> ConvexityReport:
    try:
        return analyze(doc.path, tol)
    except GeometryError as exc:
        raise InputError(f"{doc.source_name}: {exc}") from None


def _write(target: str, text: str) -> None:
    try:
        Path(target).write_text(text)
    except OSError as exc:
        raise InputError(f"cannot write {target}: {exc.strerror or exc}") from None


def _summary(doc: PathDocument, report: ConvexityReport) -> str:
    bad_j = report.nonconvex_junction_indices
    bad_s = report.nonconvex_segment_indices
    lines = [
        f"input: {doc.source_name} ({doc.source_format})",
        f"segments: {len(doc.path)}",
        f"orientation: {'counter-clockwise' if report.orientation > 0 else 'clockwise'}",
        f"control points: {report.control_points}",
        f"hull points: {report.hull_points}",
        f"non-convex junctions: {report.nonconvex_junctions}"
        + (f" (junctions {', '.join(map(str, bad_j))})" if bad_j else ""),
        "non-convex segments: " + (", ".join(map(str, bad_s)) if bad_s else "none"),
        f"tolerances: eps_col={report.tolerances.eps_col:.6g} "
        f"eps_join={report.tolerances.eps_join:.6g}",
        f"convex: {'yes' if report.is_convex else 'no'}",
    ]
    return "\n".join(lines)


_input_arg = click.argument("input_path", metavar="INPUT", type=click.Path(dir_okay=False))
_format_opt = click.option(
    "--format", "fmt", type=click.Choice(["auto", "ps", "svg"]), default="auto",
    show_default=True, help="Input format; auto uses the extension, then the content.",
)
_eps_col_opt = click.option(
    "--eps-col", type=click.FloatRange(min=0), default=None,
    help="Collinearity threshold on turn determinants [default: 1e-12 * bbox diagonal^2].",
)
_eps_join_opt = click.option(
    "--eps-join", type=click.FloatRange(min=0), default=None,
    help="Coincidence distance for points [default: 1e-9 * bbox diagonal].",
)


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Convexity analysis and repair of closed cubic Bezier outlines."""


@main.command("analyze")
@_input_arg
@_format_opt
@_eps_col_opt
@_eps_join_opt
@click.option("--json", "json_out", default=None, metavar="FILE",
              help="Write the JSON report to FILE ('-' for stdout).")
@click.option("--quiet", is_flag=True, help="Suppress the human-readable summary.")
def cmd_analyze(input_path, fmt, eps_col, eps_join, json_out, quiet):
    """Decide whether INPUT bounds a convex region."""
    doc, tol = _load(input_path, fmt, eps_col, eps_join)
    report = _analyze(doc, tol)
    if not quiet:
        click.echo(_summary(doc, report))
    if json_out == "-":
        click.echo(emit_report_json(report), nl=False)
    elif json_out:
        _write(json_out, emit_report_json(report))
    sys.exit(EXIT_CONVEX if report.is_convex else EXIT_NONCONVEX)


@main.command("convexify")
@_input_arg
@_format_opt
@_eps_col_opt
@_eps_join_opt
@click.option("--strategy", type=click.Choice(["smooth", "hull"]), default="smooth",
              show_default=True)
@click.option("--max-iter", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--all-junctions", is_flag=True,
              help="smooth: also smooth convex corners, not only reflex ones.")
@click.option("--open", "open_curve", is_flag=True,
              help="hull: do not repeat the first control point (degree H-1).")
@click.option("--out", "out_path", default=None, metavar="FILE",
              help="Output file [default: stdout].")
@click.option("--report", is_flag=True, help="Also print the analysis of the repaired path.")
def cmd_convexify(input_path, fmt, eps_col, eps_join, strategy, max_iter, all_junctions,
                  open_curve, out_path, report):
    """Repair INPUT into a convex shape.

    smooth writes SVG path data of the repaired outline; hull writes the
    control points of one Bezier curve, one "x y" pair per line.
    """
    doc, tol = _load(input_path, fmt, eps_col, eps_join)
    info = click.echo if out_path else (lambda msg: click.echo(msg, err=True))
    try:
        if strategy == "smooth":
            repaired, moved = smooth_junctions(doc.path, tol, max_iter, smooth_all=all_junctions)
            text = format_svg_path_data(repaired) + "\n"
            message = f"max displacement: {moved:.6g}"
            extra = PathDocument(repaired, "svg", out_path or "<stdout>")
        else:
            curve = hull_degree_curve(doc.path, tol, closed=not open_curve)
            text = format_control_points(curve)
            message = f"degree: {curve.degree}"
            extra = None
    except RepairError as exc:
        click.echo(f"Error: {exc}", err=True)
        sys.exit(EXIT_REPAIR)
    except GeometryError as exc:
        raise InputError(f"{doc.source_name}: {exc}") from None
    if out_path:
        _write(out_path, text)
    else:
        click.echo(text, nl=False)
    info(message)
    if report and extra is not None:
        info(_summary(extra, _analyze(extra, tol)))
    sys.exit(EXIT_CONVEX)


@main.command("render")
@_input_arg
@_format_opt
@_eps_col_opt
@_eps_join_opt
@click.option("--out", "out_path", required=True, metavar="FILE", help="SVG file to write.")
@click.option("--show-controls", is_flag=True, help="Control polygon and control points.")
@click.option("--show-hull", is_flag=True, help="Hull vertices as filled dots.")
@click.option("--show-junctions", is_flag=True, help="Reflex junctions as open dots.")
def cmd_render(input_path, fmt, eps_col, eps_join, out_path, show_controls, show_hull,
               show_junctions):
    """Write an annotated SVG of INPUT.

    Without any --show-* flag every layer is drawn.
    """
    doc, tol = _load(input_path, fmt, eps_col, eps_join)
    report = _analyze(doc, tol)
    if not (show_controls or show_hull or show_junctions):
        show_controls = show_hull = show_junctions = True
    options = RenderOptions(show_controls, show_hull, show_junctions)
    _write(out_path, emit_svg(doc, report, options))
    click.echo(f"wrote {out_path}")
    sys.exit(EXIT_CONVEX)


if __name__ == "__main__":
    main()
