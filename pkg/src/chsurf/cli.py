"""Command-line entry point.

Subcommands: curve-props, curve-implicit, curve-sample, surface-classify,
surface-mesh, figure, verify.  Machine output (JSON / CSV / OBJ) goes to
stdout or ``--out``; diagnostics go to stderr.  Exit codes: 0 success,
1 domain error (invalid spec, degenerate geometry, failed verification),
2 usage error.

Rational options accept ``num/den`` or finite decimal strings, both parsed
exactly.  ``--q`` additionally accepts ``p=...`` sugar for the base-point
height, e.g. ``p=i`` for q = -1.  The environment variable ``CHS_SEED``
sets the default seed of the randomized checks.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import sys
from fractions import Fraction
from typing import List

from .congruence import CongruenceSpec
from .curve import (
    CurveSpec,
    Placement,
    curve_point,
    curve_properties,
    homogeneous_implicit,
    implicit_equation,
    shape_class,
)
from .mesh import export_obj, figure_preset, preset_keys, sample
from .surface import SurfaceSpec, classify, singular_circles, zero_circle_intersections
from .verify import DEFAULT_SEED, SUITES, run_suite


def _emit(stream, text: str) -> None:
    try:
        stream.write(text)
    except TypeError:
        stream.write(text.encode("utf-8"))


def _emit_bytes(stream, data: bytes) -> None:
    try:
        stream.write(data)
    except TypeError:
        stream.write(data.decode("ascii"))


def _json_line(record: dict) -> str:
    return json.dumps(record, separators=(",", ":")) + "\n"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not a rational; use num/den or a finite decimal"
        ) from None


def parse_q(text: str) -> Fraction:
    """q directly, or p= sugar squared (p=i and p=<rat>i give negative q)."""
    if text.startswith("p="):
        body = text[2:].strip()
        if body in ("i", "1i"):
            return Fraction(-1)
        if body.endswith("i"):
            return -parse_rational(body[:-1]) ** 2
        return parse_rational(body) ** 2
    return parse_rational(text)


def _add_curve_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="angular frequency numerator")
    parser.add_argument("--d", type=int, required=True, help="angular frequency denominator")
    parser.add_argument("--a", type=parse_rational, default=Fraction(0), help="radial offset (rational)")


def _add_placement_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cx", type=parse_rational, default=Fraction(0), help="pole x (rational)")
    parser.add_argument("--cy", type=parse_rational, default=Fraction(0), help="pole y (rational)")
    parser.add_argument("--h", type=parse_rational, default=Fraction(0), help="curve plane height (rational)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chsurf",
        description="Exact toolkit for cyclic-harmonic curves and their circular surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    props = sub.add_parser("curve-props", help="order, multiplicities, and shape class")
    _add_curve_options(props)
    props.add_argument("--format", choices=["json"], default="json")

    implicit = sub.add_parser("curve-implicit", help="exact implicit equation as JSON")
    _add_curve_options(implicit)
    implicit.add_argument(
        "--homogeneous", action="store_true", help="emit the projective form over x0,x1,x2"
    )

    sample_cmd = sub.add_parser("curve-sample", help="CSV samples of the placed curve")
    _add_curve_options(sample_cmd)
    _add_placement_options(sample_cmd)
    sample_cmd.add_argument("--samples", type=int, default=256)
    sample_cmd.add_argument("--out", help="output path (default stdout)")

    classify_cmd = sub.add_parser("surface-classify", help="surface order and multiplicities")
    _add_curve_options(classify_cmd)
    _add_placement_options(classify_cmd)
    classify_cmd.add_argument("--q", type=parse_q, required=True, help="squared base-point height, or p= sugar")
    classify_cmd.add_argument("--tol", type=float, default=1e-9)
    classify_cmd.add_argument("--format", choices=["json"], default="json")
    classify_cmd.add_argument(
        "--singular-circles-csv", help="also write singular circles (angle,offset,radius,multiplicity)"
    )
    classify_cmd.add_argument(
        "--waist-points-csv", help="also write curve/waist intersection points (x,y,z)"
    )

    mesh_cmd = sub.add_parser("surface-mesh", help="triangle mesh of the surface as OBJ")
    _add_curve_options(mesh_cmd)
    _add_placement_options(mesh_cmd)
    mesh_cmd.add_argument("--q", type=parse_q, required=True)
    mesh_cmd.add_argument("--nt", type=int, default=256, help="rows along the curve parameter")
    mesh_cmd.add_argument("--ntheta", type=int, default=96, help="columns around each circle")
    mesh_cmd.add_argument("--out", help="output path (default stdout)")

    figure_cmd = sub.add_parser("figure", help="render a preset surface to OBJ")
    figure_cmd.add_argument("id", nargs="?", help="preset id, e.g. 3b")
    figure_cmd.add_argument("--list", action="store_true", help="list preset ids")
    figure_cmd.add_argument("--nt", type=int, help="override preset rows")
    figure_cmd.add_argument("--ntheta", type=int, help="override preset columns")
    figure_cmd.add_argument("--out", help="output path (default stdout)")

    verify_cmd = sub.add_parser("verify", help="run a verification suite")
    verify_cmd.add_argument("suite", choices=list(SUITES))
    verify_cmd.add_argument("--seed", type=int, help="seed (default: CHS_SEED or builtin)")
    verify_cmd.add_argument("--jobs", type=int, default=1, help="parallel workers")
    verify_cmd.add_argument("--max-nd", type=int, default=9, help="grid bound for n and d")
    verify_cmd.add_argument("--format", choices=["text", "json"], default="text")
    verify_cmd.add_argument("--n", type=int, help="restrict the residual suite to one curve")
    verify_cmd.add_argument("--d", type=int)
    verify_cmd.add_argument("--a", type=parse_rational)
    return parser


def _curve_spec(args) -> CurveSpec:
    return CurveSpec(args.n, args.d, args.a)


def _surface_spec(args) -> SurfaceSpec:
    return SurfaceSpec(
        _curve_spec(args),
        CongruenceSpec(args.q),
        Placement(args.cx, args.cy, args.h),
    )


def _write_to(args, out, render) -> None:
    if getattr(args, "out", None):
        with open(args.out, "wb") as handle:
            render(handle)
    else:
        render(out)


def _cmd_curve_props(args, out, err) -> int:
    spec = _curve_spec(args)
    props = curve_properties(spec)
    record = {
        "order": props.order,
        "origin": props.origin_multiplicity,
        "absolute": props.absolute_multiplicity,
        "shape": shape_class(spec).value,
    }
    _emit(out, _json_line(record))
    return 0


def _cmd_curve_implicit(args, out, err) -> int:
    spec = _curve_spec(args)
    poly = homogeneous_implicit(spec) if args.homogeneous else implicit_equation(spec)
    _emit(out, _json_line(poly.to_dict()))
    return 0


def _cmd_curve_sample(args, out, err) -> int:
    spec = _curve_spec(args)
    placement = Placement(args.cx, args.cy, args.h)
    if args.samples < 2:
        raise ValueError("need at least 2 samples")
    lines = ["phi,x,y,z\n"]
    period = spec.parameter_period
    for k in range(args.samples):
        phi = period * k / args.samples
        x, y, z = curve_point(spec, placement, phi)
        lines.append(f"{phi:.17g},{x:.17g},{y:.17g},{z:.17g}\n")
    _write_to(args, out, lambda sink: _emit_bytes(sink, "".join(lines).encode("ascii")))
    return 0


def _cmd_surface_classify(args, out, err) -> int:
    spec = _surface_spec(args)
    result = classify(spec, tol=args.tol)
    _emit(out, _json_line(result.to_dict()))
    if args.singular_circles_csv:
        lines = ["meridian_angle,center_offset,radius,multiplicity\n"]
        for key, multiplicity in singular_circles(spec):
            lines.append(
                f"{key.meridian_angle:.17g},{key.center_offset:.17g},"
                f"{key.radius:.17g},{multiplicity}\n"
            )
        with open(args.singular_circles_csv, "w") as handle:
            handle.write("".join(lines))
    if args.waist_points_csv:
        lines = ["x,y,z\n"]
        for x, y, z in zero_circle_intersections(spec):
            lines.append(f"{x:.17g},{y:.17g},{z:.17g}\n")
        with open(args.waist_points_csv, "w") as handle:
            handle.write("".join(lines))
    return 0


def _cmd_surface_mesh(args, out, err) -> int:
    mesh = sample(_surface_spec(args), args.nt, args.ntheta)
    _write_to(args, out, lambda sink: export_obj(mesh, sink))
    return 0


def _cmd_figure(args, out, err) -> int:
    if args.list:
        for key in preset_keys():
            preset = figure_preset(key)
            _emit(out, f"{key}  nt={preset.nt} ntheta={preset.ntheta}  {preset.description}\n")
        return 0
    if not args.id:
        raise ValueError("give a preset id or --list")
    preset = figure_preset(args.id)
    mesh = sample(preset.spec, args.nt or preset.nt, args.ntheta or preset.ntheta)
    _write_to(args, out, lambda sink: export_obj(mesh, sink))
    return 0


def _cmd_verify(args, out, err) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("CHS_SEED", DEFAULT_SEED))
    only = None
    if args.n is not None or args.d is not None:
        if args.n is None or args.d is None:
            raise ValueError("--n and --d must be given together")
        only = CurveSpec(args.n, args.d, args.a if args.a is not None else Fraction(0))
    report = run_suite(args.suite, seed=seed, jobs=args.jobs, max_nd=args.max_nd, only=only)
    if args.format == "json":
        _emit(out, _json_line(report.to_dict()))
    else:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            _emit(out, f"{status}  {check.name}  [{check.measured}]\n")
        _emit(out, f"{report.suite}: {report.passed} passed, {report.failed} failed\n")
    return 0 if report.ok else 1


_COMMANDS = {
    "curve-props": _cmd_curve_props,
    "curve-implicit": _cmd_curve_implicit,
    "curve-sample": _cmd_curve_sample,
    "surface-classify": _cmd_surface_classify,
    "surface-mesh": _cmd_surface_mesh,
    "figure": _cmd_figure,
    "verify": _cmd_verify,
}


def run(argv: List[str], out, err) -> int:
    """Parse and execute; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    usage_buffer = io.StringIO()
    try:
        with contextlib.redirect_stderr(usage_buffer), contextlib.redirect_stdout(usage_buffer):
            args = parser.parse_args(argv)
    except SystemExit as exit_request:
        _emit(err if exit_request.code else out, usage_buffer.getvalue())
        return int(exit_request.code or 0)
    try:
        return _COMMANDS[args.command](args, out, err)
    except ValueError as domain_error:
        _emit(err, f"error: {domain_error}\n")
        return 1
    except BrokenPipeError:
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:], sys.stdout.buffer, sys.stderr.buffer))


if __name__ == "__main__":
    main()
