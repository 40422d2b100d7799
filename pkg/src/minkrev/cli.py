"""Command-line interface.

Subcommands:
  solve-mean   reconstruct a generating curve for a prescribed H profile
  solve-skew   reconstruct a generating graph for a prescribed S profile
  verify       rebuild a surface from an exported curve and check the
               prescription by finite differences (exit 0 iff max error
               <= 1e-4, else 4)
  moments      statistics of the normal curvature from two principal
               curvatures

Exit codes: 0 success, 2 argument errors, 3 domain violations, 4 failed
verification.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import curvature
from .errors import (
    ConstantViolation,
    DomainViolation,
    IncompatiblePair,
    InvalidGrid,
    MinkrevError,
    SingularAxis,
)
from .mean_solver import MeanSolveRequest, solve_mean
from .minkowski import AxisType
from .pipeline import (
    build_surface,
    default_theta_grid,
    export_curve_csv,
    export_mesh_obj,
    read_curve_csv,
    verify_roundtrip_detailed,
)
from .profile_expr import CurvatureProfile, ExpressionError, parse_profile
from .numerics import Grid
from .skew_solver import SkewSolveRequest, solve_skew

VERIFY_THRESHOLD = 1e-4

_MEAN_AXES = {
    # CLI name -> (AxisType, request plane)
    "timelike": (AxisType.TIMELIKE, "timelike_xz"),
    "spacelike-tl": (AxisType.SPACELIKE, "timelike_xz"),
    "spacelike-sp": (AxisType.SPACELIKE, "spacelike_xy"),
    "lightlike": (AxisType.LIGHTLIKE, "timelike_yz"),
}

_SKEW_FAMILIES = {
    "t-xz": "timelike_axis_xz",
    "s-xz": "spacelike_axis_xz",
    "s-xy": "spacelike_axis_xy",
}


def _parse_range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    return lo, hi


def _parse_theta(text: str) -> Grid:
    try:
        lo, hi, m = text.split(":")
        return Grid.uniform_grid(float(lo), float(hi), int(m))
    except (ValueError, InvalidGrid) as exc:
        raise argparse.ArgumentTypeError(f"expected lo:hi:M, got {text!r}: {exc}") from None


def _parse_consts(text: str) -> tuple:
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {text!r}") from None


def _parse_sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"expected + or -, got {text!r}")


def _profile(source: str, var: str, parser: argparse.ArgumentParser) -> CurvatureProfile:
    try:
        return parse_profile(source, var)
    except ExpressionError as exc:
        parser.error(f"bad expression {source!r}: {exc}")
        raise AssertionError  # parser.error exits


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="minkrev",
        description="Revolution surfaces in Lorentz-Minkowski space with "
        "prescribed mean or skew curvature.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pm = sub.add_parser("solve-mean", help="prescribed mean curvature H(s)")
    pm.add_argument("--axis", required=True, choices=sorted(_MEAN_AXES))
    pm.add_argument("--h-expr", required=True, help="H as an expression in s")
    pm.add_argument("--eta", type=_parse_sign, default=1, help="causal sign of the curve")
    pm.add_argument(
        "--consts",
        required=True,
        type=_parse_consts,
        help="a1,a2,a3 (or b/c triples; a0,a1,b0,b1 for the lightlike axis)",
    )
    pm.add_argument("--range", required=True, type=_parse_range, metavar="LO:HI")
    pm.add_argument("--nodes", type=int, default=2001)
    pm.add_argument("--out", required=True, help="curve CSV output path")
    pm.add_argument("--mesh", help="optional OBJ mesh output path")
    pm.add_argument("--theta", type=_parse_theta, metavar="LO:HI:M", help="mesh angle grid")
    pm.add_argument("--plot", help="optional PNG figure of the generating curve")

    ps = sub.add_parser("solve-skew", help="prescribed skew curvature S(u)")
    ps.add_argument("--family", required=True, choices=sorted(_SKEW_FAMILIES))
    ps.add_argument("--graph", required=True, choices=["1", "2"], help="graph orientation")
    ps.add_argument("--s-expr", required=True, help="S as an expression in u")
    ps.add_argument("--sign", type=_parse_sign, default=1, help="sign in A = +-2 int S/v + a0")
    ps.add_argument("--sign-outer", type=_parse_sign, default=1, help="sign of the outer integral")
    ps.add_argument("--eta", type=_parse_sign, default=None, help="causal sign (family-dependent default)")
    ps.add_argument("--a0", type=float, required=True, help="integration constant of A")
    ps.add_argument("--offset", type=float, required=True, help="integration constant of the graph")
    ps.add_argument("--range", required=True, type=_parse_range, metavar="LO:HI")
    ps.add_argument("--nodes", type=int, default=2001)
    ps.add_argument("--out", required=True)
    ps.add_argument("--mesh")
    ps.add_argument("--theta", type=_parse_theta, metavar="LO:HI:M")
    ps.add_argument("--plot")

    pv = sub.add_parser("verify", help="round-trip check of an exported curve")
    pv.add_argument("--in", dest="infile", required=True)
    pv.add_argument("--which", required=True, choices=["mean", "skew"])
    pv.add_argument("--expr", required=True, help="the prescribed profile")
    pv.add_argument("--plot", help="optional PNG error-profile figure")

    pq = sub.add_parser("moments", help="normal-curvature statistics")
    pq.add_argument("--k1", type=float, required=True)
    pq.add_argument("--k2", type=float, required=True)
    pq.add_argument("--surface", required=True, choices=["spacelike", "timelike"])
    pq.add_argument("--a", type=float, default=0.1, help="Gaussian width (timelike only)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "solve-mean":
            return _cmd_solve_mean(args, ap)
        if args.command == "solve-skew":
            return _cmd_solve_skew(args, ap)
        if args.command == "verify":
            return _cmd_verify(args, ap)
        return _cmd_moments(args)
    except (DomainViolation, ConstantViolation, SingularAxis) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except (IncompatiblePair, InvalidGrid, MinkrevError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _cmd_solve_mean(args, ap) -> int:
    axis, plane = _MEAN_AXES[args.axis]
    profile = _profile(args.h_expr, "s", ap)
    req = MeanSolveRequest(
        profile=profile,
        axis=axis,
        plane=plane,
        eta=args.eta,
        constants=args.consts,
        s_range=args.range,
        n=args.nodes,
    )
    curve = solve_mean(req)
    export_curve_csv(curve, args.out)
    print(f"wrote {args.out} ({curve.grid.n} nodes, case {curve.meta['case']})")
    _optional_outputs(curve, axis, args)
    return 0


def _cmd_solve_skew(args, ap) -> int:
    family = _SKEW_FAMILIES[args.family]
    eta = args.eta
    if eta is None:
        # Defaults that keep the radicand positive without tuning.
        eta = -1 if family == "spacelike_axis_xz" else 1
    profile = _profile(args.s_expr, "u", ap)
    req = SkewSolveRequest(
        profile=profile,
        family=family,
        graph_var="first" if args.graph == "1" else "second",
        eta=eta,
        sign_a=args.sign,
        sign_outer=args.sign_outer,
        a0=args.a0,
        offset0=args.offset,
        u_range=args.range,
        n=args.nodes,
    )
    curve = solve_skew(req)
    export_curve_csv(curve, args.out)
    print(f"wrote {args.out} ({curve.grid.n} nodes, case {curve.meta['case']})")
    axis = AxisType.TIMELIKE if family == "timelike_axis_xz" else AxisType.SPACELIKE
    _optional_outputs(curve, axis, args)
    return 0


def _optional_outputs(curve, axis, args) -> None:
    if getattr(args, "mesh", None):
        surface = build_surface(curve, axis, args.theta or default_theta_grid(axis))
        export_mesh_obj(surface, args.mesh)
        print(f"wrote {args.mesh} ({surface.points.shape[0]}x{surface.points.shape[1]} grid)")
    if getattr(args, "plot", None):
        from .plotting import render_curve_figure

        render_curve_figure(curve, args.plot)
        print(f"wrote {args.plot}")


def _cmd_verify(args, ap) -> int:
    curve = read_curve_csv(args.infile)
    axis_name = curve.meta.get("axis", "unknown")
    try:
        axis = AxisType(axis_name)
    except ValueError:
        ap.error(f"curve file does not name a valid axis (got {axis_name!r})")
    var = "s" if args.which == "mean" else "u"
    profile = _profile(args.expr, var, ap)
    surface = build_surface(curve, axis)
    report, details = verify_roundtrip_detailed(surface, profile, args.which)
    for line in report.lines():
        print(line)
    if args.plot:
        from .plotting import render_verification_figure

        render_verification_figure(details, args.which, args.plot)
        print(f"wrote {args.plot}")
    if report.max_error <= VERIFY_THRESHOLD:
        print(f"PASS (max error {report.max_error:.3e} <= {VERIFY_THRESHOLD})")
        return 0
    print(f"FAIL (max error {report.max_error:.3e} > {VERIFY_THRESHOLD})")
    return 4


def _cmd_moments(args) -> int:
    pd = curvature.PrincipalData(args.k1, args.k2, True)
    if args.surface == "spacelike":
        mu, sigma = curvature.spacelike_moments(pd)
        print(f"mu    {mu:.17g}")
        print(f"sigma {sigma:.17g}")
        print(f"H     {-mu:.17g}")
        print(f"S     {2.0 * math.sqrt(2.0) * sigma:.17g}")
    else:
        gm = curvature.timelike_gaussian_moments(pd, args.a)
        print(f"a                {args.a:.17g}")
        print(f"mean_quadrature  {gm.mean_a:.17g}")
        print(f"mean_closed_form {gm.mean_closed:.17g}")
        print(f"var_quadrature   {gm.var_a:.17g}")
        print(f"H                {0.5 * (args.k1 + args.k2):.17g}")
        print(f"S                {abs(args.k1 - args.k2):.17g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
