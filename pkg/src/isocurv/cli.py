"""Command-line front end.

Subcommands: eval, scan, verify-family, ode, mesh. Every run writes exactly
one JSON report to standard output; CSV trajectories and OBJ meshes go to
files. Exit codes: 0 when no check failed, 1 when a tolerance-gated check
failed, 2 on any error (bad input, parse error, singularity, I/O).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Optional

from .curvature import curvatures
from .domain import DEFAULT_EXCLUSION_RADIUS, GridDomain, SingularLocus
from .errors import IsocurvError
from .expr import Expr, eval_jet, parse, to_string
from .families import (
    Case31Candidate,
    build,
    case31_contradiction_scan,
    predict,
    singular_loci,
    spec_from_dict,
    spec_to_dict,
)
from .families import verify_family as _verify_family
from .mesh import write_obj
from .ode import (
    IVP,
    SaturatedLinearODE,
    ShiftedReciprocalODE,
    integrate,
    linear_force_solution,
    shifted_reciprocal_solution,
)
from .weingarten import (
    LWParams,
    euler_residual,
    euler_residual_fn,
    jacobian_residual_fn,
    lw_residual_fn,
    normalize,
    scan_grid,
)

SCHEMA_VERSION = 1

DEFAULT_SCAN_TOL = {"lw": 1e-9, "euler": 1e-9, "jacobian": 1e-6}
DEFAULT_FAMILY_TOL = 1e-9
DEFAULT_ODE_TOL = 1e-6
DEFAULT_JACOBIAN_STEP = 1e-3


class _UsageError(IsocurvError):
    """Bad flag combination; reported like other errors, exit 2."""


def _two_floats(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected X,Y")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number in {text!r}") from None


def _four_floats(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected XMIN,XMAX,YMIN,YMAX")
    try:
        return tuple(float(v) for v in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number in {text!r}") from None


def _two_ints(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected NX,NY")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer in {text!r}") from None


def _add_domain_flags(sp: argparse.ArgumentParser, default_exclusion: float) -> None:
    sp.add_argument(
        "--domain",
        type=_four_floats,
        default=(-1.0, 1.0, -1.0, 1.0),
        metavar="XMIN,XMAX,YMIN,YMAX",
        help="sampling rectangle (default [-1,1]^2)",
    )
    sp.add_argument(
        "--grid",
        type=_two_ints,
        default=(101, 101),
        metavar="NX,NY",
        help="grid resolution (default 101,101)",
    )
    sp.add_argument(
        "--exclusion",
        type=float,
        default=default_exclusion,
        metavar="R",
        help="exclusion radius around declared singular loci",
    )


def build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="isocurv",
        description="curvature invariants and linear Weingarten checks for "
        "graph surfaces z(x, y)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="jet, K, H at a point")
    sp.add_argument("--surface", required=True, help="expression in x and y")
    sp.add_argument("--at", type=_two_floats, required=True, metavar="X,Y")

    sp = sub.add_parser("scan", help="residual statistics over a grid")
    sp.add_argument("--surface", required=True)
    sp.add_argument("--residual", choices=("lw", "euler", "jacobian"), required=True)
    sp.add_argument("--a", type=float, help="H coefficient (lw residual)")
    sp.add_argument("--b", type=float, help="K coefficient (lw residual)")
    sp.add_argument("--c", type=float, help="constant side (lw residual)")
    sp.add_argument("--tol", type=float, help="pass threshold on max |residual|")
    sp.add_argument(
        "--fd-step",
        type=float,
        default=DEFAULT_JACOBIAN_STEP,
        help="difference step for the jacobian residual",
    )
    _add_domain_flags(sp, 0.0)

    sp = sub.add_parser("verify-family", help="check a family spec JSON")
    sp.add_argument("--spec", required=True, help="path to a family spec JSON file")
    sp.add_argument("--tol", type=float, default=DEFAULT_FAMILY_TOL)
    sp.add_argument(
        "--n0",
        type=float,
        default=0.0,
        help="relation constant for the contradiction scan",
    )
    _add_domain_flags(sp, DEFAULT_EXCLUSION_RADIUS)

    sp = sub.add_parser("ode", help="integrate a factor equation")
    sp.add_argument(
        "--ode",
        choices=("shifted-reciprocal", "saturated-linear"),
        required=True,
    )
    sp.add_argument("--c3", type=float, help="shifted-reciprocal parameter")
    sp.add_argument("--m0", type=float, help="shifted-reciprocal parameter")
    sp.add_argument("--c5", type=float, help="saturated-linear parameter")
    sp.add_argument("--d10", type=float, default=0.0, help="saturation constant")
    sp.add_argument("--t0", type=float, default=0.0)
    sp.add_argument("--f0", type=float, required=True, help="f(t0)")
    sp.add_argument("--fp0", type=float, required=True, help="f'(t0)")
    sp.add_argument("--t-end", type=float, required=True)
    sp.add_argument("--step", type=float, required=True)
    sp.add_argument("--tol", type=float, default=DEFAULT_ODE_TOL)
    sp.add_argument(
        "--oracle-c4",
        type=float,
        help="with --oracle-d9: check shifted-reciprocal against its closed form",
    )
    sp.add_argument("--oracle-d9", type=float)
    sp.add_argument("--out", help="write the trajectory CSV here")

    sp = sub.add_parser("mesh", help="export a Wavefront OBJ")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--surface")
    group.add_argument("--spec", help="family spec JSON instead of an expression")
    sp.add_argument("--out", required=True)
    _add_domain_flags(sp, DEFAULT_EXCLUSION_RADIUS)

    return p


def _report(
    command: str,
    surface: Optional[str],
    params: dict,
    result: dict,
    passed: Optional[bool],
    tolerances: dict,
) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "surface": surface,
        "params": params,
        "result": result,
        "pass": passed,
        "tolerances": tolerances,
    }


def _domain_from_args(args, loci: tuple[SingularLocus, ...] = ()) -> GridDomain:
    x_min, x_max, y_min, y_max = args.domain
    nx, ny = args.grid
    return GridDomain(
        x_min=x_min,
        x_max=x_max,
        y_min=y_min,
        y_max=y_max,
        nx=nx,
        ny=ny,
        exclusion_radius=args.exclusion,
        singular_loci=tuple(loci),
    )


def _domain_params(domain: GridDomain) -> dict:
    return {
        "domain": [domain.x_min, domain.x_max, domain.y_min, domain.y_max],
        "grid": [domain.nx, domain.ny],
        "exclusion_radius": domain.exclusion_radius,
    }


def cmd_eval(args) -> dict:
    surface = parse(args.surface)
    x, y = args.at
    j = eval_jet(surface, (x, y))
    pair = curvatures(j)
    result = {
        "jet": {
            "v": j.v,
            "dx": j.dx,
            "dy": j.dy,
            "dxx": j.dxx,
            "dxy": j.dxy,
            "dyy": j.dyy,
        },
        "K": pair.K,
        "H": pair.H,
        "euler_residual": euler_residual(j),
    }
    return _report("eval", to_string(surface), {"at": [x, y]}, result, None, {})


def cmd_scan(args) -> dict:
    surface = parse(args.surface)
    domain = _domain_from_args(args)
    tol = args.tol if args.tol is not None else DEFAULT_SCAN_TOL[args.residual]
    params: dict = {"residual": args.residual}
    params.update(_domain_params(domain))
    if args.residual == "lw":
        if args.a is None or args.b is None or args.c is None:
            raise _UsageError("lw residual needs --a, --b, and --c")
        lw = LWParams(args.a, args.b, args.c)
        params["lw"] = {"a": lw.a, "b": lw.b, "c": lw.c}
        if lw.b != 0.0:
            norm = normalize(lw)
            params["lw"]["m0"] = norm.m0
            params["lw"]["n0"] = norm.n0
        fn = lw_residual_fn(lw)
    elif args.residual == "euler":
        fn = euler_residual_fn()
    else:
        params["fd_step"] = args.fd_step
        fn = jacobian_residual_fn(args.fd_step)
    report = scan_grid(surface, domain, fn)
    passed = report.max_abs <= tol
    return _report(
        "scan",
        to_string(surface),
        params,
        report.to_dict(),
        passed,
        {args.residual: tol},
    )


def _load_spec(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return spec_from_dict(data)


def cmd_verify_family(args) -> dict:
    spec = _load_spec(args.spec)
    surface = build(spec)
    domain = _domain_from_args(args, singular_loci(spec))
    params: dict = {"spec": spec_to_dict(spec)}
    params.update(_domain_params(domain))
    if isinstance(spec, Case31Candidate):
        xs = [x for x in domain.xs() if domain.included(x, domain.y_min)]
        report = case31_contradiction_scan(spec, args.n0, xs)
        passed = report.n_samples >= 3 and report.std_dev > 0.0
        params["n0"] = args.n0
        result = report.to_dict()
        result["check"] = "contradiction_scan"
        return _report(
            "verify-family",
            to_string(surface),
            params,
            result,
            passed,
            {"min_samples": 3},
        )
    prediction = predict(spec)
    report = _verify_family(spec, domain)
    passed = report.max_abs <= args.tol
    result = report.to_dict()
    result["check"] = "constant_invariants"
    result["predicted"] = {"K": prediction.K_expected, "H": prediction.H_expected}
    return _report(
        "verify-family",
        to_string(surface),
        params,
        result,
        passed,
        {"family": args.tol},
    )


def cmd_ode(args) -> dict:
    oracle: Optional[Callable[[float], float]] = None
    if args.ode == "shifted-reciprocal":
        if args.c3 is None or args.m0 is None:
            raise _UsageError("shifted-reciprocal needs --c3 and --m0")
        rhs = ShiftedReciprocalODE(c3=args.c3, m0=args.m0)
        if (args.oracle_c4 is None) != (args.oracle_d9 is None):
            raise _UsageError("--oracle-c4 and --oracle-d9 go together")
        if args.oracle_c4 is not None:
            c3, c4, d9, m0 = args.c3, args.oracle_c4, args.oracle_d9, args.m0

            def oracle(t: float) -> float:
                return shifted_reciprocal_solution(c3, c4, d9, m0, t)

    else:
        if args.c5 is None:
            raise _UsageError("saturated-linear needs --c5")
        rhs = SaturatedLinearODE(c5=args.c5, d10=args.d10)
        if args.d10 == 0.0:
            c5, f0, fp0, t0 = args.c5, args.f0, args.fp0, args.t0

            def oracle(t: float) -> float:
                return linear_force_solution(c5, f0, fp0, t - t0)

    ivp = IVP(
        rhs=rhs, t0=args.t0, y0=args.f0, yp0=args.fp0, t_end=args.t_end, step=args.step
    )
    trajectory = integrate(ivp)
    max_dev: Optional[float] = None
    passed: Optional[bool] = None
    if oracle is not None:
        max_dev = max(abs(f - oracle(t)) for t, f, _ in trajectory)
        passed = max_dev <= args.tol
    if args.out:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            writer = csv.writer(fh)
            writer.writerow(["t", "f", "fp"])
            writer.writerows(trajectory)
    t_last, f_last, fp_last = trajectory[-1]
    params = {
        "ode": args.ode,
        "t0": args.t0,
        "f0": args.f0,
        "fp0": args.fp0,
        "t_end": args.t_end,
        "step": args.step,
    }
    if isinstance(rhs, ShiftedReciprocalODE):
        params["c3"] = rhs.c3
        params["m0"] = rhs.m0
    else:
        params["c5"] = rhs.c5
        params["d10"] = rhs.d10
    result = {
        "n_steps": len(trajectory) - 1,
        "endpoint": {"t": t_last, "f": f_last, "fp": fp_last},
        "oracle_max_dev": max_dev,
        "csv": args.out,
    }
    tolerances = {"oracle": args.tol} if oracle is not None else {}
    return _report("ode", None, params, result, passed, tolerances)


def cmd_mesh(args) -> dict:
    loci: tuple[SingularLocus, ...] = ()
    params: dict = {}
    if args.spec is not None:
        spec = _load_spec(args.spec)
        surface = build(spec)
        loci = singular_loci(spec)
        params["spec"] = spec_to_dict(spec)
    else:
        surface = parse(args.surface)
    domain = _domain_from_args(args, loci)
    params.update(_domain_params(domain))
    stats = write_obj(surface, domain, args.out)
    result = {
        "n_vertices": stats.n_vertices,
        "n_triangles": stats.n_triangles,
        "obj": args.out,
    }
    return _report("mesh", to_string(surface), params, result, None, {})


_DISPATCH = {
    "eval": cmd_eval,
    "scan": cmd_scan,
    "verify-family": cmd_verify_family,
    "ode": cmd_ode,
    "mesh": cmd_mesh,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_argparser()
    args = parser.parse_args(argv)
    try:
        report = _DISPATCH[args.command](args)
    except json.JSONDecodeError as err:
        print(f"error: invalid JSON in family spec: {err}", file=sys.stderr)
        return 2
    except (IsocurvError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 1 if report["pass"] is False else 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
