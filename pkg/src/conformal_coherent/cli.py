"""Command-line interface.

Subcommands:

  verify        run named verification suites, emit a JSON report
  sample-metric sample the induced or rescaled metric on a (t, r) grid
  flow          sample the U(1) flow trajectory from a starting point
  quadrature    compare the DeWitt quadrature with its closed form

Exit codes: 0 on success, 1 when a verification suite fails, 2 on
configuration or usage errors.  Seed precedence: --seed > config file >
CONFORMAL_COHERENT_SEED > default 42.  All file outputs are deterministic
for a fixed configuration; floats are written with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import halfplane, spacetime
from .errors import ChartSingularity, ConformalCoherentError, InvalidGrid, UnknownSuite
from .matrix_core import MinkowskiVector
from .suites import SUITE_NAMES, run_suites

DEFAULT_SEED = 42
ENV_SEED = "CONFORMAL_COHERENT_SEED"


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def load_config(path: str) -> dict:
    """Line-oriented key=value config; '#' starts a comment."""
    cfg = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, val = (s.strip() for s in line.split("=", 1))
            cfg[key] = val
    return cfg


def _resolve_seed(args, cfg: dict) -> int:
    if args.seed is not None:
        return args.seed
    if "seed" in cfg:
        return int(cfg["seed"])
    if os.environ.get(ENV_SEED):
        return int(os.environ[ENV_SEED])
    return DEFAULT_SEED


def _write_rows(rows: list[dict], header: list[str], out, fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(
            [{k: row[k] for k in header} for row in rows],
            default=lambda x: float(x), indent=2))
        out.write("\n")
    else:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(float(row[k])) for k in header) + "\n")


def cmd_verify(args, cfg: dict) -> int:
    seed = _resolve_seed(args, cfg)
    samples = args.samples or int(cfg.get("samples", 100))
    fd_step = args.fd_step or float(cfg.get("fd_step", 1e-5))
    overrides = {
        key.split(".", 1)[1]: float(val)
        for key, val in cfg.items()
        if key.startswith("tol.")
    }
    reports = run_suites(args.suites, seed=seed, samples=samples,
                         fd_step=fd_step, tolerance_overrides=overrides)
    records = [r.to_record() for r in reports]
    text = json.dumps(records, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}: {r.checks_run} checks, "
              f"max normalized residual {r.max_residual:.3e} (tol {r.tolerance:g})",
              file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def cmd_sample_metric(args, cfg: dict) -> int:
    if not (args.t_min < args.t_max and args.r_min < args.r_max
            and args.nt >= 2 and args.nr >= 2):
        raise InvalidGrid("need t_min < t_max, r_min < r_max and counts >= 2")
    rows = []
    for t in np.linspace(args.t_min, args.t_max, args.nt):
        for r in np.linspace(args.r_min, args.r_max, args.nr):
            if args.which == "induced":
                g = spacetime.induced_metric(
                    args.L, MinkowskiVector(float(t), float(r), 0.0, 0.0))
            else:
                g = spacetime.rescaled_metric(
                    spacetime.RadialPoint(t=float(t), r=float(r), theta=np.pi / 2))
            comp = g.components
            rows.append({
                "t": float(t), "r": float(r),
                "g_tt": comp[0, 0], "g_rr": comp[1, 1],
                "g_thth": comp[2, 2], "g_phph": comp[3, 3],
            })
    header = ["t", "r", "g_tt", "g_rr", "g_thth", "g_phph"]
    _emit(rows, header, args)
    if args.fig:
        from .figures import render_metric_figure

        render_metric_figure(rows, args.fig)
    return 0


def cmd_flow(args, cfg: dict) -> int:
    p0 = spacetime.RadialPoint(t=args.t0, r=args.r0)
    alphas = np.linspace(0.0, args.alpha_max, args.steps + 1) if args.steps >= 1 else [0.0]
    rows = []
    for alpha in alphas:
        try:
            p = spacetime.u1_flow(float(alpha), p0)
        except ChartSingularity as exc:
            raise ChartSingularity(f"trajectory left the chart at alpha={alpha}: {exc}")
        rows.append({"alpha": float(alpha), "t": p.t, "r": p.r})
    # spot-check the flow composition property along the sampled trajectory
    mid = float(alphas[len(alphas) // 2])
    one = spacetime.u1_flow(mid, p0)
    two = spacetime.u1_flow(mid / 2, spacetime.u1_flow(mid / 2, p0))
    if max(abs(one.t - two.t), abs(one.r - two.r)) > 1e-9:
        raise ConformalCoherentError("flow composition spot-check failed")
    _emit(rows, ["alpha", "t", "r"], args)
    if args.fig:
        from .figures import render_flow_figure

        render_flow_figure(rows, args.fig)
    return 0


def cmd_quadrature(args, cfg: dict) -> int:
    pt = halfplane.HalfPlanePoint(q=args.q, p=args.p)
    h = halfplane.MetricPerturbation(dq=args.dq, dp=args.dp)
    quad = halfplane.dewitt_inner_product(pt, h, h)
    closed = halfplane.dewitt_closed_form(pt, h)
    rel = abs(quad - closed) / closed if closed else 0.0
    print(f"quadrature   = {_fmt(quad)}")
    print(f"closed form  = {_fmt(closed)}")
    print(f"relative err = {rel:.3e}")
    return 0


def _emit(rows: list[dict], header: list[str], args) -> None:
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            _write_rows(rows, header, fh, args.format)
    else:
        _write_rows(rows, header, sys.stdout, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conformal-coherent",
        description="Numerical verification of coherent-state geometry "
                    "(default seed 42; env CONFORMAL_COHERENT_SEED).")
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--fd-step", dest="fd_step", type=float, default=None)
    common.add_argument("--out", default=None)
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suites", nargs="+", default=["all"],
                   metavar="SUITE", help=f"from {SUITE_NAMES + ('all',)}")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sample-metric", parents=[common], help="sample a metric grid")
    p.add_argument("--which", choices=("induced", "rescaled"), default="rescaled")
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--t-min", type=float, default=-1.0)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--r-min", type=float, default=0.0)
    p.add_argument("--r-max", type=float, default=2.0)
    p.add_argument("--nt", type=int, default=21)
    p.add_argument("--nr", type=int, default=21)
    p.add_argument("--fig", default=None, help="also render a PNG heatmap")
    p.set_defaults(fn=cmd_sample_metric)

    p = sub.add_parser("flow", parents=[common], help="sample a U(1) flow trajectory")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--r0", type=float, default=0.5)
    p.add_argument("--alpha-max", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("--fig", default=None, help="also render a PNG of the trajectory")
    p.set_defaults(fn=cmd_flow)

    p = sub.add_parser("quadrature", parents=[common],
                       help="DeWitt quadrature vs closed form")
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--dq", type=float, default=1.0)
    p.add_argument("--dp", type=float, default=0.0)
    p.set_defaults(fn=cmd_quadrature)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cfg = load_config(args.config) if args.config else {}
        if args.command == "flow" and args.steps < 1:
            raise ValueError("steps must be >= 1")
        return args.fn(args, cfg)
    except (UnknownSuite, InvalidGrid, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConformalCoherentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
