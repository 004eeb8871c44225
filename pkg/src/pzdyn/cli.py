"""Command-line front end.

Subcommands:

    classify   fixed points, eigenvalues, moduli and stability verdicts
    simulate   flow or map trajectory written as CSV
    verify     grid verification of a Lyapunov/LaSalle/invariance claim
    ns         Neimark-Sacker diagnostics, optional curve-window CSV
    sweep      parameter-plane sweep written as CSV

Reports are plain `key = value` lines; CSV files carry a `step_or_t,x,y`
header (or the sweep schema) with 17-significant-digit decimal fields, so
identical invocations produce byte-identical output. Exit codes: 0 pass,
1 verification failure, 2 bad input or regime mismatch, 3 I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import _kernels, bifurcation, discrete, flow
from .errors import PZDynError
from .linear import classify_fixed_point
from .model import FixedPointLabel, Params, State, fixed_points

__all__ = ["main", "main_exit"]


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _parse_seed(text: str) -> State:
    try:
        sx, sy = text.split(",")
        return State(float(sx), float(sy))
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be 'x,y', got {text!r}")


def _parse_range(text: str) -> tuple[float, float, int]:
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must be 'lo:hi:n', got {text!r}")
    if n < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"range must satisfy lo <= hi, n >= 1: {text!r}")
    return lo, hi, n


def _range_values(rng: tuple[float, float, int]) -> list[float]:
    lo, hi, n = rng
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def _result_word(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if sys.stdout.isatty() and not os.environ.get("NO_COLOR"):
        code = "32" if ok else "31"
        word = f"\x1b[{code}m{word}\x1b[0m"
    return word


def _write_csv(path: str, header: str, rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _cmd_classify(args) -> int:
    p = Params(args.r, args.gamma)
    print(f"r = {_fmt(p.r)}")
    print(f"gamma = {_fmt(p.gamma)}")
    for fp in fixed_points(p):
        cls = classify_fixed_point(fp, p)
        name = fp.label.value
        print(f"{name} state = ({_fmt(fp.state.x)}, {_fmt(fp.state.y)})")
        print(
            f"{name} eigenvalues = {_fmt_complex(cls.evidence.lambda1)}, "
            f"{_fmt_complex(cls.evidence.lambda2)}"
        )
        print(f"{name} moduli = {_fmt(cls.moduli[0])}, {_fmt(cls.moduli[1])}")
        print(f"{name} kind = {cls.kind.value}")
    return 0


def _cmd_simulate(args) -> int:
    p = Params(args.r, args.gamma)
    seed = args.seed
    if args.model == "map":
        if args.steps is None:
            raise PZDynError("map simulation requires --steps")
        orbit = discrete.iterate(seed, p, args.steps)
        rows = (
            (_fmt(float(k)), _fmt(orbit.xs[k]), _fmt(orbit.ys[k]))
            for k in range(len(orbit))
        )
    else:
        if args.t_end is None:
            raise PZDynError("ode simulation requires --t-end")
        traj = flow.integrate(seed, p, args.t_end, args.dt)
        rows = (
            (_fmt(traj.times[k]), _fmt(traj.xs[k]), _fmt(traj.ys[k]))
            for k in range(len(traj))
        )
    _write_csv(args.out, "step_or_t,x,y", rows)
    return 0


def _cmd_verify(args) -> int:
    p = Params(args.r, args.gamma)
    print(f"check = {args.which}")
    print(f"r = {_fmt(p.r)}")
    print(f"gamma = {_fmt(p.gamma)}")
    if args.which in ("thm1", "thm2"):
        rep = flow.verify_lyapunov(p, args.which, args.grid)
        print(f"grid_points = {rep.grid_points}")
        print(f"max_violation = {_fmt(rep.max_violation)}")
        print(f"monotone_fraction = {_fmt(rep.monotone_fraction)}")
        print(f"fd_max_error = {_fmt(rep.fd_max_error)}")
        ok = rep.passed and rep.fd_max_error <= 1e-8
    else:
        if args.which == "lasalle1":
            rep = discrete.verify_lasalle1(p, args.grid)
        elif args.which == "lasalle2":
            rep = discrete.verify_lasalle2(p, args.grid)
        else:
            rep = discrete.verify_m_invariance(p, min(args.grid, 200))
        print(f"grid_points = {rep.grid_points}")
        print(f"max_violation = {_fmt(rep.max_violation)}")
        ok = rep.passed()
    print(f"result = {_result_word(ok)}")
    return 0 if ok else 1


def _cmd_ns(args) -> int:
    setup = bifurcation.ns_setup(args.r)
    rep = bifurcation.ns_report(setup)
    print(f"r = {_fmt(setup.r)}")
    print(f"gamma0 = {_fmt(setup.gamma0)}")
    print(f"xhat = {_fmt(setup.xhat)}")
    print(f"yhat = {_fmt(setup.yhat)}")
    print(f"lambda1 = {_fmt_complex(rep.multipliers.lambda1)}")
    print(f"lambda2 = {_fmt_complex(rep.multipliers.lambda2)}")
    print(f"modulus = {_fmt(abs(rep.multipliers.lambda1))}")
    print(f"transversality = {_fmt(rep.transversality)}")
    for m, ok in enumerate(rep.nondegenerate, start=1):
        print(f"nondegenerate_m{m} = {str(ok).lower()}")
    c = rep.coeffs
    print(f"L20 = {_fmt_complex(c.L20)}")
    print(f"L11 = {_fmt_complex(c.L11)}")
    print(f"L02 = {_fmt_complex(c.L02)}")
    print(f"L21 = {_fmt_complex(c.L21)}")
    print(f"L_pipeline = {_fmt(rep.L_pipeline)}")
    print(f"L_closed_form = {_fmt(rep.L_closed_form)}")
    if args.gamma_star > 0.0:
        stats = bifurcation.detect_invariant_curve(
            setup, args.gamma_star, args.seed, args.transient, args.window
        )
        print(f"gamma_star = {_fmt(stats.gamma_star)}")
        print(f"curve_r_min = {_fmt(stats.r_min)}")
        print(f"curve_r_max = {_fmt(stats.r_max)}")
        print(f"curve_r_mean = {_fmt(stats.r_mean)}")
        print(f"curve_closed = {str(stats.closed).lower()}")
        if args.out:
            g = setup.gamma0 + args.gamma_star
            # the reporting window sits after transient + window warm-up steps
            start = args.transient + args.window
            xs, ys = _kernels.map_window(
                args.seed.x, args.seed.y, setup.r, g, start, args.window
            )
            rows = (
                (_fmt(float(start + 1 + k)), _fmt(xs[k]), _fmt(ys[k]))
                for k in range(args.window)
            )
            _write_csv(args.out, "step_or_t,x,y", rows)
    return 0


def _cmd_sweep(args) -> int:
    rows = []
    for r in _range_values(args.r_range):
        for g in _range_values(args.gamma_range):
            p = Params(r, g)
            kinds = {}
            for fp in fixed_points(p):
                kinds[fp.label] = classify_fixed_point(fp, p).kind.value
            rows.append(
                (
                    _fmt(r),
                    _fmt(g),
                    kinds[FixedPointLabel.E0],
                    kinds[FixedPointLabel.E1],
                    kinds.get(FixedPointLabel.E2, ""),
                    str(discrete.in_param_set_S(p).inside).lower(),
                    _fmt(g - (1.0 + r)),
                )
            )
    _write_csv(args.out, "r,gamma,e0_class,e1_class,e2_class,in_S,ns_distance", rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pzdyn",
        description="Stability and bifurcation toolkit for the planar plankton model",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cl = sub.add_parser("classify", help="classify the fixed points")
    cl.add_argument("--r", type=float, required=True)
    cl.add_argument("--gamma", type=float, required=True)
    cl.set_defaults(func=_cmd_classify)

    sim = sub.add_parser("simulate", help="write a trajectory or orbit as CSV")
    sim.add_argument("--model", choices=("ode", "map"), required=True)
    sim.add_argument("--r", type=float, required=True)
    sim.add_argument("--gamma", type=float, required=True)
    sim.add_argument("--seed", type=_parse_seed, required=True, help="initial state 'x,y'")
    sim.add_argument("--steps", type=int, help="map steps")
    sim.add_argument("--t-end", type=float, help="ode horizon")
    sim.add_argument("--dt", type=float, default=1e-3, help="ode step (default 1e-3)")
    sim.add_argument("--out", required=True, help="output CSV path")
    sim.set_defaults(func=_cmd_simulate)

    ver = sub.add_parser("verify", help="run a grid verification")
    ver.add_argument(
        "--which",
        choices=("thm1", "thm2", "lasalle1", "lasalle2", "lemma2"),
        required=True,
    )
    ver.add_argument("--r", type=float, required=True)
    ver.add_argument("--gamma", type=float, required=True)
    ver.add_argument("--grid", type=int, default=100)
    ver.set_defaults(func=_cmd_verify)

    ns = sub.add_parser("ns", help="Neimark-Sacker diagnostics")
    ns.add_argument("--r", type=float, required=True)
    ns.add_argument("--gamma-star", type=float, default=0.0)
    ns.add_argument("--seed", type=_parse_seed, default=State(0.3, 0.7))
    ns.add_argument("--transient", type=int, default=5000)
    ns.add_argument("--window", type=int, default=1000)
    ns.add_argument("--out", help="CSV path for the post-transient orbit window")
    ns.set_defaults(func=_cmd_ns)

    sw = sub.add_parser("sweep", help="parameter-plane sweep as CSV")
    sw.add_argument("--r-range", type=_parse_range, required=True, help="'lo:hi:n'")
    sw.add_argument("--gamma-range", type=_parse_range, required=True, help="'lo:hi:n'")
    sw.add_argument("--out", required=True)
    sw.set_defaults(func=_cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except PZDynError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
