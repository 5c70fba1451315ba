"""Command-line front end emitting figure-ready CSV or JSON tables.

Every subcommand delegates to one library operation and serializes the
result without further arithmetic.  All dynamics subcommands work in
rescaled units (times in units of the correlation time, coupling and
detuning multiplied by it); ``mc-validate`` fixes the correlation time to 1
so rescaled and physical units coincide.  Exit codes: 0 success, 2 argument
error, 3 numerical failure.
"""

import argparse
import json
import sys

import numpy as np

from .capacity import capacity_curve, non_markovianity
from .correlations import contour_grid, dynamics_trace, transition_time
from .exceptions import HorizonError, ParameterError, QuadratureError
from .montecarlo import mc_beta_estimate
from .noise import OUNoiseParams, RescaledParams, beta_closed


def format_number(x):
    """9 significant digits; exponent style below 1e-4 in magnitude."""
    x = float(x)
    if x == 0.0:
        return "0"
    if abs(x) < 1e-4:
        return f"{x:.8e}"
    return f"{x:.9g}"


def render_csv(columns, rows):
    lines = [",".join(columns)]
    lines += [",".join(format_number(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def render_json(columns, rows):
    body = ", ".join(
        "[" + ", ".join(format_number(x) for x in row) + "]" for row in rows)
    return f'{{"columns": {json.dumps(columns)}, "rows": [{body}]}}\n'


def _time_grid(t_max, t_step, include_zero=True):
    if not (t_step > 0):
        raise ParameterError(f"--t-step must be positive, got {t_step}")
    if not (t_max >= 0):
        raise ParameterError(f"--t-max must be nonnegative, got {t_max}")
    start = 0.0 if include_zero else t_step
    return np.arange(start, t_max + 0.5 * t_step, t_step)


def _delta_grid(args):
    if not (args.delta_step > 0):
        raise ParameterError(f"--delta-step must be positive, got {args.delta_step}")
    if args.delta_max < args.delta_min:
        raise ParameterError("--delta-max must not be below --delta-min")
    return np.arange(args.delta_min, args.delta_max + 0.5 * args.delta_step,
                     args.delta_step)


def _cmd_beta(args):
    p = RescaledParams(args.lambda_r, args.delta)
    times = _time_grid(args.t_max, args.t_step)
    betas = beta_closed(times, p)
    return ["t", "beta"], [[t, b] for t, b in zip(times, betas)]


def _cmd_dynamics(args):
    p = RescaledParams(args.lambda_r, args.delta)
    times = _time_grid(args.t_max, args.t_step)
    snaps = dynamics_trace(args.c, p, times)
    return (["t", "I", "C", "Q"],
            [[s.time, s.mutual_info, s.classical_corr, s.discord] for s in snaps])


def _cmd_transition(args):
    if args.delta is not None:
        p = RescaledParams(args.lambda_r, args.delta)
        res = transition_time(args.c, p, horizon=args.horizon, tol=args.tol)
        return ["delta", "t_transition"], [[args.delta, res.first_crossing]]
    grid = contour_grid(args.c, args.lambda_r, _delta_grid(args),
                        horizon=args.horizon)
    rows = [[d, t] for d, t in zip(grid.delta_axis, grid.boundary) if t is not None]
    return ["delta", "t_transition"], rows


def _cmd_capacity(args):
    deltas = args.delta if args.delta else [1.0, 5.0, 10.0, 15.0]
    times = _time_grid(args.t_max, args.t_step)
    columns = ["t"] + [f"Q_D_delta_{d:g}" for d in deltas]
    series = [capacity_curve(RescaledParams(args.lambda_r, d), times).values
              for d in deltas]
    rows = [[t, *(s[i] for s in series)] for i, t in enumerate(times)]
    return columns, rows


def _cmd_nmark(args):
    deltas = _delta_grid(args)
    rows = [[d, non_markovianity(RescaledParams(args.lambda_r, d),
                                 horizon=args.horizon)]
            for d in deltas]
    return ["delta", "N_Q"], rows


def _cmd_mc_validate(args):
    if args.samples < 100:
        raise ParameterError(f"--samples must be at least 100, got {args.samples}")
    p = OUNoiseParams(lam=args.lambda_r, delta=args.delta, t_env=1.0)
    rp = p.rescaled()
    times = _time_grid(args.t_max, args.t_step, include_zero=False)
    if times.size == 0:
        raise ParameterError("--t-max must allow at least one positive time")
    rows = []
    for t in times:
        est = mc_beta_estimate(t, p, dt=t / 400.0, n_samples=args.samples,
                               seed=args.seed)
        ref = beta_closed(t, rp)
        z = (est.mean - ref) / est.std_error
        rows.append([t, ref, est.mean, est.std_error, z])
    return ["t", "beta_closed", "mc_mean", "mc_stderr", "z_score"], rows


def _add_output_options(sp):
    sp.add_argument("--format", choices=["csv", "json"], default="csv",
                    help="output serialization (default csv)")
    sp.add_argument("--output", metavar="PATH", default=None,
                    help="write to PATH instead of standard output")


def _add_lambda(sp):
    sp.add_argument("--lambda", dest="lambda_r", type=float, default=1.0,
                    help="rescaled coupling (default 1)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qdephase",
        description="Dephasing-channel dynamics under Ornstein-Uhlenbeck noise",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("beta", help="channel variance sweep (columns t, beta)")
    _add_lambda(sp)
    sp.add_argument("--delta", type=float, default=0.0, help="rescaled detuning")
    sp.add_argument("--t-max", type=float, default=10.0)
    sp.add_argument("--t-step", type=float, default=0.01)
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_beta)

    sp = sub.add_parser("dynamics",
                        help="correlation dynamics (columns t, I, C, Q)")
    sp.add_argument("--c", type=float, default=0.1, help="mixing parameter")
    _add_lambda(sp)
    sp.add_argument("--delta", type=float, default=0.0, help="rescaled detuning")
    sp.add_argument("--t-max", type=float, default=10.0)
    sp.add_argument("--t-step", type=float, default=0.01)
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_dynamics)

    sp = sub.add_parser("transition",
                        help="transition-time boundary (columns delta, t_transition)")
    sp.add_argument("--c", type=float, default=0.1, help="mixing parameter")
    _add_lambda(sp)
    sp.add_argument("--delta", type=float, default=None,
                    help="single detuning instead of a range")
    sp.add_argument("--delta-min", type=float, default=0.0)
    sp.add_argument("--delta-max", type=float, default=10.0)
    sp.add_argument("--delta-step", type=float, default=1.0)
    sp.add_argument("--horizon", type=float, default=None,
                    help="scan limit (default: derived from the asymptote)")
    sp.add_argument("--tol", type=float, default=1e-12,
                    help="bisection window in time (default 1e-12)")
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_transition)

    sp = sub.add_parser("capacity",
                        help="quantum capacity curves (columns t, Q_D per delta)")
    _add_lambda(sp)
    sp.add_argument("--delta", type=float, action="append", default=None,
                    help="detuning for one curve; repeatable (default 1 5 10 15)")
    sp.add_argument("--t-max", type=float, default=20.0)
    sp.add_argument("--t-step", type=float, default=0.01)
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_capacity)

    sp = sub.add_parser("nmark",
                        help="non-Markovianity sweep (columns delta, N_Q)")
    _add_lambda(sp)
    sp.add_argument("--delta-min", type=float, default=1.0)
    sp.add_argument("--delta-max", type=float, default=11.0)
    sp.add_argument("--delta-step", type=float, default=1.0)
    sp.add_argument("--horizon", type=float, default=60.0)
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_nmark)

    sp = sub.add_parser(
        "mc-validate",
        help="Monte Carlo vs closed form (columns t, beta_closed, mc_mean, "
             "mc_stderr, z_score); correlation time fixed to 1")
    _add_lambda(sp)
    sp.add_argument("--delta", type=float, default=0.0, help="detuning")
    sp.add_argument("--t-max", type=float, default=2.0)
    sp.add_argument("--t-step", type=float, default=0.5)
    sp.add_argument("--samples", type=int, default=20000)
    sp.add_argument("--seed", type=int, default=12345)
    _add_output_options(sp)
    sp.set_defaults(func=_cmd_mc_validate)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0

    try:
        columns, rows = args.func(args)
    except ParameterError as exc:
        print(f"qdephase: argument error: {exc}", file=sys.stderr)
        return 2
    except (HorizonError, QuadratureError) as exc:
        print(f"qdephase: numerical failure: {exc}", file=sys.stderr)
        return 3

    render = render_csv if args.format == "csv" else render_json
    text = render(columns, rows)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
