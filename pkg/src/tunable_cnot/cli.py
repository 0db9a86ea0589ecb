"""Command-line entry point: ``tunable-cnot {table,verify,simulate,sweep,schedule}``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""
import argparse
import contextlib
import csv
import json
import math
import os
import sys

import numpy as np

from .equivalence import EXACT, classify
from .errors import KOutOfRange
from .operators import CNOT, CNOT_WEYL, max_norm_diff
from .propagator import (DEFAULT_STEPS, PropagationConfig, area_sweep, propagate, sweep_csv,
                         tracking_sensitivity)
from .pulses import profile_from_dict, rectangular, solved, table_gate_times
from .steering import cnot_schedule, compose, lambda_coeffs, steered_evolution
from .tolerances import IDENTITY_TOL, PROPAGATION_TOL

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CNOT_PHASE = np.exp(0.25j * math.pi)


class UsageError(Exception):
    pass


def _parse_inline(text):
    family, _, rest = text.partition(":")
    data = {"family": family.strip()}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad profile field {item!r}; expected key=value")
        key = key.strip()
        data[key] = int(value) if key == "n" else float(value)
    return data


def load_profile(spec, solve_t1):
    """Profile from a JSON file, a JSON string, or ``family:key=value,...``."""
    try:
        if os.path.isfile(spec):
            with open(spec) as fh:
                data = json.load(fh)
        elif spec.lstrip().startswith("{"):
            data = json.loads(spec)
        else:
            data = _parse_inline(spec)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"cannot read profile {spec!r}: {exc}") from exc
    if data.get("family") != "sampled":
        data.setdefault("g_peak", 1.0)
        if "t1" not in data:
            if not solve_t1:
                raise UsageError("profile has no t1; pass --solve-t1 or give t1")
            data["t1"] = 1.0
    try:
        profile = profile_from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid profile: {exc}") from exc
    return solved(profile) if solve_t1 else profile


def parse_grid(text):
    """``start:stop:num`` (inclusive linspace) or a comma separated list."""
    text = text.strip()
    try:
        if ":" in text:
            start, stop, num = text.split(":")
            return [float(x) for x in np.linspace(float(start), float(stop), int(num))]
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from exc


def _params(k):
    try:
        return lambda_coeffs(k)
    except KOutOfRange as exc:
        raise UsageError(f"KOutOfRange: {exc}") from exc


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc
    with fh:
        yield fh


def cmd_table(args):
    rows = table_gate_times(1.0)
    with _output(args.out) as out:
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["label", "family", "param", "t1_units"])
            for r in rows:
                writer.writerow([r.label, r.family, r.param, f"{r.t1_units:.4f}"])
        elif args.format == "json":
            out.write(json.dumps([r._asdict() for r in rows], indent=2) + "\n")
        else:
            out.write("# switching mechanism, pulse profile, t1 [pi hbar / (2 g)]\n")
            for r in rows:
                out.write(f"{r.label}, {r.profile}, {r.t1_units:.4f}\n")
    return EXIT_OK


def cmd_verify(args):
    if args.n_points < 1:
        raise UsageError("--n-points must be >= 1")
    if args.k_min > args.k_max:
        raise UsageError("--k-min must not exceed --k-max")
    for k in (args.k_min, args.k_max):
        _params(k)
    ks = np.linspace(args.k_min, args.k_max, args.n_points)
    steer_worst = sched_worst = 0.0
    for k in ks:
        params = _params(k)
        steer_worst = max(steer_worst, max_norm_diff(steered_evolution(params, math.pi / 2), CNOT_WEYL))
        u = compose(cnot_schedule(params, solved(rectangular(1.0, 1.0))))
        sched_worst = max(sched_worst, max_norm_diff(CNOT_PHASE * u, CNOT))
    ok = steer_worst < args.tol and sched_worst < args.tol
    result = {"k_min": args.k_min, "k_max": args.k_max, "n_points": args.n_points,
              "steering_residual": steer_worst, "schedule_residual": sched_worst,
              "tol": args.tol, "passed": ok}
    with _output(args.out) as out:
        if args.format == "json":
            out.write(json.dumps(result) + "\n")
        else:
            out.write(f"k grid: {args.n_points} points in [{args.k_min}, {args.k_max}]\n")
            out.write(f"worst steering residual: {steer_worst:.3e}\n")
            out.write(f"worst schedule residual: {sched_worst:.3e}\n")
            out.write(("PASS" if ok else "FAIL") + f" (tol {args.tol:g})\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_simulate(args):
    params = _params(args.k)
    profile = load_profile(args.profile, args.solve_t1)
    schedule = cnot_schedule(params, profile, check_area=False)
    u = propagate(schedule, PropagationConfig(args.steps))
    report = classify(u, CNOT, fidelity_tol=args.tol)
    with _output(args.out) as out:
        out.write(report.to_json() + "\n")
    return EXIT_OK if report.verdict == EXACT else EXIT_FAIL


def cmd_sweep(args):
    profile = load_profile(args.profile, solve_t1=True)
    if args.kind == "tracking":
        d1 = parse_grid(args.grid)
        d2 = parse_grid(args.grid2)
        if not d1 or not d2:
            raise UsageError("empty sweep grid")
        _params(args.k)
        grid = [(a, b) for a in d1 for b in d2]
        rows = tracking_sensitivity(args.k, profile, grid, steps=args.steps)
        header = ["delta1", "delta2", "fidelity"]
    else:
        factors = parse_grid(args.grid)
        if not factors:
            raise UsageError("empty sweep grid")
        if any(f <= 0 for f in factors):
            raise UsageError("area factors must be positive")
        _params(args.k)
        rows = area_sweep(args.k, profile, factors, steps=args.steps)
        header = ["area_factor", "fidelity"]
    with _output(args.out) as out:
        sweep_csv(rows, header, out)
    return EXIT_OK


def cmd_schedule(args):
    params = _params(args.k)
    profile = load_profile(args.profile, args.solve_t1)
    schedule = cnot_schedule(params, profile, check_area=False)
    with _output(args.out) as out:
        out.write(schedule.to_json(indent=2) + "\n")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tunable-cnot",
        description="CNOT gates for tunably coupled qubits by tracked-drive steering.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=None, default_fmt="text"):
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        if fmt_choices:
            p.add_argument("--format", choices=fmt_choices, default=default_fmt)

    p = sub.add_parser("table", help="gate times for the standard switching profiles")
    common(p, ["text", "csv", "json"])
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check the steering identity over a k grid")
    p.add_argument("--k-min", type=float, default=-7.0)
    p.add_argument("--k-max", type=float, default=7.0)
    p.add_argument("--n-points", type=int, default=200)
    p.add_argument("--tol", type=float, default=IDENTITY_TOL)
    common(p, ["text", "json"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="propagate the full CNOT schedule numerically")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--profile", required=True,
                   help="JSON file, JSON string, or family:key=value,...")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--solve-t1", action="store_true", help="set t1 so the pulse area is pi/2")
    p.add_argument("--tol", type=float, default=PROPAGATION_TOL,
                   help="accepted infidelity for the exact-up-to-phase verdict")
    common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="fidelity sweeps over tracking errors or pulse area")
    p.add_argument("kind", choices=["tracking", "area"])
    p.add_argument("--k", type=float, default=0.0)
    p.add_argument("--profile", default="rectangular")
    p.add_argument("--grid", required=True,
                   help="delta1 values (tracking) or area factors (area): start:stop:num or a,b,c")
    p.add_argument("--grid2", default="0", help="delta2 values for tracking sweeps")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("schedule", help="emit the CNOT schedule as JSON")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--solve-t1", action="store_true")
    common(p)
    p.set_defaults(func=cmd_schedule)
    return parser


def _join_grid_values(argv):
    # "--grid -0.1:0.1:9" would otherwise read as an unknown option
    out = []
    it = iter(argv)
    for arg in it:
        if arg in ("--grid", "--grid2"):
            value = next(it, None)
            out.append(arg if value is None else f"{arg}={value}")
        else:
            out.append(arg)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_join_grid_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "steps", DEFAULT_STEPS) < 2:
        print("error: --steps must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
