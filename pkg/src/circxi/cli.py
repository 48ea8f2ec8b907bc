"""Command-line front end.

Subcommands: xi, test, population, cutscan, simulate. Results go to
stdout (plain text or JSON), diagnostics to stderr. Exit codes: 0 ok,
2 bad input or parse error, 3 ties under the reject policy, 4 sample
too small, 5 output I/O error.
"""

import argparse
import csv
import json
import sys

from circxi import __version__
from circxi.angles import CircularSample, TiesPolicy, normalize_angles, resolve_ties
from circxi.coefficient import xi_circular_directed, xi_circular_symmetric
from circxi.errors import CircxiError, DomainError, SampleTooSmall, TiesPresent
from circxi.linear import angle_grid, cut_scan, sample_gap_grid
from circxi.null import test_normal, test_permutation
from circxi.population import NoiseModel, xi_population_additive
from circxi.simulation import emit_curves, emit_tables, run_experiment, table_plan

# used whenever a seeded command is run without an explicit --seed
DEFAULT_SEED = 1729

_DIRECTIONS = {"xy": "x_to_y", "yx": "y_to_x", "sym": "symmetric"}


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_csv(args):
    """Read the two angle columns; reject non-numeric rows with line numbers."""
    path = args.input
    if path == "-":
        f = sys.stdin
        close = False
    else:
        try:
            f = open(path, newline="")
        except OSError as e:
            raise CliError(f"cannot open {path}: {e}", 2)
        close = True
    xs, ys = [], []
    idx = (0, 1)
    try:
        reader = csv.reader(f)
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not c.strip() for c in row):
                continue
            if lineno == 1 and args.header:
                names = [c.strip() for c in row]
                if args.columns:
                    try:
                        idx = (names.index(args.columns[0]),
                               names.index(args.columns[1]))
                    except ValueError:
                        raise CliError(
                            f"columns {args.columns} not found in header {names}", 2)
                continue
            try:
                xs.append(float(row[idx[0]]))
                ys.append(float(row[idx[1]]))
            except (ValueError, IndexError):
                raise CliError(f"line {lineno}: non-numeric or missing field in {row!r}", 2)
    finally:
        if close:
            f.close()
    if len(xs) < 2:
        raise CliError(f"need at least 2 data rows, got {len(xs)}", 4)
    return xs, ys


def _ingest(args):
    xs, ys = _read_csv(args)
    try:
        sample = CircularSample(normalize_angles(xs, args.unit),
                                normalize_angles(ys, args.unit))
    except CircxiError as e:
        raise CliError(str(e), 2)
    policy = TiesPolicy(mode="jitter" if args.ties == "jitter" else "reject",
                        jitter_scale=args.jitter_scale,
                        seed=args.seed if args.seed is not None else DEFAULT_SEED)
    try:
        resolved = resolve_ties(sample, policy)
    except TiesPresent as e:
        raise CliError(f"{e} (use --ties jitter to break ties)", 3)
    return resolved, resolved is not sample


def _emit(args, payload, plain_lines):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in plain_lines:
            print(line)


def cmd_xi(args):
    sample, ties_applied = _ingest(args)
    direction = _DIRECTIONS[args.direction]
    try:
        if direction == "symmetric":
            rep = xi_circular_symmetric(sample, ties_applied=ties_applied)
        else:
            rep = xi_circular_directed(sample, direction, ties_applied=ties_applied)
    except SampleTooSmall as e:
        raise CliError(str(e), 4)
    payload = {"raw": rep.raw, "corrected": rep.corrected, "n": rep.n,
               "direction": rep.direction, "ties_applied": rep.ties_applied}
    corrected = "n/a" if rep.corrected is None else f"{rep.corrected:.6f}"
    _emit(args, payload, [
        f"n           {rep.n}",
        f"direction   {rep.direction}",
        f"raw         {rep.raw:.6f}",
        f"corrected   {corrected}",
        f"ties        {'jittered' if rep.ties_applied else 'none'}",
    ])
    return 0


def cmd_test(args):
    sample, _ = _ingest(args)
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    try:
        if args.method == "normal":
            rep = test_normal(xi_circular_directed(sample, "x_to_y"))
        else:
            rep = test_permutation(sample, B=args.permutations, seed=seed)
    except SampleTooSmall as e:
        raise CliError(str(e), 4)
    decision = "reject" if rep.p_value <= args.level else "fail to reject"
    payload = {"statistic": rep.statistic, "z": rep.z, "p_value": rep.p_value,
               "method": rep.method, "permutations_used": rep.permutations_used,
               "seed": rep.seed, "level": args.level, "decision": decision}
    lines = [f"statistic   {rep.statistic:.6f}"]
    if rep.z is not None:
        lines.append(f"z           {rep.z:.6f}")
    lines += [f"p_value     {rep.p_value:.6f}",
              f"method      {rep.method}",
              f"decision    {decision} at level {args.level}"]
    _emit(args, payload, lines)
    return 0


def cmd_population(args):
    try:
        if args.kind == "none":
            model = NoiseModel("none")
        elif args.kind == "wrapped-normal":
            if args.sigma_rad is not None:
                model = NoiseModel.wrapped_normal_rad(args.sigma_rad)
            elif args.sigma_turns is not None:
                model = NoiseModel("wrapped_normal", args.sigma_turns)
            else:
                raise CliError("wrapped-normal needs --sigma-rad or --sigma-turns", 2)
        elif args.kind == "von-mises":
            if args.kappa is None:
                raise CliError("von-mises needs --kappa", 2)
            model = NoiseModel("von_mises", args.kappa)
        else:
            if args.a is None:
                raise CliError("uniform-arc needs --a", 2)
            model = NoiseModel("uniform_arc", args.a)
        result = xi_population_additive(model, tol=args.tol)
    except DomainError as e:
        raise CliError(str(e), 2)
    payload = {"value": result.value, "terms_used": result.terms_used,
               "tail_bound": result.tail_bound}
    _emit(args, payload, [
        f"value       {result.value:.6f}",
        f"terms_used  {result.terms_used}",
        f"tail_bound  {result.tail_bound:.3e}",
    ])
    return 0


def cmd_cutscan(args):
    sample, _ = _ingest(args)
    if args.grid == "gaps":
        grid = sample_gap_grid(sample.n)
    else:
        try:
            size = int(args.grid)
        except ValueError:
            raise CliError(f"--grid must be an integer or 'gaps', got {args.grid!r}", 2)
        if size < 1:
            raise CliError("--grid must be >= 1", 2)
        grid = angle_grid(size)
    report = cut_scan(sample, grid)
    payload = {"mean": report.mean, "sd": report.sd,
               "min": report.min, "max": report.max, "cuts": len(report.grid)}
    lines = [
        f"cuts        {len(report.grid)}",
        f"mean        {report.mean:.6f}",
        f"sd          {report.sd:.6f}",
        f"min         {report.min:.6f}",
        f"max         {report.max:.6f}",
    ]
    if args.grid == "gaps":
        raw = xi_circular_directed(sample, "x_to_y").raw
        payload["cut_average"] = report.mean
        payload["raw"] = raw
        lines.append(f"cut_average {report.mean:.6f} (raw statistic {raw:.6f})")
    if args.full_grid:
        payload["grid"] = [
            {"a": c.a, "b": c.b, "kind": c.kind, "value": v} for c, v in report.grid
        ]
        if args.format != "json":
            lines += [f"  a={c.a} b={c.b} {v:.6f}" for c, v in report.grid]
    _emit(args, payload, lines)
    return 0


def cmd_simulate(args):
    seed = args.seed if args.seed is not None else DEFAULT_SEED
    if args.table is not None:
        plan = table_plan(args.table, seed=seed, replicates=args.replicates,
                          permutations=args.permutations)
    else:
        raise CliError("simulate requires --table {1|2|3|4}", 2)
    result = run_experiment(plan)
    data = emit_tables(result, format=args.format_out)
    try:
        if args.out == "-":
            sys.stdout.buffer.write(data)
        else:
            with open(args.out, "wb") as f:
                f.write(data)
            if args.curves_out:
                with open(args.curves_out, "wb") as f:
                    f.write(emit_curves(result))
    except OSError as e:
        raise CliError(f"cannot write output: {e}", 5)
    print(f"simulate: table={args.table} rows={len(result.rows)} "
          f"replicates={plan.replicates} seed={seed} "
          f"runtime={result.runtime_seconds:.1f}s", file=sys.stderr)
    return 0


def _add_input_flags(p):
    p.add_argument("--input", required=True, help="CSV path, or - for stdin")
    p.add_argument("--columns", nargs=2, metavar=("X", "Y"),
                   help="column names (requires --header); default: first two columns")
    p.add_argument("--header", action="store_true", help="first row is a header")
    p.add_argument("--unit", choices=["turns", "radians", "degrees"],
                   default="radians")
    p.add_argument("--ties", choices=["reject", "jitter"], default="reject")
    p.add_argument("--jitter-scale", type=float, default=1e-9)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="circxi",
        description="Cut-free circular rank correlation and independence tests",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xi", help="compute the circular coefficient")
    _add_input_flags(p)
    p.add_argument("--direction", choices=["xy", "yx", "sym"], default="xy")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("test", help="test independence")
    _add_input_flags(p)
    p.add_argument("--method", choices=["normal", "perm"], default="normal")
    p.add_argument("--permutations", type=int, default=499)
    p.add_argument("--level", type=float, default=0.05)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("population", help="population value for additive noise")
    p.add_argument("--kind", required=True,
                   choices=["none", "wrapped-normal", "von-mises", "uniform-arc"])
    p.add_argument("--sigma-rad", type=float, default=None,
                   help="wrapped normal unwrapped sd in radians")
    p.add_argument("--sigma-turns", type=float, default=None,
                   help="wrapped normal unwrapped sd in turns")
    p.add_argument("--kappa", type=float, default=None)
    p.add_argument("--a", type=float, default=None, help="uniform arc length in turns")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_population)

    p = sub.add_parser("cutscan", help="cut-point sensitivity scan")
    _add_input_flags(p)
    p.add_argument("--grid", default="8",
                   help="grid points per axis, or 'gaps' for all sample-gap pairs")
    p.add_argument("--full-grid", action="store_true", help="print every cut value")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_cutscan)

    p = sub.add_parser("simulate", help="reproduce a reported table")
    p.add_argument("--table", type=int, choices=[1, 2, 3, 4], required=True)
    p.add_argument("--replicates", type=int, default=1000)
    p.add_argument("--permutations", type=int, default=499)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    p.add_argument("--curves-out", default=None,
                   help="also write long-format curve records here")
    p.add_argument("--format", dest="format_out", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"circxi: {e}", file=sys.stderr)
        return e.code
    except CircxiError as e:
        print(f"circxi: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
