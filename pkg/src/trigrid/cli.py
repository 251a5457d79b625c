"""Command line entry point: ``trigrid {reduce,verify,oracle-check,asymptotics,export}``.

Exit status: 0 success, 1 a theorem-backed check failed (or I/O error),
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import analysis
from .grid import (
    GridError,
    deserialize,
    format_rational,
    make_uniform_grid,
    parse_rational,
    serialize,
    to_weighted_graph,
)
from .oracle import exact_limit, oracle_corner_resistance
from .reduction import corner_resistance, trace

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list:
    """``"4..10"`` -> [4, ..., 10]; ``"7"`` -> [7]; ``"1,3,5"`` -> [1, 3, 5]."""
    out = []
    try:
        for part in text.split(","):
            lo, sep, hi = part.partition("..")
            if sep:
                a, b = int(lo), int(hi)
                if b < a:
                    raise ValueError
                out.extend(range(a, b + 1))
            else:
                out.append(int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use A..B, A or A,B,C") from None
    return out


def _rational_arg(text):
    try:
        return parse_rational(text)
    except GridError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _render(report, fmt):
    return report.to_json() + "\n" if fmt == "json" else report.to_csv()


# -- commands ------------------------------------------------------------------------


def cmd_reduce(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if not (0 <= args.steps <= args.n - 1):
        raise UsageError(f"--steps must lie in 0..{args.n - 1}")
    if args.label <= 0:
        raise UsageError("--label must be positive")
    start = make_uniform_grid(args.n, args.label)
    tr = trace(start, args.n - args.steps)
    if args.emit_intermediates:
        outdir = Path(args.out_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        for k, g in enumerate(tr.grids):
            (outdir / f"grid_n{args.n}_k{k}.json").write_text(serialize(g) + "\n")
        tails = {
            "n": args.n,
            "tails": [
                {"step": i, "top": format_rational(t.top),
                 "bottom_left": format_rational(t.bottom_left),
                 "bottom_right": format_rational(t.bottom_right)}
                for i, t in enumerate(tr.tails, start=1)
            ],
        }
        (outdir / f"tails_n{args.n}.json").write_text(json.dumps(tails, indent=1) + "\n")
    _emit(serialize(tr.final) + "\n", args.out)
    return EXIT_OK


def _verify_vanishing(args):
    ns = args.n or list(range(1, 15))
    return analysis.vanishing_ones_sweep(ns, literal_rims=args.literal_rims)


def _verify_uniform(args):
    s_values = args.s or [1]
    pairs = []
    for s in s_values:
        ns = args.n or list(range(4 * s, 4 * s + 7))
        bad = [n for n in ns if n < 4 * s]
        if bad or s < 1:
            raise UsageError(f"uniform-center needs s >= 1 and n >= 4s (s={s}, n={bad})")
        pairs.extend((n, s) for n in ns)
    return analysis.uniform_center_sweep(pairs)


def _sequence_table(seq):
    report = analysis.Report("sequences", ["s", "L_s", "B_s", "L_s_float", "B_s_float"])
    for s in range(1, len(seq) + 1):
        report.rows.append(dict(s=s, L_s=seq.l(s), B_s=seq.b(s),
                                L_s_float=float(seq.l(s)), B_s_float=float(seq.b(s))))
    return report


def cmd_verify(args) -> int:
    which = args.which
    if which in ("sequences", "corollary-6-3", "gcd") and args.s_max < 2:
        raise UsageError("--s-max must be at least 2")
    if which == "vanishing-ones":
        report = _verify_vanishing(args)
        ok = report.ok
    elif which == "uniform-center":
        report = _verify_uniform(args)
        ok = report.ok
    elif which == "sequences":
        seq = analysis.boundary_sequences(args.s_max)
        checks = analysis.check_monotone_identity(seq)
        report, ok = _sequence_table(seq), checks.ok
        for row in checks.failures():
            print(f"FAILED s={row['s']}: {row['check']}", file=sys.stderr)
    elif which == "corollary-6-3":
        seq = analysis.boundary_sequences(args.s_max, cross_check_upto=0)
        report = analysis.check_printed_corollary_6_3(seq)
        ok = all(r.get("derived_holds", True) for r in report.rows)
    else:
        report = analysis.gcd_scan(args.s_max)
        ok = True
        for name, (hits, total, first) in analysis.gcd_summary(report).items():
            print(f"{name}: gcd>1 for {hits}/{total} s; first gcd=1 at s={first}", file=sys.stderr)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(args) -> int:
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    if args.n_max > exact_limit() and not args.override:
        raise UsageError(f"--n-max above {exact_limit()} needs --override")
    for n in range(1, args.n_max + 1):
        via_tails = corner_resistance(n)
        via_laplacian = oracle_corner_resistance(n, override=True)
        if via_tails != via_laplacian:
            print(f"MISMATCH n={n}: tails {format_rational(via_tails)} "
                  f"!= laplacian {format_rational(via_laplacian)}", file=sys.stderr)
            return EXIT_FAIL
        print(f"n={n}: r_n = {format_rational(via_tails)}")
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    if args.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    report = analysis.asymptotics_report(args.n_max)
    _emit(_render(report, args.format), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    g = deserialize(Path(args.grid).read_text())
    wg = to_weighted_graph(g)
    rows = sorted((tuple(sorted(pair)), c) for pair, c in wg.edges.items())
    if args.format == "json":
        data = {"vertices": sorted(wg.vertices),
                "edges": [{"u": list(u), "v": list(v), "conductance": format_rational(c)}
                          for (u, v), c in rows]}
        text = json.dumps(data, indent=1) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["ux", "uy", "vx", "vy", "conductance", "resistance"])
        for (u, v), c in rows:
            w.writerow([u[0], u[1], v[0], v[1], format_rational(c), format_rational(1 / c)])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trigrid", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("reduce", help="reduce a uniform n-grid and write it as JSON")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--steps", type=int, default=1)
    r.add_argument("--label", type=_rational_arg, default=parse_rational("1"))
    r.add_argument("--out", help="final grid path (default: stdout)")
    r.add_argument("--emit-intermediates", action="store_true",
                   help="also write every intermediate grid and the tails to --out-dir")
    r.add_argument("--out-dir", default=".")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", help="run a check over a parameter range")
    v.add_argument("which", choices=["vanishing-ones", "uniform-center", "sequences",
                                     "corollary-6-3", "gcd"])
    v.add_argument("--n", type=parse_range, help="row counts, e.g. 4..10")
    v.add_argument("--s", type=parse_range, help="reduction counts, e.g. 1..3")
    v.add_argument("--s-max", type=int, default=64)
    v.add_argument("--literal-rims", action="store_true",
                   help="vanishing-ones part (c): only rims strictly inside the s-rim count")
    v.add_argument("--format", choices=["csv", "json"], default="csv")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle-check", help="compare corner resistance with the Laplacian")
    o.add_argument("--n-max", type=int, default=8)
    o.add_argument("--override", action="store_true", help="lift the exact-solve cap")
    o.set_defaults(func=cmd_oracle_check)

    a = sub.add_parser("asymptotics", help="tabulate e_n, r_n and tail ratios")
    a.add_argument("--n-max", type=int, default=14)
    a.add_argument("--format", choices=["csv", "json"], default="csv")
    a.add_argument("--out")
    a.set_defaults(func=cmd_asymptotics)

    e = sub.add_parser("export", help="write a grid file as a weighted edge list")
    e.add_argument("--grid", required=True)
    e.add_argument("--format", choices=["csv", "json"], default="csv")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except GridError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
