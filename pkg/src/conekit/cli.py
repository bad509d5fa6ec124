"""Command line entry point: ``conekit describe | sweep | verify``."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import check_setup, run_verification
from .errors import ConekitError
from .geometry import build_momentum_data, build_setup, max_admissible_b
from .sweep import parse_config, run_sweep, write_csv
from .svg import write_svg


def describe_text(config) -> str:
    lines = [f"config: {config.name}"]
    for k, f in enumerate(config.factors):
        lines.append(f"factor {k}: dim={f.dim} einstein={f.einstein} exponent={f.exponent}")
    bmax = max_admissible_b(config.factors)
    b_points = sorted({config.b_values[0], config.b_values[-1]})
    data = None
    for b in b_points:
        data = build_momentum_data(build_setup(config.factors, b, config.vol_M, config.a))
        if b == b_points[0]:
            lines.append(f"Q = {data.Q}")
            lines.append(f"RQ = {data.RQ}")
        lines.append(f"b = {b}: A = {data.A}, B = {data.B}, C = {data.C}")
    lines.append(f"b_max = {bmax if bmax is not None else 'unbounded'}")
    return "\n".join(lines) + "\n"


def cmd_describe(args) -> int:
    config = parse_config(Path(args.config))
    sys.stdout.write(describe_text(config))
    return 0


def cmd_sweep(args) -> int:
    config = parse_config(Path(args.config))
    rows = run_sweep(config)
    csv_path = Path(args.output) if args.output else config.csv_path
    if csv_path is None:
        csv_path = Path(args.config).with_suffix(".csv")
    write_csv(rows, csv_path)
    print(f"wrote {len(rows)} rows to {csv_path}")
    if args.svg or config.svg_path is not None:
        svg_path = config.svg_path or csv_path.with_suffix(".svg")
        write_svg(rows, svg_path, f"β(b): {config.name}")
        print(f"wrote plot to {svg_path}")
    return 0


def cmd_verify(args) -> int:
    failures = []
    if args.config:
        config = parse_config(Path(args.config))
        for b in config.b_values:
            setup = build_setup(config.factors, b, config.vol_M, config.a)
            failures.extend(check_setup(setup, fit=not config.exact_only))
    report = run_verification(seed=args.seed, cases=args.cases, fits=args.fits)
    failures.extend(report.failures)
    if failures:
        print(f"FAIL ({len(failures)} failing invariant(s)); first: {failures[0]}")
        for msg in failures[1:]:
            print(f"  also: {msg}")
        return 1
    print(f"OK: {report.cases} random setups (seed {args.seed}), {report.fits} cone-exponent fits")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conekit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="print Q, RQ, moments and the admissible range of b")
    p.add_argument("config")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("sweep", help="tabulate beta and friends over a grid of b")
    p.add_argument("config")
    p.add_argument("--svg", action="store_true", help="also write an SVG plot of beta(b)")
    p.add_argument("-o", "--output", help="CSV path (overrides the config)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the randomised invariant suite")
    p.add_argument("config", nargs="?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--fits", type=int, default=10, help="how many cases also get a cone-exponent fit")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConekitError as exc:
        where = f" (b={exc.b})" if getattr(exc, "b", None) is not None else ""
        print(f"error: {type(exc).__name__}{where}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
