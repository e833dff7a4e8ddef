"""Command line front end for benchmark runs, sweeps and CSV emission.

Examples:

    kleincut --d 4 --r 2 --eps 1e-3 --seeds 20 --out single.csv
    kleincut --sweep d --values 2,4,8,16 --out dim.csv
    kleincut --surface --values 0.5,1,2,4 --out surface.csv
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .harness import (
    SweepSpec,
    emit_complexity_surface,
    run_sweep,
    soft_report,
    write_manifest,
    write_rows,
)

_DEFAULT_SURFACE_EPS = (1e-1, 1e-2, 1e-3, 1e-4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleincut",
        description="Benchmark runs of the Klein-chart cutting-plane solver.",
    )
    parser.add_argument("--d", type=int, default=4, help="dimension (default 4)")
    parser.add_argument("--kappa", type=float, default=1.0, help="curvature parameter (default 1)")
    parser.add_argument("--r", type=float, default=2.0, help="ball radius (default 2; s = kappa*r)")
    parser.add_argument("--eps", type=float, default=1e-3, help="target normalized accuracy")
    parser.add_argument("--tau", type=float, default=0.8, help="benchmark anchor spread")
    parser.add_argument("--fraction", type=float, default=0.55, help="target norm fraction of tanh s")
    parser.add_argument("--seeds", type=int, default=20, help="number of seeded runs per value")
    parser.add_argument("--base-seed", type=int, default=0, help="first seed")
    parser.add_argument("--sweep", choices=("d", "s", "eps"), help="variable to sweep")
    parser.add_argument("--values", help="comma-separated sweep values (or s grid with --surface)")
    parser.add_argument("--out", help="CSV output path; manifest goes to <out>.manifest.json")
    parser.add_argument(
        "--surface",
        action="store_true",
        help="emit the complexity-factor CSV instead of running the solver",
    )
    return parser


def _parse_values(text):
    return [float(v) for v in text.split(",") if v.strip()]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.surface:
        if args.out is None:
            print("--surface requires --out", file=sys.stderr)
            return 2
        s_grid = _parse_values(args.values) if args.values else list(np.geomspace(0.05, 8.0, 25))
        eps_grid = [args.eps] if args.eps != 1e-3 else list(_DEFAULT_SURFACE_EPS)
        emit_complexity_surface(s_grid, eps_grid, args.out)
        print(f"wrote complexity surface ({len(s_grid)}x{len(eps_grid)} grid) to {args.out}")
        return 0

    s = args.kappa * args.r
    if args.sweep:
        if not args.values:
            print("--sweep requires --values", file=sys.stderr)
            return 2
        values = tuple(_parse_values(args.values))
    else:
        values = (s,)
    spec = SweepSpec(
        swept=args.sweep or "single",
        values=values,
        d=args.d,
        s=s,
        eps=args.eps,
        tau=args.tau,
        fraction=args.fraction,
        kappa=args.kappa,
        num_seeds=args.seeds,
        base_seed=args.base_seed,
    )
    rows, summaries = run_sweep(spec)
    for summary in summaries:
        print(
            f"{summary.sweep}={summary.value:g}: mean {summary.mean_queries:.1f} "
            f"std {summary.std_queries:.1f} max {summary.max_queries} "
            f"(theorem N = {summary.theorem_n})"
        )
    for note in soft_report(spec, summaries):
        print(note)
    if args.out:
        write_rows(args.out, rows)
        write_manifest(args.out + ".manifest.json", spec)
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
