#!/usr/bin/env python3
"""Mean longest-decreasing-subsequence length of uniform random permutations.

Prints one CSV row per size, followed by a concentration row for the largest size.

    python3 scripts/width_table.py --sizes 100 1000 10000 --samples 200 --seed 1
"""
import argparse
import math
import sys

from weakbruhat.randexp import concentration_report, width_statistics, write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10_000])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--tail-samples", type=int, default=500)
    ap.add_argument("--alpha", type=float, default=0.45)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)

    rows = [width_statistics(n, args.samples, args.seed, args.workers) for n in args.sizes]
    rows.append(concentration_report(
        max(args.sizes), args.tail_samples, args.alpha, args.seed, args.workers))
    write_csv(rows, sys.stdout)

    for r in rows[:-1]:
        se = r.stddev / math.sqrt(r.samples * r.n)
        print(f"n={r.n:>7} ratio={r.mean_ratio:.4f} +/- {se:.4f}", file=sys.stderr)


if __name__ == "__main__":
    main()
