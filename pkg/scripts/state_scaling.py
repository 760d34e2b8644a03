#!/usr/bin/env python3
"""Width-DP state counts on random permutations, normalized by sqrt(n) log2(n).

    python3 scripts/state_scaling.py --sizes 10 14 18 22 --samples 20 --seed 1 --out scaling.csv
"""
import argparse
import sys

from weakbruhat.counting import DEFAULT_STATE_BUDGET
from weakbruhat.randexp import runtime_scaling_experiment, write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 14, 18, 22])
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET)
    ap.add_argument("--out", help="CSV path (default: stdout)")
    args = ap.parse_args(argv)

    rows = runtime_scaling_experiment(args.sizes, args.samples, args.seed, args.budget)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(rows, fh)
    else:
        write_csv(rows, sys.stdout)

    prev = None
    for r in rows:
        e = r.state_exponent
        flag = "" if prev is None or e is None or e <= prev else "  (increased)"
        shown = "n/a" if e is None else f"{e:.4f}"
        print(f"n={r.n:>3} exponent={shown} budget_failures={r.budget_failures} "
              f"oracle_mismatches={r.oracle_mismatches}{flag}", file=sys.stderr)
        prev = e if e is not None else prev


if __name__ == "__main__":
    main()
