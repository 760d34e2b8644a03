"""
Command-line front end.

Exit codes: 0 success, 2 malformed input or usage, 3 the pair is not an
interval, 4 a resource budget or brute-force cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import randexp
from .counting import (
    DEFAULT_STATE_BUDGET, NotAnIntervalError, StateBudgetExceeded, Strategy,
    count_from_identity, count_interval,
)
from .decomposition import block_decompose, intrinsic_width
from .oracles import interval_bfs, is_separable_bruteforce
from .perms import (
    PermutationError, compose, identity, inverse, lds_width,
    parse_permutation, upper_covers, weak_leq,
)
from .posets import (
    PosetError, SizeCapExceeded, as_poset2d, count_le_bruteforce,
    ingest_poset_file, max_antichain_bruteforce, phi,
)
from .selftest import run_selftest

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_INTERVAL = 3
EXIT_BUDGET = 4

# interval enumeration by BFS visits up to n! permutations
BFS_MAX_N = 9


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be non-negative, got {text}")
    return value


def _perm(text: str):
    return parse_permutation(text)


def _strategy(args) -> Strategy:
    return Strategy(args.strategy)


def cmd_count_interval(args) -> int:
    p, q = _perm(args.lower), _perm(args.upper)
    if p.n != q.n:
        raise UsageError(f"size mismatch: {p.n} vs {q.n}")
    print(count_interval(p, q, _strategy(args), args.budget))
    return EXIT_OK


def cmd_count_le(args) -> int:
    if args.perm is not None:
        p = _perm(args.perm)
    else:
        poset = ingest_poset_file(Path(args.poset).read_text())
        two_dim = as_poset2d(poset)
        if two_dim is None:
            # not a naturally labeled dimension-two poset: only brute force applies
            print(count_le_bruteforce(poset))
            return EXIT_OK
        p = two_dim.sigma
    print(count_from_identity(p, _strategy(args), args.budget))
    return EXIT_OK


def cmd_width(args) -> int:
    print(lds_width(_perm(args.perm)))
    return EXIT_OK


def cmd_iwidth(args) -> int:
    print(intrinsic_width(_perm(args.perm)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    tree = block_decompose(_perm(args.perm))
    if args.json:
        print(json.dumps(tree.to_dict()))
    else:
        print(tree.render())
    return EXIT_OK


def cmd_covers(args) -> int:
    for q in upper_covers(_perm(args.perm)):
        print(q)
    return EXIT_OK


def cmd_oracle(args) -> int:
    """Brute-force counterparts of count-interval, count-le, width and iwidth."""
    p = _perm(args.lower)
    q = _perm(args.upper) if args.upper else None
    if q is None:
        p, q = identity(p.n), p
    if p.n != q.n:
        raise UsageError(f"size mismatch: {p.n} vs {q.n}")
    if p.n > BFS_MAX_N:
        raise SizeCapExceeded(f"BFS interval enumeration is capped at n <= {BFS_MAX_N}")
    if not weak_leq(p, q):
        raise NotAnIntervalError(f"{p} is not below {q} in the weak order")
    reduced = compose(inverse(p), q)
    print(f"interval_bfs {len(interval_bfs(p, q))}")
    print(f"extensions_bruteforce {count_le_bruteforce(phi(reduced))}")
    print(f"width_bruteforce {max_antichain_bruteforce(phi(reduced))}")
    print(f"separable_bruteforce {'yes' if is_separable_bruteforce(reduced) else 'no'}")
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = randexp.substream(args.seed, args.n, 0)
    if args.separable:
        print(randexp.random_separable(args.n, rng))
    elif args.max_width is not None:
        print(randexp.random_permutation_max_width(args.n, args.max_width, rng))
    else:
        print(randexp.random_permutation(args.n, rng))
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.kind == "width":
        rows = [randexp.width_statistics(n, args.samples, args.seed, args.workers) for n in args.n]
    elif args.kind == "concentration":
        try:
            rows = [
                randexp.concentration_report(n, args.samples, args.alpha, args.seed, args.workers)
                for n in args.n
            ]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        rows = randexp.runtime_scaling_experiment(args.n, args.samples, args.seed, args.budget)
        for row in rows:
            if row.state_exponent is not None:
                print(
                    f"n={row.n} log2(states)/(sqrt(n) log2 n)={row.state_exponent:.4f} "
                    f"budget_failures={row.budget_failures} oracle_mismatches={row.oracle_mismatches}",
                    file=sys.stderr,
                )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            randexp.write_csv(rows, fh)
    else:
        randexp.write_csv(rows, sys.stdout)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(args.max_n)
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
        print(line + (f": {r.detail}" if r.detail else ""))
    return EXIT_OK if all(r.passed for r in results) else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weakbruhat", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def counting_opts(sp):
        sp.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
        sp.add_argument("--budget", type=_positive, default=DEFAULT_STATE_BUDGET,
                        help="maximum number of width-DP states")

    sp = sub.add_parser("count-interval", help="size of the interval [P, Q]")
    sp.add_argument("lower")
    sp.add_argument("upper")
    counting_opts(sp)
    sp.set_defaults(func=cmd_count_interval)

    sp = sub.add_parser("count-le", help="number of linear extensions")
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--perm", help="count extensions of phi(PERM)")
    src.add_argument("--poset", help="poset file")
    counting_opts(sp)
    sp.set_defaults(func=cmd_count_le)

    for name, func, text in (
        ("width", cmd_width, "longest decreasing subsequence"),
        ("iwidth", cmd_iwidth, "intrinsic width"),
        ("covers", cmd_covers, "upper covers in the weak order"),
    ):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("perm")
        sp.set_defaults(func=func)

    sp = sub.add_parser("decompose", help="block decomposition tree")
    sp.add_argument("perm")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("oracle", help="brute-force answers for [P, Q] (or [id, P])")
    sp.add_argument("lower")
    sp.add_argument("upper", nargs="?")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="random permutation")
    sp.add_argument("--n", type=_positive, required=True)
    sp.add_argument("--seed", type=_seed, required=True)
    kind = sp.add_mutually_exclusive_group()
    kind.add_argument("--separable", action="store_true")
    kind.add_argument("--max-width", type=_positive, help="uniform among permutations of width <= K")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("experiment", help="random-permutation experiments as CSV")
    sp.add_argument("kind", choices=["width", "concentration", "scaling"])
    sp.add_argument("--n", type=_positive, nargs="+", required=True)
    sp.add_argument("--samples", type=_positive, required=True)
    sp.add_argument("--seed", type=_seed, required=True)
    sp.add_argument("--alpha", type=float, default=0.45)
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--budget", type=_positive, default=DEFAULT_STATE_BUDGET)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("selftest", help="exhaustive small-n invariant checks")
    sp.add_argument("--max-n", type=_positive, default=6)
    sp.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, PermutationError, PosetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotAnIntervalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_INTERVAL
    except (StateBudgetExceeded, SizeCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
