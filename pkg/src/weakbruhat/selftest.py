"""Exhaustive small-n invariant checks, run by ``weakbruhat selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from .counting import (
    count_from_identity, count_interval, count_le_decomposition,
    count_le_width_dp, Strategy,
)
from .decomposition import block_decompose, intrinsic_width
from .oracles import (
    interval_bfs, is_separable_bruteforce, lds_bruteforce,
    strong_modules_bruteforce, up_closure,
)
from .perms import (
    Permutation, all_permutations, compose, identity, increasing_chain_cover,
    inverse, inversion_set, lds_width, upper_covers, weak_leq,
)
from .posets import (
    count_le_bruteforce, linear_extensions, max_antichain_bruteforce, phi,
    phi_inverse,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _perms_upto(max_n: int) -> Iterator[Permutation]:
    for n in range(1, max_n + 1):
        yield from all_permutations(n)


def check_group_laws(max_n: int) -> str | None:
    rnd = random.Random(0)
    for _ in range(200):
        n = rnd.randint(1, 50)
        p, q, r = (Permutation(tuple(rnd.sample(range(1, n + 1), n))) for _ in range(3))
        if compose(p, inverse(p)) != identity(n):
            return f"p p^-1 != id for {p}"
        if compose(compose(p, q), r) != compose(p, compose(q, r)):
            return f"composition not associative on {p}, {q}, {r}"
    return None


def check_order_is_cover_closure(max_n: int) -> str | None:
    for n in range(1, min(max_n, 5) + 1):
        perms = list(all_permutations(n))
        for p in perms:
            above = up_closure(p)
            for q in perms:
                if weak_leq(p, q) != (q in above):
                    return f"weak_leq({p}, {q}) disagrees with the covering relation"
    return None


def check_cover_adds_one_inversion(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        size = len(inversion_set(p))
        for q in upper_covers(p):
            if len(inversion_set(q)) != size + 1:
                return f"cover {p} -> {q} does not add exactly one inversion"
    return None


def check_lds_and_chain_cover(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        w = lds_width(p)
        if w != lds_bruteforce(p.images):
            return f"lds_width wrong on {p}"
        cover = increasing_chain_cover(p)
        if len(cover) != w or sorted(i for c in cover.chains for i in c) != list(range(1, p.n + 1)):
            return f"chain cover wrong on {p}"
    return None


def check_width_antichain(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        if max_antichain_bruteforce(phi(p)) != lds_width(p):
            return f"poset width differs from permutation width on {p}"
    return None


def check_extensions_are_interval(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        exts = {Permutation(e) for e in linear_extensions(phi(p))}
        if exts != interval_bfs(identity(p.n), p):
            return f"linear extensions of phi({p}) differ from [id, {p}]"
        if phi_inverse(phi(p)) != p:
            return f"phi round trip fails on {p}"
    return None


def check_decomposition(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        tree = block_decompose(p)
        if tree.to_permutation() != p:
            return f"re-inflation fails on {p}"
        if (intrinsic_width(tree) == 1) != is_separable_bruteforce(p):
            return f"intrinsic width 1 disagrees with separability on {p}"
    return None


def check_strong_modules(max_n: int) -> str | None:
    for p in _perms_upto(min(max_n, 5)):
        P = phi(p)
        strong = strong_modules_bruteforce(p.n, P.less)
        nodes = {
            frozenset(p.images[start - 1:start - 1 + node.span])
            for start, node in block_decompose(p).walk()
        }
        if strong != nodes:
            return f"strong modules of phi({p}) differ from the decomposition tree"
    return None


def check_strategies_agree(max_n: int) -> str | None:
    for p in _perms_upto(max_n):
        brute = count_le_bruteforce(phi(p))
        if count_le_width_dp(p) != brute or count_le_decomposition(p) != brute:
            return f"strategies disagree on {p}"
    return None


def check_intervals(max_n: int) -> str | None:
    for n in range(1, min(max_n, 5) + 1):
        perms = list(all_permutations(n))
        for p in perms:
            for q in up_closure(p):
                if count_interval(p, q) != len(interval_bfs(p, q)):
                    return f"|[{p}, {q}]| wrong"
        if count_from_identity(perms[-1], Strategy.AUTO) != len(perms):
            return f"|[id, reversal]| != {n}!"
    return None


CHECKS: list[tuple[str, Callable[[int], str | None]]] = [
    ("group laws", check_group_laws),
    ("weak order equals cover closure", check_order_is_cover_closure),
    ("covers add one inversion", check_cover_adds_one_inversion),
    ("lds width and chain cover", check_lds_and_chain_cover),
    ("poset width equals permutation width", check_width_antichain),
    ("linear extensions equal [id, p]", check_extensions_are_interval),
    ("decomposition round trip and separability", check_decomposition),
    ("strong modules match decomposition", check_strong_modules),
    ("counting strategies agree", check_strategies_agree),
    ("interval sizes match BFS", check_intervals),
]


def run_selftest(max_n: int = 6) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        try:
            problem = check(max_n)
        except Exception as exc:  # a crash is a failed check, not an abort
            problem = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, problem is None, problem or ""))
    return results
