"""
Slow, independent reference computations used to cross-check the fast paths.
None of these touch the chain cover, the width DP or the block scan.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Callable, Sequence

from .perms import Permutation, upper_covers

__all__ = [
    "lower_covers", "up_closure", "down_closure", "interval_bfs",
    "lds_bruteforce", "contains_pattern", "is_separable_bruteforce",
    "modules_bruteforce", "strong_modules_bruteforce",
    "maximal_proper_blocks",
]


def lower_covers(p: Permutation) -> list[Permutation]:
    im = p.images
    out = []
    for k in range(len(im) - 1):
        if im[k] > im[k + 1]:
            new = list(im)
            new[k], new[k + 1] = new[k + 1], new[k]
            out.append(Permutation(tuple(new)))
    return out


def _closure(start: Permutation, step: Callable[[Permutation], list[Permutation]]) -> set[Permutation]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in step(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def up_closure(p: Permutation) -> set[Permutation]:
    return _closure(p, upper_covers)


def down_closure(p: Permutation) -> set[Permutation]:
    return _closure(p, lower_covers)


def interval_bfs(lo: Permutation, hi: Permutation) -> set[Permutation]:
    """``[lo, hi]`` from the covering relation alone (empty if incomparable)."""
    return up_closure(lo) & down_closure(hi)


def lds_bruteforce(seq: Sequence[int]) -> int:
    n = len(seq)
    for size in range(n, 0, -1):
        for idx in combinations(range(n), size):
            if all(seq[idx[t]] > seq[idx[t + 1]] for t in range(size - 1)):
                return size
    return 0


def contains_pattern(p: Permutation | Sequence[int], pattern: Sequence[int]) -> bool:
    seq = p.images if isinstance(p, Permutation) else tuple(p)
    k = len(pattern)
    for idx in combinations(range(len(seq)), k):
        vals = [seq[i] for i in idx]
        ranks = sorted(vals)
        if all(ranks.index(vals[t]) + 1 == pattern[t] for t in range(k)):
            return True
    return False


def is_separable_bruteforce(p: Permutation) -> bool:
    return not (contains_pattern(p, (2, 4, 1, 3)) or contains_pattern(p, (3, 1, 4, 2)))


def modules_bruteforce(n: int, less: Callable[[int, int], bool]) -> list[frozenset[int]]:
    """Every nonempty module of a poset on ``{1..n}``, by checking all subsets."""
    up = [0] * (n + 1)
    down = [0] * (n + 1)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if less(a, b):
                up[a] |= 1 << b
                down[b] |= 1 << a
    out = []
    for mask in range(1, 1 << (n + 1)):
        if mask & 1:
            continue
        members = [x for x in range(1, n + 1) if mask >> x & 1]
        outside = ~mask
        first = members[0]
        u0, d0 = up[first] & outside, down[first] & outside
        if all(up[x] & outside == u0 and down[x] & outside == d0 for x in members[1:]):
            out.append(frozenset(members))
    return out


def strong_modules_bruteforce(n: int, less: Callable[[int, int], bool]) -> set[frozenset[int]]:
    """Modules that overlap no other module (nested or disjoint with all)."""
    mods = modules_bruteforce(n, less)
    return {
        T for T in mods
        if all(not (T & U) or T <= U or U <= T for U in mods)
    }


def maximal_proper_blocks(p: Permutation) -> list[tuple[int, int]]:
    """
    Inclusion-maximal blocks other than the whole, as inclusive 1-based
    intervals, from a full interval scan. They overlap unless the root is
    prime, in which case they partition the positions.
    """
    im = p.images
    n = len(im)
    blocks = [
        (i, j)
        for i in range(n)
        for j in range(i, n)
        if (i, j) != (0, n - 1) and max(im[i:j + 1]) - min(im[i:j + 1]) == j - i
    ]
    return sorted(
        (i + 1, j + 1)
        for i, j in blocks
        if not any(a <= i and j <= b and (a, b) != (i, j) for a, b in blocks)
    )

