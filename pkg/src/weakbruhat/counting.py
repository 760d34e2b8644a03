"""
Exact linear-extension counts of ``phi(p)``, which equal ``|[id, p]|`` in
the weak order, and interval sizes ``|[p, q]| = |[id, p^-1 q]|``.

Three strategies are available:

* ``BRUTE`` memoized enumeration over downsets (n <= 14),
* ``WIDTH_DP`` a dynamic program over downsets encoded as how far each chain
  of a minimum chain cover has been consumed; at most prod(|C_i| + 1) states,
* ``DECOMPOSITION`` recursion over the block decomposition; only the
  indecomposable nodes need the width DP, on their (small) skeletons.
"""

from __future__ import annotations

import enum
import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

from .decomposition import (
    DecompositionTree, NodeKind, block_decompose, inflate, intrinsic_width,
)
from .perms import (
    Permutation, PermutationError, compose, identity, increasing_chain_cover,
    inverse, lds_width, weak_leq,
)
from .posets import count_le_bruteforce, phi

__all__ = [
    "DEFAULT_STATE_BUDGET", "BRUTE_MAX_N", "Strategy", "StateBudgetExceeded",
    "NotAnIntervalError", "DPResult", "width_dp", "count_le_width_dp",
    "count_le_weighted_quotient", "count_le_decomposition", "multinomial",
    "choose_strategy", "count_from_identity", "count_interval",
]

DEFAULT_STATE_BUDGET = 10**8
BRUTE_MAX_N = 10


class Strategy(enum.Enum):
    AUTO = "auto"
    BRUTE = "brute"
    WIDTH_DP = "width-dp"
    DECOMPOSITION = "decomposition"


class StateBudgetExceeded(RuntimeError):
    """The width DP would need more states than it was allowed."""


class NotAnIntervalError(ValueError):
    """``[p, q]`` was requested but p is not below q in the weak order."""


@dataclass
class DPResult:
    count: int
    states: int
    chain_lengths: tuple[int, ...]
    table: dict[tuple[int, ...], int] | None = None


def _requirements(p: Permutation) -> tuple[list[int], list[list[list[tuple[int, int]]]]]:
    """
    Chain lengths, and for element t of chain c the list of ``(d, r)`` with
    r > 0: at least r elements of chain d must precede it.

    Along a chain positions and values both increase, so the elements of
    chain d below a point form a prefix of d.
    """
    cover = increasing_chain_cover(p)
    im = p.images
    pos_lists = [list(chain) for chain in cover.chains]
    val_lists = [[im[i - 1] for i in chain] for chain in cover.chains]
    k = len(pos_lists)
    needs: list[list[list[tuple[int, int]]]] = []
    for c in range(k):
        per_elem = []
        for i, v in zip(pos_lists[c], val_lists[c]):
            req = []
            for d in range(k):
                if d == c:
                    continue
                r = min(bisect_left(pos_lists[d], i), bisect_left(val_lists[d], v))
                if r:
                    req.append((d, r))
            per_elem.append(req)
        needs.append(per_elem)
    return [len(chain) for chain in pos_lists], needs


def width_dp(
    p: Permutation,
    budget: int = DEFAULT_STATE_BUDGET,
    keep_table: bool = False,
) -> DPResult:
    """
    Count linear extensions of ``phi(p)`` layer by layer in the total number
    of consumed elements; only two layers are live unless ``keep_table``.
    """
    lengths, needs = _requirements(p)
    k = len(lengths)
    start = (0,) * k
    layer: dict[tuple[int, ...], int] = {start: 1}
    table = {start: 1} if keep_table else None
    states = 1
    for _ in range(p.n):
        nxt: dict[tuple[int, ...], int] = {}
        for state, ways in layer.items():
            for c in range(k):
                t = state[c]
                if t == lengths[c]:
                    continue
                if all(state[d] >= r for d, r in needs[c][t]):
                    succ = state[:c] + (t + 1,) + state[c + 1:]
                    nxt[succ] = nxt.get(succ, 0) + ways
        states += len(nxt)
        if states > budget:
            raise StateBudgetExceeded(
                f"width DP exceeded its budget of {budget} states (width {k}, n {p.n})"
            )
        if table is not None:
            table.update(nxt)
        layer = nxt
    (count,) = layer.values()
    return DPResult(count, states, tuple(lengths), table)


def count_le_width_dp(p: Permutation, budget: int = DEFAULT_STATE_BUDGET) -> int:
    return width_dp(p, budget).count


def count_le_weighted_quotient(
    skeleton: Permutation,
    module_sizes: Sequence[int],
    budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    """
    Linear extensions of ``phi(skeleton)`` with element j blown up into a
    chain of ``module_sizes[j]`` elements. Chain inflation keeps both the
    width and dimension two, so the width DP applies directly.
    """
    if len(module_sizes) != skeleton.n:
        raise PermutationError(
            f"skeleton of size {skeleton.n} needs {skeleton.n} module sizes"
        )
    if any(m < 1 for m in module_sizes):
        raise PermutationError("module sizes must be positive")
    if skeleton.is_increasing():
        return 1
    inflated = inflate(skeleton, [identity(m) for m in module_sizes])
    return width_dp(inflated, budget).count


def multinomial(sizes: Iterable[int]) -> int:
    """``(sum sizes)! / prod(size!)`` as a product of binomials."""
    result = 1
    total = 0
    for s in sizes:
        total += s
        result *= math.comb(total, s)
    return result


def _count_tree(node: DecompositionTree, budget: int) -> int:
    if node.kind is NodeKind.LEAF:
        return 1
    inner = 1
    for child in node.children:
        inner *= _count_tree(child, budget)
    spans = [child.span for child in node.children]
    if node.kind is NodeKind.SERIES:
        return inner
    if node.kind is NodeKind.PARALLEL:
        return multinomial(spans) * inner
    return count_le_weighted_quotient(node.skeleton, spans, budget) * inner


def count_le_decomposition(
    p: Permutation | DecompositionTree,
    budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    tree = p if isinstance(p, DecompositionTree) else block_decompose(p)
    return _count_tree(tree, budget)


def choose_strategy(p: Permutation) -> Strategy:
    """Brute force for tiny inputs, else whichever parameter is smaller."""
    if p.n <= BRUTE_MAX_N:
        return Strategy.BRUTE
    if intrinsic_width(p) < lds_width(p):
        return Strategy.DECOMPOSITION
    return Strategy.WIDTH_DP


def count_from_identity(
    p: Permutation,
    strategy: Strategy = Strategy.AUTO,
    budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    """``|[id, p]|``, equal to the number of linear extensions of ``phi(p)``."""
    if strategy is Strategy.AUTO:
        strategy = choose_strategy(p)
    if strategy is Strategy.BRUTE:
        return count_le_bruteforce(phi(p))
    if strategy is Strategy.WIDTH_DP:
        return count_le_width_dp(p, budget)
    if strategy is Strategy.DECOMPOSITION:
        return count_le_decomposition(p, budget)
    raise ValueError(f"unknown strategy {strategy!r}")


def count_interval(
    p: Permutation,
    q: Permutation,
    strategy: Strategy = Strategy.AUTO,
    budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    """``|[p, q]|`` via ``|[id, p^-1 q]|``."""
    if not weak_leq(p, q):
        raise NotAnIntervalError(f"{p} is not below {q} in the weak order")
    return count_from_identity(compose(inverse(p), q), strategy, budget)
