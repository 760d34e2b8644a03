"""
Random-permutation experiments: width statistics, concentration of the
width around its mean, and the growth of the width-DP state space.

Every sample draws from its own PCG64 stream seeded by ``(seed, n, index)``,
so results do not depend on how samples are scheduled across workers.
"""

from __future__ import annotations

import csv
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np

from .counting import BRUTE_MAX_N, DEFAULT_STATE_BUDGET, StateBudgetExceeded, width_dp
from .perms import Permutation, lds_width
from .posets import count_le_bruteforce, phi

__all__ = [
    "CSV_COLUMNS", "ExperimentRow", "substream", "random_permutation",
    "random_separable", "random_permutation_max_width", "width_statistics",
    "concentration_report", "runtime_scaling_experiment", "write_csv",
]

CSV_COLUMNS = (
    "n", "samples", "seed", "mean_lds", "mean_ratio", "stddev", "alpha",
    "tail_fraction", "mean_log2_states", "mean_runtime_s",
)


def substream(seed: int, *key: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *key])))


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform over S_n (numpy's Fisher-Yates shuffle)."""
    return Permutation(tuple((rng.permutation(n) + 1).tolist()))


def random_separable(n: int, rng: np.random.Generator) -> Permutation:
    """
    A separable permutation from a random binary tree of direct and skew
    sums. Not uniform over separable permutations.
    """
    def build(m: int) -> list[int]:
        if m == 1:
            return [1]
        k = int(rng.integers(1, m))
        left, right = build(k), build(m - k)
        if rng.integers(2):
            return left + [v + k for v in right]
        return [v + (m - k) for v in left] + right

    return Permutation(tuple(build(n)))


# -- conditional sampler: uniform over {p in S_n : lds_width(p) <= k} --------
#
# RSK is a bijection between S_n and pairs of standard Young tableaux of the
# same shape, and the number of rows of the shape is the width. Drawing the
# shape with weight f_shape^2 and then two uniform tableaux gives the
# conditional distribution exactly.


def _partitions(n: int, max_parts: int, max_part: int | None = None) -> Iterable[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first, *rest)


def _conjugate(shape: Sequence[int]) -> list[int]:
    return [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []


def _syt_count(shape: Sequence[int]) -> int:
    cols = _conjugate(shape)
    hooks = 1
    for r, row in enumerate(shape):
        for c in range(row):
            hooks *= (row - c - 1) + (cols[c] - r - 1) + 1
    return math.factorial(sum(shape)) // hooks


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in ``[0, bound)`` for arbitrarily large bound."""
    bits = bound.bit_length()
    words = (bits + 31) // 32
    while True:
        x = 0
        for w in rng.integers(0, 1 << 32, size=words, dtype=np.uint64).tolist():
            x = (x << 32) | w
        x >>= words * 32 - bits
        if x < bound:
            return x


def _hook_walk_tableau(shape: Sequence[int], rng: np.random.Generator) -> list[list[int]]:
    """Uniform standard Young tableau of the given shape (hook walk)."""
    rows = list(shape)
    tableau = [[0] * r for r in shape]
    for label in range(sum(shape), 0, -1):
        cells = [(r, c) for r, length in enumerate(rows) for c in range(length)]
        r, c = cells[int(rng.integers(len(cells)))]
        while True:
            arm = rows[r] - c - 1
            leg = sum(1 for rr in range(r + 1, len(rows)) if rows[rr] > c)
            if arm == 0 and leg == 0:
                break
            step = int(rng.integers(arm + leg))
            if step < arm:
                c += step + 1
            else:
                r += step - arm + 1
        tableau[r][c] = label
        rows[r] -= 1
    return tableau


def _inverse_rsk(P: list[list[int]], Q: list[list[int]]) -> list[int]:
    P = [row[:] for row in P]
    Q = [row[:] for row in Q]
    n = sum(len(row) for row in P)
    word = [0] * n
    for i in range(n, 0, -1):
        r = next(rr for rr, row in enumerate(Q) if row and row[-1] == i)
        Q[r].pop()
        x = P[r].pop()
        for rr in range(r - 1, -1, -1):
            row = P[rr]
            # largest entry below x is bumped out
            j = max(jj for jj, y in enumerate(row) if y < x)
            row[j], x = x, row[j]
        word[i - 1] = x
        while Q and not Q[-1]:
            Q.pop()
            P.pop()
    return word


def random_permutation_max_width(n: int, k: int, rng: np.random.Generator) -> Permutation:
    """Uniform over permutations of n whose longest decreasing run is <= k."""
    if k < 1:
        raise ValueError("width bound must be positive")
    shapes = list(_partitions(n, k))
    weights = [_syt_count(s) ** 2 for s in shapes]
    pick = _randbelow(rng, sum(weights))
    for shape, w in zip(shapes, weights):
        if pick < w:
            break
        pick -= w
    P = _hook_walk_tableau(shape, rng)
    Q = _hook_walk_tableau(shape, rng)
    return Permutation(tuple(_inverse_rsk(P, Q)))


@dataclass
class ExperimentRow:
    n: int
    samples: int
    seed: int
    mean_lds: float
    mean_ratio: float
    stddev: float
    alpha: float | None = None
    tail_fraction: float | None = None
    mean_log2_states: float | None = None
    mean_runtime_s: float | None = None
    budget_failures: int = 0
    oracle_mismatches: int = 0

    @property
    def state_exponent(self) -> float | None:
        """``mean log2(states) / (sqrt(n) log2 n)``."""
        if self.mean_log2_states is None or self.n < 2:
            return None
        return self.mean_log2_states / (math.sqrt(self.n) * math.log2(self.n))

    def csv_fields(self) -> list[str]:
        def fmt(x):
            if x is None:
                return ""
            if isinstance(x, int):
                return str(x)
            return f"{x:.6f}"

        return [fmt(getattr(self, name)) for name in CSV_COLUMNS]


def _sample_width(args: tuple[int, int, int]) -> int:
    seed, n, index = args
    rng = substream(seed, n, index)
    return lds_width((rng.permutation(n) + 1).tolist())


def _sample_widths(n: int, samples: int, seed: int, workers: int) -> list[int]:
    jobs = [(seed, n, i) for i in range(samples)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_sample_width, jobs, chunksize=max(1, samples // (4 * workers))))
    return [_sample_width(job) for job in jobs]


def _summary(n: int, samples: int, seed: int, widths: list[int]) -> ExperimentRow:
    mean = statistics.fmean(widths)
    sd = statistics.stdev(widths) if len(widths) > 1 else 0.0
    return ExperimentRow(n, samples, seed, mean, mean / math.sqrt(n), sd)


def width_statistics(n: int, samples: int, seed: int, workers: int = 1) -> ExperimentRow:
    if samples < 1:
        raise ValueError("samples must be at least 1")
    return _summary(n, samples, seed, _sample_widths(n, samples, seed, workers))


def concentration_report(
    n: int, samples: int, alpha: float, seed: int, workers: int = 1,
) -> ExperimentRow:
    """Fraction of samples whose width is at least ``n**alpha`` from the sample mean."""
    if not 1 / 3 < alpha <= 1 / 2:
        raise ValueError(f"alpha must lie in (1/3, 1/2], got {alpha}")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    widths = _sample_widths(n, samples, seed, workers)
    row = _summary(n, samples, seed, widths)
    threshold = n ** alpha
    row.alpha = alpha
    row.tail_fraction = sum(abs(w - row.mean_lds) >= threshold for w in widths) / samples
    return row


def runtime_scaling_experiment(
    n_values: Iterable[int],
    samples_per_n: int,
    seed: int,
    budget: int = DEFAULT_STATE_BUDGET,
) -> list[ExperimentRow]:
    """
    Run the width DP on random permutations and record its state count and
    wall time. Samples that exhaust the budget are counted, not fatal; for
    n small enough the DP result is checked against brute force.
    """
    rows = []
    for n in n_values:
        widths, log_states, runtimes = [], [], []
        failures = mismatches = 0
        for i in range(samples_per_n):
            p = random_permutation(n, substream(seed, n, i))
            widths.append(lds_width(p))
            start = time.perf_counter()
            try:
                result = width_dp(p, budget)
            except StateBudgetExceeded:
                failures += 1
                continue
            runtimes.append(time.perf_counter() - start)
            log_states.append(math.log2(result.states))
            if n <= BRUTE_MAX_N and result.count != count_le_bruteforce(phi(p)):
                mismatches += 1
        row = _summary(n, samples_per_n, seed, widths)
        row.mean_log2_states = statistics.fmean(log_states) if log_states else None
        row.mean_runtime_s = statistics.fmean(runtimes) if runtimes else None
        row.budget_failures = failures
        row.oracle_mismatches = mismatches
        rows.append(row)
    return rows


def write_csv(rows: Iterable[ExperimentRow], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.csv_fields())
