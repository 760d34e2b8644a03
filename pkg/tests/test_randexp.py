import io
import math
import re
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from strategies import seeds
from weakbruhat.decomposition import intrinsic_width
from weakbruhat.oracles import is_separable_bruteforce
from weakbruhat.perms import all_permutations, lds_width
from weakbruhat.randexp import (
    CSV_COLUMNS, concentration_report, random_permutation,
    random_permutation_max_width, random_separable, runtime_scaling_experiment,
    substream, width_statistics, write_csv,
)


def test_random_permutation_size_one():
    assert random_permutation(1, substream(5)).images == (1,)


def test_random_permutation_deterministic():
    a = random_permutation(5, substream(42, 5, 0))
    b = random_permutation(5, substream(42, 5, 0))
    assert a == b
    assert random_permutation(50, substream(42, 50, 0)) != random_permutation(50, substream(42, 50, 1))


def test_random_permutation_uniform_s3():
    rng = substream(2024, 3)
    trials = 60_000
    counts = Counter(random_permutation(3, rng).images for _ in range(trials))
    assert len(counts) == 6
    sigma = math.sqrt(trials * (1 / 6) * (5 / 6))
    for c in counts.values():
        assert abs(c - trials / 6) <= 3 * sigma


def test_width_statistics_trivial():
    row = width_statistics(1, 10, seed=0)
    assert row.mean_lds == 1.0 and row.stddev == 0.0


def test_width_statistics_s2():
    row = width_statistics(2, 10_000, seed=3)
    # exact mean over S_2 is (1 + 2) / 2, standard deviation 1/2
    assert abs(row.mean_lds - 1.5) <= 3 * 0.5 / math.sqrt(10_000)


def test_mean_width_over_s3_by_enumeration():
    widths = [lds_width(p) for p in all_permutations(3)]
    assert sorted(widths) == [1, 2, 2, 2, 2, 3]
    assert sum(widths) / 6 == 2


def test_width_statistics_deterministic_and_parallel_safe():
    a = width_statistics(300, 40, seed=9)
    b = width_statistics(300, 40, seed=9, workers=2)
    assert a == b


def test_row_invariants():
    row = width_statistics(50, 30, seed=1)
    assert row.samples == 30
    assert 1 <= row.mean_lds <= 50
    assert row.mean_ratio == pytest.approx(row.mean_lds / math.sqrt(50))


@pytest.mark.parametrize("alpha", [0.3, 1 / 3, 0.51, 1.0])
def test_concentration_alpha_range(alpha):
    with pytest.raises(ValueError):
        concentration_report(10, 5, alpha, seed=0)


def test_concentration_ranges():
    row = concentration_report(100, 10_000, 0.5, seed=4)
    assert 0.0 <= row.tail_fraction <= 1.0
    assert row.alpha == 0.5
    one = concentration_report(100, 1, 0.5, seed=4)
    assert one.tail_fraction in (0.0, 1.0)


def test_scaling_empty():
    assert runtime_scaling_experiment([], 5, seed=1) == []


def test_scaling_small_n_matches_brute_force():
    (row,) = runtime_scaling_experiment([5], 30, seed=6)
    assert row.oracle_mismatches == 0
    assert row.budget_failures == 0
    assert row.mean_log2_states > 0


def test_scaling_records_budget_failures():
    (row,) = runtime_scaling_experiment([12], 5, seed=6, budget=2)
    assert row.budget_failures == 5
    assert row.mean_log2_states is None
    assert row.state_exponent is None


def test_csv_layout_and_determinism():
    def render(workers):
        rows = [width_statistics(n, 20, seed=8, workers=workers) for n in (10, 100)]
        rows.append(concentration_report(100, 20, 0.45, seed=8, workers=workers))
        buf = io.StringIO()
        write_csv(rows, buf)
        return buf.getvalue()

    text = render(1)
    assert text == render(2)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4
    fields = lines[3].split(",")
    assert fields[0] == "100" and fields[6] == "0.450000"
    assert not re.search(r"\de[+-]?\d", text)
    assert all(len(line.split(",")) == len(CSV_COLUMNS) for line in lines)


def test_scaling_csv_deterministic_except_timing():
    def cells(rows):
        buf = io.StringIO()
        write_csv(rows, buf)
        timing = CSV_COLUMNS.index("mean_runtime_s")
        return [line.split(",")[:timing] for line in buf.getvalue().splitlines()]

    assert cells(runtime_scaling_experiment([6, 9], 4, seed=2)) == cells(
        runtime_scaling_experiment([6, 9], 4, seed=2)
    )


@given(seeds, st.integers(1, 60))
def test_random_separable_is_separable(seed, n):
    p = random_separable(n, substream(seed))
    assert intrinsic_width(p) == 1
    if n <= 9:
        assert is_separable_bruteforce(p)


@given(seeds, st.integers(1, 40), st.integers(1, 6))
@settings(max_examples=40)
def test_max_width_sampler_respects_bound(seed, n, k):
    p = random_permutation_max_width(n, k, substream(seed))
    assert p.n == n
    assert lds_width(p) <= k


def test_max_width_sampler_uniform():
    # the 14 permutations of 4 with no decreasing run of length 3
    support = [p.images for p in all_permutations(4) if lds_width(p) <= 2]
    assert len(support) == 14
    rng = substream(77)
    trials = 14_000
    counts = Counter(random_permutation_max_width(4, 2, rng).images for _ in range(trials))
    assert set(counts) == set(support)
    expected = trials / 14
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    # 13 degrees of freedom; 99.9% quantile is about 34.5
    assert chi2 < 34.5


def test_max_width_sampler_rejects_zero():
    with pytest.raises(ValueError):
        random_permutation_max_width(5, 0, substream(1))
