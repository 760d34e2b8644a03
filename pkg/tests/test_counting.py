import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from strategies import permutations, seeds
from weakbruhat.counting import (
    NotAnIntervalError, StateBudgetExceeded, Strategy, choose_strategy,
    count_from_identity, count_interval, count_le_decomposition,
    count_le_weighted_quotient, count_le_width_dp, multinomial, width_dp,
)
from weakbruhat.decomposition import inflate, is_simple
from weakbruhat.oracles import interval_bfs, is_separable_bruteforce, up_closure
from weakbruhat.perms import (
    Permutation, all_permutations, identity, increasing_chain_cover,
    parse_permutation, reversal,
)
from weakbruhat.posets import count_le_bruteforce, phi
from weakbruhat.randexp import random_separable

NESTED = "231489765"
# a simple permutation of size 12 and width 4 (found by random search)
SIMPLE12 = "7,12,2,5,8,11,1,3,6,10,4,9"


def P(text):
    return parse_permutation(text)


def test_width_dp_examples():
    assert count_le_width_dp(P("24135")) == 5
    assert count_le_width_dp(P("321")) == 6
    assert count_le_width_dp(identity(30)) == 1


@given(permutations(1, 9))
def test_dp_table_invariants(p):
    result = width_dp(p, keep_table=True)
    lengths = [len(c) for c in increasing_chain_cover(p).chains]
    table = result.table
    assert table[(0,) * len(lengths)] == 1
    assert table[tuple(lengths)] == result.count
    assert len(table) == result.states <= math.prod(m + 1 for m in lengths)
    # every stored state is a downset of phi(p)
    chains = increasing_chain_cover(p).chains
    Q = phi(p)
    for state in table:
        taken = {p(chains[c][t]) for c in range(len(chains)) for t in range(state[c])}
        assert all(a in taken for b in taken for a in range(1, p.n + 1) if Q.less(a, b))


def test_state_count_is_number_of_downsets():
    # phi(reversal) is an antichain: every subset is a downset
    assert width_dp(reversal(8)).states == 2**8
    assert width_dp(identity(8)).states == 9


def test_width_dp_budget():
    with pytest.raises(StateBudgetExceeded):
        width_dp(reversal(10), budget=100)
    assert width_dp(reversal(10), budget=1024).count == math.factorial(10)


def test_weighted_quotient_examples():
    assert count_le_weighted_quotient(P("21"), [2, 2]) == 6
    assert count_le_weighted_quotient(P("2413"), [1, 1, 1, 1]) == 5
    assert count_le_weighted_quotient(identity(5), [3, 1, 4, 1, 5]) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_weighted_quotient_all_ones_matches_dp(n):
    for s in all_permutations(n):
        if is_simple(s):
            assert count_le_weighted_quotient(s, [1] * n) == count_le_width_dp(s)


@given(st.sampled_from(["2413", "3142", "24153", "41352", "246135"]), st.data())
def test_weighted_quotient_matches_brute(skeleton, data):
    s = P(skeleton)
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=s.n, max_size=s.n))
    chained = inflate(s, [identity(m) for m in sizes])
    if chained.n <= 14:
        assert count_le_weighted_quotient(s, sizes) == count_le_bruteforce(phi(chained))


def test_weighted_quotient_rejects_bad_sizes():
    with pytest.raises(ValueError):
        count_le_weighted_quotient(P("2413"), [1, 1])
    with pytest.raises(ValueError):
        count_le_weighted_quotient(P("2413"), [1, 0, 1, 1])


def test_decomposition_examples():
    assert count_le_decomposition(P("3412")) == 6
    assert count_le_decomposition(P(NESTED)) == count_le_bruteforce(phi(P(NESTED))) == 180
    assert count_le_decomposition(P("24135")) == 5


def test_multinomial_examples():
    assert multinomial([2, 2]) == 6
    assert multinomial([1, 1, 1]) == 6
    assert multinomial([7]) == 1
    assert multinomial([]) == 1


@given(st.lists(st.integers(1, 30), min_size=1, max_size=6))
def test_multinomial_factorial_formula(sizes):
    expected = math.factorial(sum(sizes))
    for s in sizes:
        expected //= math.factorial(s)
    assert multinomial(sizes) == expected


def test_count_from_identity_examples():
    for strategy in Strategy:
        assert count_from_identity(P("312"), strategy) == 3
        assert count_from_identity(P("321"), strategy) == 6
        assert count_from_identity(P("24135"), strategy) == 5


def test_count_interval_examples():
    assert count_interval(P("132"), P("321")) == 3
    q = P("24135")
    assert count_interval(q, q) == 1
    assert count_interval(identity(3), P("312")) == 3


def test_count_interval_rejects_incomparable():
    with pytest.raises(NotAnIntervalError):
        count_interval(P("213"), P("132"))


def test_choose_strategy():
    rng = np.random.default_rng(0)
    for n in range(1, 11):
        p = Permutation(tuple((rng.permutation(n) + 1).tolist()))
        assert choose_strategy(p) is Strategy.BRUTE
    sep = random_separable(60, np.random.default_rng(3))
    assert choose_strategy(sep) is Strategy.DECOMPOSITION
    simple = P(SIMPLE12)
    assert is_simple(simple)
    assert choose_strategy(simple) is Strategy.WIDTH_DP


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_equal_interval_sizes(n):
    for p in all_permutations(n):
        assert count_from_identity(p) == len(interval_bfs(identity(n), p))


@pytest.mark.parametrize("n", range(1, 5))
def test_interval_reduction_exhaustive(n):
    for p in all_permutations(n):
        for q in up_closure(p):
            assert count_interval(p, q) == len(interval_bfs(p, q))


@given(permutations(1, 9))
def test_bounds(p):
    c = count_le_width_dp(p)
    assert 1 <= c <= math.factorial(p.n)


@pytest.mark.parametrize("n", [1, 5, 10, 12])
def test_reversal_gives_factorial(n):
    assert count_le_width_dp(reversal(n)) == math.factorial(n)
    assert count_from_identity(reversal(n)) == math.factorial(n)


def test_reversal_beyond_64_bits():
    assert count_le_decomposition(reversal(25)) == math.factorial(25) > 2**64


@pytest.mark.parametrize("n", range(1, 7))
def test_strategies_agree_exhaustive(n):
    for p in all_permutations(n):
        brute = count_le_bruteforce(phi(p))
        assert count_le_width_dp(p) == brute
        assert count_le_decomposition(p) == brute


@given(permutations(8, 10))
def test_strategies_agree_random(p):
    brute = count_le_bruteforce(phi(p))
    assert count_le_width_dp(p) == brute
    assert count_le_decomposition(p) == brute


@given(seeds, st.integers(1, 300))
def test_separable_inputs(seed, n):
    p = random_separable(n, np.random.default_rng(seed))
    got = count_from_identity(p, Strategy.DECOMPOSITION)
    assert 1 <= got <= math.factorial(n)
    if n <= 10:
        assert is_separable_bruteforce(p)
        assert got == count_le_bruteforce(phi(p))


def test_planted_structure_large():
    # 2413 inflated by reversals and an identity block: DP runs only on the skeleton
    parts = [reversal(30), identity(40), reversal(5), identity(25)]
    p = inflate(P("2413"), parts)
    expected = (
        count_le_weighted_quotient(P("2413"), [30, 40, 5, 25])
        * math.factorial(30) * math.factorial(5)
    )
    assert count_le_decomposition(p) == expected
    assert count_from_identity(p) == expected


@pytest.mark.parametrize("budget", [1, 10])
def test_decomposition_propagates_budget(budget):
    with pytest.raises(StateBudgetExceeded):
        count_le_decomposition(P(SIMPLE12), budget=budget)
