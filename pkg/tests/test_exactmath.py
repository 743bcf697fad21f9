import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from t0enum.exactmath import (
    bell,
    binom,
    block_union_ksets,
    block_union_upto,
    falling,
    num_blocks,
    partition_types,
    partitions_with_type,
    permutations_with_cycle_type,
    selections,
    sigma,
    stirling1,
    stirling2,
)

from conftest import brute_set_partitions, type_of_partition


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(5, 0) == 1
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0


def test_falling_examples():
    assert falling(4, 2) == 12
    assert falling(7, 0) == 1
    assert falling(2, 3) == 0


def test_falling_negative_argument_is_polynomial():
    # [-1]_2 = (-1)(-2); transform sums may pass below zero formally
    assert falling(-1, 2) == 2
    assert falling(-2, 3) == -24


def test_stirling1_examples():
    assert stirling1(3, 2) == -3
    assert all(stirling1(n, n) == 1 for n in range(10))
    assert stirling1(4, 1) == -6
    assert stirling1(0, 0) == 1
    assert stirling1(3, 5) == 0


def test_stirling1_is_falling_factorial_expansion():
    # [x]_n = sum_i s(n,i) x^i at several integer points
    for n in range(7):
        for x in range(-3, 6):
            assert falling(x, n) == sum(stirling1(n, i) * x**i for i in range(n + 1))


def test_stirling2_examples():
    assert stirling2(3, 2) == 3
    assert all(stirling2(n, 1) == 1 for n in range(1, 10))
    assert stirling2(4, 2) == 7


def test_stirling_orthogonality_up_to_30():
    for n in range(31):
        for m in range(31):
            total = sum(stirling1(n, k) * stirling2(k, m) for k in range(max(n, m) + 1))
            assert total == (1 if n == m else 0)


def test_partition_types_counts_and_order():
    types4 = list(partition_types(4))
    assert len(types4) == 5
    assert types4 == sorted(types4)
    assert list(partition_types(1)) == [(1,)]
    types3 = list(partition_types(3))
    assert (3, 0, 0) in types3 and (1, 1, 0) in types3 and (0, 0, 1) in types3
    for n in range(1, 9):
        for tau in partition_types(n):
            assert len(tau) == n
            assert sigma(tau) == n
            assert 1 <= num_blocks(tau) <= n


def test_partitions_with_type_against_brute_force():
    # derived: enumerate all partitions of a 3-set and bucket by type
    parts = brute_set_partitions([0, 1, 2])
    assert len(parts) == 5
    by_type = {}
    for blocks in parts:
        tau = type_of_partition(blocks, 3)
        by_type[tau] = by_type.get(tau, 0) + 1
    assert partitions_with_type((1, 1, 0)) == by_type[(1, 1, 0)] == 3
    assert partitions_with_type((0, 0, 1)) == 1
    assert partitions_with_type((3, 0, 0)) == 1


def test_type_counts_sum_to_bell():
    for n in range(1, 13):
        assert sum(partitions_with_type(t) for t in partition_types(n)) == bell(n)


def test_cycle_type_weights():
    assert permutations_with_cycle_type((0, 0, 1)) == 2
    assert permutations_with_cycle_type((1, 1, 0)) == 3
    assert permutations_with_cycle_type((3, 0, 0)) == 1


def test_signed_cycle_type_sum_is_stirling1():
    for n in range(1, 13):
        for k in range(1, n + 1):
            total = sum(
                (-1) ** (n - k) * permutations_with_cycle_type(t)
                for t in partition_types(n)
                if num_blocks(t) == k
            )
            assert total == stirling1(n, k)


def _brute_block_unions(blocks, universe_size):
    from itertools import combinations

    seen = set()
    for r in range(1, len(blocks) + 1):
        for combo in combinations(blocks, r):
            union = frozenset(x for b in combo for x in b)
            seen.add(union)
    return seen


def test_block_union_ksets_derived():
    # partition {a},{b,c}: the only block-union 2-set is {b,c}
    unions = _brute_block_unions([[0], [1, 2]], 3)
    assert block_union_ksets((1, 1, 0), 2) == sum(1 for u in unions if len(u) == 2) == 1
    assert block_union_ksets((4, 0, 0, 0), 2) == binom(4, 2)
    assert block_union_ksets((0, 0, 0, 1), 2) == 0
    assert block_union_ksets((0, 0, 0, 1), 4) == 1


def test_block_union_upto_examples():
    assert block_union_upto((1, 1, 0), 2) == 2
    n = 5
    assert block_union_upto(tuple([n] + [0] * (n - 1)), n) == 2**n - 1
    for tau in partition_types(6):
        assert block_union_upto(tau, 6) == 2 ** num_blocks(tau) - 1


def test_block_unions_against_brute_force_small():
    from itertools import combinations

    # fixed partitions of a 5-set for a second route
    cases = [
        ([[0], [1], [2, 3, 4]], (2, 0, 1, 0, 0)),
        ([[0, 1], [2, 3], [4]], (1, 2, 0, 0, 0)),
    ]
    for blocks, tau in cases:
        unions = _brute_block_unions(blocks, 5)
        for k in range(1, 6):
            assert block_union_ksets(tau, k) == sum(1 for u in unions if len(u) == k)
            assert block_union_upto(tau, k) == sum(1 for u in unions if len(u) <= k)


def test_selections_examples():
    assert selections(2, 3, 2) == 9
    assert selections(1, 4, 2) == 12
    assert selections(4, 3, 2) == 6
    assert selections(3, 4, 2) == 6
    assert selections(4, 0, 0) == 1


@given(st.integers(min_value=0, max_value=30), st.integers(min_value=0, max_value=8))
def test_selection_mode_inequalities(i, j):
    assert selections(1, i, j) <= selections(2, i, j)
    assert selections(3, i, j) <= selections(4, i, j)


@settings(max_examples=50)
@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=6))
def test_selections_ordered_unordered_factor(i, j):
    assert selections(1, i, j) == selections(3, i, j) * math.factorial(j)
