import random

import pytest

from cyclopract import (
    CapacityError,
    coverage_check,
    degree_multiset,
    dp_coverage_oracle,
    dp_reachable_mask,
    is_p_practical,
    is_phi_practical,
    phi_degree_multiset,
    poly_factor_degrees_oracle,
)


def test_degree_multiset_tiny():
    ms = degree_multiset(2, 2)
    assert sorted(ms.entries) == [(1, 1), (1, 1)]
    ms = degree_multiset(5, 2)
    assert sorted(ms.entries) == [(1, 1), (4, 1)]


def test_degree_multiset_63():
    ms = degree_multiset(63, 2)
    assert ms.weighted_total() == 63
    assert ms.degree_counts() == poly_factor_degrees_oracle(63, 2)


def test_degree_multiset_invariants(order_tables):
    table = order_tables(2, 500)
    for n in range(1, 501):
        ms = degree_multiset(n, 2, table)
        assert ms.weighted_total() == n
        assert all(cnt >= 1 for _, cnt in ms.entries)
        assert (1, 1) in ms.entries  # the divisor d = 1
        assert len(ms.entries) >= 1


def test_degree_multiset_rejects_composite_p():
    with pytest.raises(ValueError):
        degree_multiset(6, 4)


def test_coverage_examples():
    assert coverage_check(degree_multiset(2, 2)).practical
    verdict = coverage_check(degree_multiset(5, 2))
    assert not verdict.practical
    assert verdict.witness_gap == 2


def test_phi_practical_examples():
    assert is_phi_practical(1).practical
    assert is_phi_practical(2).practical
    verdict = is_phi_practical(5)
    assert not verdict.practical and verdict.witness_gap == 2


def test_phi_practical_first_decade_against_dp():
    # frozen from the subset-sum oracle: 10 is excluded because {1,1,4,4}
    # cannot reach 3
    by_dp = [
        n for n in range(1, 11) if dp_coverage_oracle(phi_degree_multiset(n)).practical
    ]
    assert by_dp == [1, 2, 3, 4, 6, 8]
    by_greedy = [n for n in range(1, 11) if is_phi_practical(n).practical]
    assert by_greedy == by_dp


def test_p_practical_count_to_100():
    count = sum(1 for n in range(1, 101) if is_p_practical(n, 2).practical)
    assert count == 34


def test_n_equals_one_is_practical():
    for p in (2, 3, 5, 997):
        assert is_p_practical(1, p).practical
    assert is_phi_practical(1).practical


def test_smallest_p_practical_that_is_not_phi_practical(order_tables):
    table = order_tables(2, 100)
    found = None
    for n in range(1, 101):
        if is_p_practical(n, 2, table).practical and not is_phi_practical(n).practical:
            found = n
            break
    assert found == 14


def test_phi_implies_p_small(order_tables):
    tables = {p: order_tables(p, 2000) for p in (2, 3, 5, 7, 11)}
    for n in range(1, 2001):
        if is_phi_practical(n).practical:
            for p, table in tables.items():
                assert is_p_practical(n, p, table).practical, (n, p)


def test_dp_oracle_examples(order_tables):
    assert dp_coverage_oracle(phi_degree_multiset(1)).practical
    ms = degree_multiset(6, 5)
    assert dp_coverage_oracle(ms) == coverage_check(ms)


def test_dp_oracle_matches_greedy_on_random_n(order_tables):
    rng = random.Random(20260808)
    tables = {p: order_tables(p, 10**5) for p in (2, 3)}
    for _ in range(500):
        n = rng.randint(1, 10**5)
        p = rng.choice((2, 3))
        ms = degree_multiset(n, p, tables[p])
        assert coverage_check(ms) == dp_coverage_oracle(ms), (n, p)


def test_dp_oracle_cap():
    with pytest.raises(CapacityError):
        dp_coverage_oracle(phi_degree_multiset(10**5 + 1))


def test_witness_is_sound_on_samples(order_tables):
    rng = random.Random(5150)
    table = order_tables(2, 10**4)
    checked = 0
    while checked < 200:
        n = rng.randint(2, 10**4)
        ms = degree_multiset(n, 2, table)
        verdict = coverage_check(ms)
        if verdict.practical:
            continue
        checked += 1
        gap = verdict.witness_gap
        assert 2 <= gap <= n
        mask = dp_reachable_mask(ms)
        assert not (mask >> gap) & 1
        assert (mask >> (gap - 1)) & 1


def test_poly_oracle_tiny():
    assert poly_factor_degrees_oracle(1, 2) == {1: 1}
    assert poly_factor_degrees_oracle(2, 2) == {1: 2}
    assert poly_factor_degrees_oracle(3, 2) == {1: 1, 2: 1}
    assert poly_factor_degrees_oracle(5, 2) == {1: 1, 4: 1}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_poly_oracle_matches_degree_multiset(p, order_tables):
    table = order_tables(p, 64)
    for n in range(1, 65):
        ms = degree_multiset(n, p, table)
        assert ms.degree_counts() == poly_factor_degrees_oracle(n, p), n


def test_poly_oracle_caps():
    with pytest.raises(CapacityError):
        poly_factor_degrees_oracle(513, 2)
    with pytest.raises(CapacityError):
        poly_factor_degrees_oracle(8, 101)


def test_p_part_of_n_is_absorbed(order_tables):
    # multisets for n divisible by p still match the polynomial ground truth
    table = order_tables(3, 243)
    for n in (3, 9, 27, 81, 243, 6, 18, 54, 162, 45, 135):
        ms = degree_multiset(n, 3, table)
        assert ms.degree_counts() == poly_factor_degrees_oracle(n, 3), n
