import math
import random

import pytest

from cyclopract import (
    PMINUS_INFINITY,
    CapacityError,
    big_omega,
    build_spf_table,
    carmichael_lambda,
    divisor_phi_pairs,
    divisors_sorted,
    euler_phi,
    factorize,
    factorize_trial,
    is_prime,
    largest_prime_factor,
    smallest_prime_factor,
    smooth_part,
    tau,
)
from cyclopract.arith import MEM_BUDGET_ENV


@pytest.fixture(scope="module")
def spf10m():
    return build_spf_table(10**7)


def test_spf_small_tables():
    t = build_spf_table(10)
    assert list(t.spf[2:]) == [2, 3, 2, 5, 2, 7, 2, 3, 2]
    t2 = build_spf_table(2)
    assert list(t2.spf[2:]) == [2]


def test_spf_rejects_bad_limits():
    with pytest.raises(ValueError):
        build_spf_table(1)


def test_spf_spot_check_against_trial_division(spf10m):
    rng = random.Random(1234)
    for _ in range(10**4):
        k = rng.randint(2, 10**7)
        p = spf10m.spf[k]
        assert k % p == 0
        assert p == factorize_trial(k).factors[0][0]


def test_factorize_examples(spf10m):
    assert factorize(1, spf10m).factors == ()
    assert factorize(12, spf10m).factors == ((2, 2), (3, 1))
    assert factorize(9999991, spf10m) == factorize_trial(9999991)


def test_factorize_random_agrees_with_trial_division(spf10m):
    rng = random.Random(99)
    for _ in range(10**4):
        n = rng.randint(1, 10**7)
        assert factorize(n, spf10m) == factorize_trial(n)


def test_factorize_out_of_range():
    t = build_spf_table(100)
    with pytest.raises(ValueError):
        factorize(101, t)
    with pytest.raises(ValueError):
        factorize(0, t)


def test_factorization_invariants(spf10k):
    for n in range(1, 2001):
        f = factorize(n, spf10k)
        primes = [q for q, _ in f.factors]
        assert primes == sorted(set(primes))
        assert math.prod(q**e for q, e in f.factors) == n
        assert (f.factors == ()) == (n == 1)


def test_divisors_sorted_examples():
    assert divisors_sorted(factorize_trial(6)) == [1, 2, 3, 6]
    assert divisors_sorted(factorize_trial(1)) == [1]
    divs = divisors_sorted(factorize_trial(720720))
    assert len(divs) == 240
    assert divs == [d for d in range(1, 720721) if 720720 % d == 0]


def test_divisors_pairing_and_order(spf10k):
    for n in range(1, 500):
        divs = divisors_sorted(factorize(n, spf10k))
        assert divs == sorted(divs)
        assert len(set(divs)) == len(divs)
        assert divs[0] == 1 and divs[-1] == n
        assert all(n // d in divs for d in divs)


def test_divisor_cap():
    f = factorize_trial(720720)
    with pytest.raises(CapacityError):
        divisors_sorted(f, max_divisors=100)
    with pytest.raises(CapacityError):
        divisor_phi_pairs(f, max_divisors=100)


def test_euler_phi_examples():
    assert euler_phi(factorize_trial(1)) == 1
    assert euler_phi(factorize_trial(12)) == 4


def test_phi_divisor_sum_identity_exhaustive(spf10k):
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf10k)
        assert sum(ph for _, ph in divisor_phi_pairs(f)) == n


def test_carmichael_examples():
    assert carmichael_lambda(factorize_trial(1)) == 1
    assert carmichael_lambda(factorize_trial(2)) == 1
    assert carmichael_lambda(factorize_trial(4)) == 2
    assert carmichael_lambda(factorize_trial(8)) == 2
    assert carmichael_lambda(factorize_trial(15)) == 4


def test_lambda_divides_phi_exhaustive(spf10k):
    for n in range(1, 10**4 + 1):
        f = factorize(n, spf10k)
        assert euler_phi(f) % carmichael_lambda(f) == 0


def test_lambda_lcm_on_coprime_pairs(spf10k):
    rng = random.Random(7)
    hits = 0
    while hits < 500:
        a = rng.randint(1, 3000)
        b = rng.randint(1, 3000)
        if math.gcd(a, b) != 1:
            continue
        hits += 1
        lam_ab = carmichael_lambda(factorize_trial(a * b))
        lam_a = carmichael_lambda(factorize(a, spf10k))
        lam_b = carmichael_lambda(factorize(b, spf10k))
        assert lam_ab == math.lcm(lam_a, lam_b)


def test_basic_functions_at_one():
    f = factorize_trial(1)
    assert tau(f) == 1
    assert big_omega(f) == 0
    assert largest_prime_factor(f) == 1
    assert smallest_prime_factor(f) == PMINUS_INFINITY


def test_basic_functions_examples():
    f12 = factorize_trial(12)
    assert (tau(f12), big_omega(f12)) == (6, 3)
    assert (largest_prime_factor(f12), smallest_prime_factor(f12)) == (3, 2)
    f1024 = factorize_trial(2**10)
    assert (tau(f1024), big_omega(f1024)) == (11, 10)
    assert largest_prime_factor(f1024) == smallest_prime_factor(f1024) == 2


def test_pminus_sentinel_orders_correctly():
    # the sentinel must exceed every real smallest factor in thresholds
    assert PMINUS_INFINITY > 10**7
    assert smallest_prime_factor(factorize_trial(1)) > 2


def test_smooth_part_examples():
    assert smooth_part(12, 3) == 12
    assert smooth_part(12, 2) == 4
    assert smooth_part(1, 2) == 1


def test_smooth_part_complement(spf10k):
    for m in range(1, 3000):
        for bound in (2, 3, 10):
            u = smooth_part(m, bound, spf10k)
            rough = m // u
            assert u * rough == m
            assert smallest_prime_factor(factorize_trial(rough)) > bound


def test_carmichael_overflow_guard():
    # lcm beyond 64 bits must refuse rather than hand a bad value to tables
    from cyclopract import Factorization

    p1 = (1 << 41) - 31  # prime
    p2 = (1 << 42) - 11  # prime
    assert is_prime(p1) and is_prime(p2)
    f = Factorization(p1 * p2, ((p1, 1), (p2, 1)))
    with pytest.raises(OverflowError):
        carmichael_lambda(f)


def test_is_prime_against_trial_division():
    for n in range(2000):
        naive = n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))
        assert is_prime(n) == naive


def test_memory_budget_enforced(monkeypatch):
    monkeypatch.setenv(MEM_BUDGET_ENV, "1000")
    with pytest.raises(CapacityError):
        build_spf_table(10**6)
    monkeypatch.setenv(MEM_BUDGET_ENV, "nonsense")
    with pytest.raises(ValueError):
        build_spf_table(10**6)
