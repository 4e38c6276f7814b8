"""Smallest-prime-factor sieve and the elementary arithmetic functions.

Everything downstream (order sieves, practicality checks, counters) factors
integers through one shared ``SpfTable``, which makes factorization O(log n)
per value.  The table is immutable after construction and safe to share
between worker processes.
"""
from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from math import isqrt, lcm

import numpy as np

from .errors import CapacityError

#: Order-compatible stand-in for "smallest prime factor of 1": larger than
#: any 64-bit prime, so threshold predicates like P^-(n) > B work unchanged.
PMINUS_INFINITY = (1 << 64) - 1

MEM_BUDGET_ENV = "CYCLO_MEM_BUDGET_BYTES"
DEFAULT_MEM_BUDGET = 4 << 30

_U64_LIMIT = 1 << 64

if array("I").itemsize != 4:  # pragma: no cover - true on all mainstream ABIs
    raise ImportError("platform 'I' array is not 32-bit; table layout unsupported")


def memory_budget() -> int:
    """Byte budget for table allocations (override with CYCLO_MEM_BUDGET_BYTES)."""
    raw = os.environ.get(MEM_BUDGET_ENV)
    if raw is None:
        return DEFAULT_MEM_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MEM_BUDGET_ENV} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{MEM_BUDGET_ENV} must be positive, got {value}")
    return value


def charge_budget(nbytes: int, what: str) -> None:
    """Raise CapacityError if an allocation would exceed the memory budget."""
    budget = memory_budget()
    if nbytes > budget:
        raise CapacityError(
            f"{what} needs {nbytes} bytes but the budget is {budget} "
            f"(set {MEM_BUDGET_ENV} to raise it)"
        )


@dataclass(frozen=True)
class Factorization:
    """Prime-exponent decomposition of a positive integer.

    ``factors`` lists (prime, exponent) pairs with strictly increasing primes;
    it is empty exactly when ``value == 1``.
    """

    value: int
    factors: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SpfTable:
    """Array of smallest prime factors for every index in 2..limit.

    ``spf[k]`` is the least prime dividing k (so ``spf[p] == p`` for primes);
    entries 0 and 1 hold the index itself as a placeholder.
    """

    limit: int
    spf: array

    def smallest_factor(self, k: int) -> int:
        if not 2 <= k <= self.limit:
            raise ValueError(f"index {k} outside table range 2..{self.limit}")
        return self.spf[k]

    def is_prime(self, k: int) -> bool:
        if not 2 <= k <= self.limit:
            raise ValueError(f"index {k} outside table range 2..{self.limit}")
        return self.spf[k] == k


def build_spf_table(limit: int) -> SpfTable:
    """Sieve smallest prime factors for all indices up to ``limit``.

    Composite marking runs over primes in decreasing order so each index is
    last written by its least prime divisor; untouched indices are primes
    above sqrt(limit) and get themselves.
    """
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    if limit >= 1 << 32:
        raise CapacityError(f"limit {limit} does not fit 32-bit table entries")
    charge_budget(4 * (limit + 1), "smallest-prime-factor table")

    root = isqrt(limit)
    composite = bytearray(root + 1)
    small_primes = []
    for p in range(2, root + 1):
        if not composite[p]:
            small_primes.append(p)
            composite[p * p :: p] = b"\x01" * len(range(p * p, root + 1, p))

    spf = np.zeros(limit + 1, dtype=np.uint32)
    for p in reversed(small_primes):
        spf[p::p] = p
    untouched = np.nonzero(spf == 0)[0]
    spf[untouched] = untouched

    values = array("I")
    values.frombytes(spf.tobytes())
    return SpfTable(limit=limit, spf=values)


def factorize(n: int, table: SpfTable) -> Factorization:
    """Factor n with table lookups; O(log n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > table.limit:
        raise ValueError(f"n={n} exceeds table limit {table.limit}")
    spf = table.spf
    m = n
    out = []
    while m > 1:
        q = spf[m]
        e = 1
        m //= q
        while m > 1 and spf[m] == q:
            e += 1
            m //= q
        out.append((q, e))
    return Factorization(n, tuple(out))


def factorize_trial(n: int) -> Factorization:
    """Factor n by trial division; independent of any sieve table."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = n
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return Factorization(n, tuple(out))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs used here."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


DEFAULT_DIVISOR_CAP = 1 << 20


def tau(f: Factorization) -> int:
    """Number of divisors."""
    t = 1
    for _, e in f.factors:
        t *= e + 1
    return t


def divisors_sorted(f: Factorization, max_divisors: int = DEFAULT_DIVISOR_CAP) -> list[int]:
    """All divisors of f.value in increasing order."""
    count = tau(f)
    if count > max_divisors:
        raise CapacityError(f"{f.value} has {count} divisors, cap is {max_divisors}")
    divs = [1]
    for q, e in f.factors:
        width = len(divs)
        qq = q
        for _ in range(e):
            divs.extend(divs[i] * qq for i in range(width))
            qq *= q
    divs.sort()
    return divs


def divisor_phi_pairs(
    f: Factorization, max_divisors: int = DEFAULT_DIVISOR_CAP
) -> list[tuple[int, int]]:
    """(d, phi(d)) for every divisor d; generation order, not sorted."""
    count = tau(f)
    if count > max_divisors:
        raise CapacityError(f"{f.value} has {count} divisors, cap is {max_divisors}")
    pairs = [(1, 1)]
    for q, e in f.factors:
        width = len(pairs)
        qq = q
        ph = q - 1
        for _ in range(e):
            pairs.extend((pairs[i][0] * qq, pairs[i][1] * ph) for i in range(width))
            qq *= q
            ph *= q
    return pairs


def euler_phi(f: Factorization) -> int:
    """Euler totient from the factorization; phi(1) = 1."""
    phi = 1
    for q, e in f.factors:
        phi *= q ** (e - 1) * (q - 1)
    return phi


def _lambda_prime_power(q: int, e: int) -> int:
    if q == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 1 << (e - 2)
    return q ** (e - 1) * (q - 1)


def carmichael_lambda(f: Factorization) -> int:
    """Exponent of the multiplicative group mod f.value; lambda(1) = 1.

    Value is checked against the 64-bit contract of downstream tables even
    though Python integers cannot overflow on their own.
    """
    lam = 1
    for q, e in f.factors:
        lam = lcm(lam, _lambda_prime_power(q, e))
        if lam >= _U64_LIMIT:
            raise OverflowError(f"lambda({f.value}) exceeds 64-bit range")
    return lam


def big_omega(f: Factorization) -> int:
    """Prime factors counted with multiplicity; Omega(1) = 0."""
    return sum(e for _, e in f.factors)


def largest_prime_factor(f: Factorization) -> int:
    """P(n); P(1) = 1 by convention."""
    if not f.factors:
        return 1
    return f.factors[-1][0]


def smallest_prime_factor(f: Factorization) -> int:
    """P^-(n); P^-(1) is the PMINUS_INFINITY sentinel."""
    if not f.factors:
        return PMINUS_INFINITY
    return f.factors[0][0]


def smooth_part(m: int, bound: int, table: SpfTable | None = None) -> int:
    """Largest divisor of m whose prime factors are all <= bound."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    f = factorize(m, table) if table is not None and m <= table.limit else factorize_trial(m)
    part = 1
    for q, e in f.factors:
        if q <= bound:
            part *= q**e
    return part
