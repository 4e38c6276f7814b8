"""Multiplicative orders, coprime parts, and the batch order-star sieve.

``order_star(a, n)`` is the multiplicative order of a modulo the largest
divisor of n coprime to a.  The sieve computes it for every n up to a limit
by splitting off the smallest prime power of n and merging memoized
prime-power orders with lcm.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from math import gcd, lcm

from .arith import SpfTable, carmichael_lambda, charge_budget, factorize_trial, is_prime


@dataclass(frozen=True)
class OrderTable:
    """values[d] = order_star(base, d) for every 1 <= d <= limit."""

    base: int
    limit: int
    values: array

    def order_star(self, d: int) -> int:
        if not 1 <= d <= self.limit:
            raise ValueError(f"d={d} outside table range 1..{self.limit}")
        return self.values[d]


def coprime_part(n: int, a: int) -> int:
    """Largest divisor of n coprime to a."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    g = gcd(n, a)
    while g > 1:
        n //= g
        g = gcd(n, a)
    return n


def _shrink_exponent(a: int, n: int, exponent: int, exp_primes) -> int:
    # exponent is a multiple of the order; divide out primes while the
    # congruence a^t = 1 (mod n) survives.
    t = exponent
    for q in exp_primes:
        while t % q == 0 and pow(a, t // q, n) == 1:
            t //= q
    return t


def mult_order(a: int, n: int, lam_n: int | None = None) -> int:
    """Multiplicative order of a modulo n for coprime a, n.

    Starts from lambda(n) (computed via trial division when not supplied)
    and strips primes; never iterates powers one at a time.
    """
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if gcd(a, n) != 1:
        raise ValueError(f"a={a} and n={n} are not coprime")
    if n == 1:
        return 1
    lam = carmichael_lambda(factorize_trial(n)) if lam_n is None else lam_n
    if lam < 1:
        raise ValueError(f"lambda(n) must be >= 1, got {lam}")
    return _shrink_exponent(a, n, lam, (q for q, _ in factorize_trial(lam).factors))


def prime_power_order(a: int, q: int, k: int) -> int:
    """Order of a modulo q^k, lifted incrementally from the order modulo q.

    Each lift multiplies by q exactly when the previous order no longer
    satisfies the congruence, so the result is ord(q) * q^j with minimal j.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if a % q == 0:
        raise ValueError(f"q={q} divides a={a}")
    t = mult_order(a, q, q - 1)
    mod = q
    for _ in range(k - 1):
        mod *= q
        if pow(a, t, mod) != 1:
            t *= q
    return t


def mult_order_star(a: int, n: int) -> int:
    """Order of a modulo the coprime part of n; 1 when the coprime part is 1."""
    m = coprime_part(n, a)
    if m == 1:
        return 1
    return mult_order(a, m)


def _prime_order_sieved(a: int, q: int, spf: array) -> int:
    # Order of a mod prime q, with q-1 factored through the shared sieve.
    lam = q - 1
    if lam == 1:
        return 1
    primes = []
    m = lam
    while m > 1:
        r = spf[m]
        m //= r
        while m > 1 and spf[m] == r:
            m //= r
        primes.append(r)
    return _shrink_exponent(a, q, lam, primes)


def sieve_order_star(a: int, limit: int, table: SpfTable) -> OrderTable:
    """order_star(a, d) for every d <= limit, as one 32-bit array.

    Walks d in increasing order: with q^e the smallest-prime power of d and
    m the cofactor, values[d] = lcm(values[m], ord(a mod q^e)), or values[m]
    alone when q divides a.  Prime-power orders are memoized since each is
    reused across many d.
    """
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if limit > table.limit:
        raise ValueError(f"limit {limit} exceeds spf table limit {table.limit}")
    charge_budget(4 * (limit + 1), "order table")

    spf = table.spf
    values = array("I", bytes(4 * (limit + 1)))
    values[1] = 1
    a_primes = frozenset(q for q, _ in factorize_trial(a).factors)
    first_order: dict[int, int] = {}
    lifted: dict[tuple[int, int], int] = {}

    for d in range(2, limit + 1):
        q = spf[d]
        m = d // q
        e = 1
        while m > 1 and spf[m] == q:
            m //= q
            e += 1
        if q in a_primes:
            values[d] = values[m]
            continue
        t = first_order.get(q)
        if t is None:
            t = _prime_order_sieved(a, q, spf)
            first_order[q] = t
        if e > 1:
            key = (q, e)
            cached = lifted.get(key)
            if cached is None:
                mod = q
                for _ in range(e - 1):
                    mod *= q
                    if pow(a, t, mod) != 1:
                        t *= q
                lifted[key] = t
            else:
                t = cached
        values[d] = lcm(values[m], t)
    return OrderTable(base=a, limit=limit, values=values)
