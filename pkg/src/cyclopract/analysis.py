"""Empirical counters and scanners for order/divisor statistics.

These are diagnostics over a finite range: dense-divisor counts, the prime
sets A_q, largest prime factors of lambda/order quotients, smooth parts of
lambda, and threshold counts for Omega(phi(n)) and tau(n).  Thresholds that
arrive as reals are compared against integers exactly (Python int/float
comparisons are exact; divisor-ratio checks cross-multiply integers), so no
count can be off by a float boundary.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from math import exp, gcd, isfinite, lcm, log

from .arith import (
    SpfTable,
    build_spf_table,
    charge_budget,
    divisors_sorted,
    factorize_trial,
    is_prime,
)
from .errors import CapacityError
from .orders import OrderTable, mult_order

THETA_MIN = 0.1
THETA_MAX = 0.9


@dataclass(frozen=True)
class AnalysisConfig:
    """Threshold bundle derived from (theta, X).

    Y = exp(110 (log X)^theta (log log X)^2) and B = exp((log X)^theta);
    Z defaults to Y^2 and psi to Y*B, their values in the dense-divisor
    argument, but both can be overridden.  All logs are natural.
    """

    theta: float
    X: int
    Y: float
    B: float
    Z: float
    psi: float

    @classmethod
    def from_theta(
        cls,
        theta: float,
        X: int,
        Z: float | None = None,
        psi: float | None = None,
    ) -> "AnalysisConfig":
        if not THETA_MIN <= theta <= THETA_MAX:
            raise ValueError(f"theta must lie in [{THETA_MIN}, {THETA_MAX}], got {theta}")
        if X < 3:
            raise ValueError(f"X must be >= 3, got {X}")
        lx = log(X)
        llx = log(lx)
        try:
            B = exp(lx**theta)
            Y = exp(110.0 * lx**theta * llx * llx)
        except OverflowError as exc:
            raise ValueError(
                f"derived thresholds overflow doubles for X={X}, theta={theta}"
            ) from exc
        if Z is None:
            Z = Y * Y
        if not isfinite(Z):
            raise ValueError("Z overflows a double; pass Z explicitly")
        if Z < 2:
            raise ValueError(f"Z must be >= 2, got {Z}")
        if psi is None:
            psi = Y * B
        if not isfinite(psi):
            raise ValueError("psi overflows a double; pass psi explicitly")
        if psi < llx:
            raise ValueError(f"psi={psi} is below log log X = {llx}")
        return cls(theta=theta, X=X, Y=Y, B=B, Z=Z, psi=psi)

    def small_order_bound(self) -> float:
        """X / (Y * exp((log X)^theta)): the small-order cutoff at X."""
        return self.X / (self.Y * self.B)


def omega_phi_threshold(X: int) -> float:
    """110 (log log X)^2, the tail cutoff for Omega(phi(n))."""
    if X < 3:
        raise ValueError(f"X must be >= 3, got {X}")
    return 110.0 * log(log(X)) ** 2


def _require_spf(limit: int, table: SpfTable | None) -> SpfTable:
    if table is None:
        return build_spf_table(max(limit, 2))
    if table.limit < limit:
        raise ValueError(f"spf table limit {table.limit} below required {limit}")
    return table


def _ratio_parts(z) -> tuple[int, int]:
    num, den = z.as_integer_ratio()
    if num <= 0:
        raise ValueError(f"Z must be positive, got {z}")
    return num, den


def _sorted_divisors(n: int, spf: array) -> list[int]:
    divs = [1]
    m = n
    while m > 1:
        q = spf[m]
        m //= q
        e = 1
        while m > 1 and spf[m] == q:
            m //= q
            e += 1
        width = len(divs)
        qq = q
        while True:
            divs.extend(divs[i] * qq for i in range(width))
            if e == 1:
                break
            e -= 1
            qq *= q
    divs.sort()
    return divs


def is_z_dense(n: int, z, table: SpfTable | None = None) -> bool:
    """True when every consecutive divisor ratio d_{i+1}/d_i is <= Z.

    The comparison is exact: with Z = num/den it checks
    d_{i+1} * den <= num * d_i in integers.  n = 1 is Z-dense (no ratios).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num, den = _ratio_parts(z)
    if num < 2 * den:
        raise ValueError(f"Z must be >= 2, got {z}")
    if n == 1:
        return True
    if table is not None and n <= table.limit:
        divs = _sorted_divisors(n, table.spf)
    else:
        divs = divisors_sorted(factorize_trial(n))
    for prev, cur in zip(divs, divs[1:]):
        if cur * den > num * prev:
            return False
    return True


def count_z_dense(limit: int, z, table: SpfTable | None = None) -> int:
    """Exact count of Z-dense n <= limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    num, den = _ratio_parts(z)
    if num < 2 * den:
        raise ValueError(f"Z must be >= 2, got {z}")
    table = _require_spf(limit, table)
    spf = table.spf
    count = 1  # n = 1
    for n in range(2, limit + 1):
        divs = _sorted_divisors(n, spf)
        for prev, cur in zip(divs, divs[1:]):
            if cur * den > num * prev:
                break
        else:
            count += 1
    return count


def dense_count_bound_ratio(limit: int, z, count: int) -> float:
    """count / (limit * log Z / log limit): diagnostic against the dense-divisor bound."""
    num, den = _ratio_parts(z)
    return count / (limit * log(num / den) / log(limit))


def a_q_primes(a: int, q: int, bound: int, table: SpfTable | None = None) -> list[int]:
    """Primes p <= bound with p = 1 (mod q) and a^((p-1)/q) = 1 (mod p)."""
    if a < 2:
        raise ValueError(f"a must be >= 2, got {a}")
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    if bound < q:
        raise ValueError(f"bound must be >= q, got {bound}")
    out = []
    use_table = table is not None and table.limit >= bound
    for p in range(q + 1, bound + 1, q):
        if use_table:
            if table.spf[p] != p:
                continue
        elif not is_prime(p):
            continue
        if pow(a, (p - 1) // q, p) == 1:
            out.append(p)
    return out


@dataclass(frozen=True)
class PrimeWindow:
    """Primes = 1 (mod q) in the window (lower, upper]."""

    q: int
    lower: float
    upper: float
    primes: tuple[int, ...]


LP2_WINDOW_CAP = 10**8


def lp2_range_primes(q: int, cap: int = LP2_WINDOW_CAP) -> PrimeWindow:
    """The window (q^2/(4 log^2 q), q^2 log^4 q] and its primes = 1 (mod q)."""
    if q < 3 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 3, got {q}")
    lq = log(q)
    lower = q * q / (4.0 * lq * lq)
    upper = q * q * lq**4
    if upper > cap:
        raise CapacityError(f"window upper end {upper:.3e} exceeds cap {cap}")
    hi = int(upper)
    primes = [p for p in range(q + 1, hi + 1, q) if p > lower and is_prime(p)]
    return PrimeWindow(q=q, lower=lower, upper=upper, primes=tuple(primes))


def _lambda_prime_power(q: int, e: int) -> int:
    if q == 2:
        if e == 1:
            return 1
        if e == 2:
            return 2
        return 1 << (e - 2)
    return q ** (e - 1) * (q - 1)


def lambda_star_table(limit: int, table: SpfTable, skip_base: int | None = None) -> array:
    """lambda of the largest divisor of n coprime to skip_base, for n <= limit.

    skip_base None computes plain lambda(n).  Same incremental scheme as the
    order sieve: split off the smallest prime power and merge with lcm.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if table.limit < limit:
        raise ValueError(f"spf table limit {table.limit} below {limit}")
    charge_budget(4 * (limit + 1), "lambda table")
    skip = (
        frozenset()
        if skip_base is None
        else frozenset(q for q, _ in factorize_trial(skip_base).factors)
    )
    spf = table.spf
    values = array("I", bytes(4 * (limit + 1)))
    values[1] = 1
    for d in range(2, limit + 1):
        q = spf[d]
        m = d // q
        e = 1
        while m > 1 and spf[m] == q:
            m //= q
            e += 1
        if q in skip:
            values[d] = values[m]
        else:
            values[d] = lcm(values[m], _lambda_prime_power(q, e))
    return values


def _largest_prime_factor_sieved(m: int, spf: array) -> int:
    if m == 1:
        return 1
    largest = 1
    while m > 1:
        largest = spf[m]
        m //= largest
        while m > 1 and spf[m] == largest:
            m //= largest
    return largest


@dataclass(frozen=True)
class RatioStats:
    """Histogram of P(lambda(n_(a)) / order_star(a, n)) over n <= limit."""

    base: int
    limit: int
    counts: dict[int, int]
    psi: float | None
    exceed_psi: int | None


def lambda_order_ratio_stats(
    a: int,
    limit: int,
    spf_table: SpfTable,
    order_table: OrderTable,
    psi: float | None = None,
) -> RatioStats:
    """Largest prime factor of lambda(n_(a))/order_star(a, n) for each n.

    The quotient uses lambda of the coprime part so it is always an integer
    (the order divides that lambda).  P(1) = 1 lands in bucket 1.
    """
    if order_table.base != a:
        raise ValueError(f"order table base {order_table.base} does not match a={a}")
    if order_table.limit < limit or spf_table.limit < limit:
        raise ValueError("tables do not cover the requested limit")
    lam = lambda_star_table(limit, spf_table, skip_base=a)
    ords = order_table.values
    spf = spf_table.spf
    counts: dict[int, int] = {}
    exceed = 0
    for n in range(1, limit + 1):
        ratio = lam[n] // ords[n]
        biggest = _largest_prime_factor_sieved(ratio, spf)
        counts[biggest] = counts.get(biggest, 0) + 1
        if psi is not None and biggest >= psi:
            exceed += 1
    return RatioStats(
        base=a,
        limit=limit,
        counts=counts,
        psi=psi,
        exceed_psi=exceed if psi is not None else None,
    )


def small_order_count(a: int, limit: int, bound, order_table: OrderTable) -> int:
    """#{n <= limit : order_star(a, n) <= bound}."""
    if order_table.base != a:
        raise ValueError(f"order table base {order_table.base} does not match a={a}")
    if order_table.limit < limit:
        raise ValueError(f"order table limit {order_table.limit} below {limit}")
    values = order_table.values[1 : limit + 1]
    count = 0
    for v in values:
        if v <= bound:
            count += 1
    return count


def omega_phi_distribution(limit: int, table: SpfTable | None = None) -> dict[int, int]:
    """Histogram of Omega(phi(n)) for n <= limit."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    table = _require_spf(limit, table)
    spf = table.spf
    omega_pm1: dict[int, int] = {2: 0}
    dist: dict[int, int] = {}
    for n in range(1, limit + 1):
        total = 0
        m = n
        while m > 1:
            q = spf[m]
            m //= q
            e = 1
            while m > 1 and spf[m] == q:
                m //= q
                e += 1
            om = omega_pm1.get(q)
            if om is None:
                om = 0
                k = q - 1
                while k > 1:
                    k //= spf[k]
                    om += 1
                omega_pm1[q] = om
            total += e - 1 + om
        dist[total] = dist.get(total, 0) + 1
    return dist


def omega_phi_excess(limit: int, X: int | None = None, table: SpfTable | None = None) -> int:
    """#{n <= limit : Omega(phi(n)) >= 110 (log log X)^2}, X defaulting to limit."""
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    cutoff = omega_phi_threshold(limit if X is None else X)
    dist = omega_phi_distribution(limit, table)
    return sum(c for om, c in dist.items() if om >= cutoff)


def tau_threshold_count(limit: int, kappa, table: SpfTable | None = None) -> int:
    """#{n <= limit : tau(n) >= kappa}."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    if limit == 1:
        return 1 if 1 >= kappa else 0
    table = _require_spf(limit, table)
    spf = table.spf
    count = 1 if 1 >= kappa else 0  # n = 1 has tau = 1
    for n in range(2, limit + 1):
        t = 1
        m = n
        while m > 1:
            q = spf[m]
            m //= q
            e = 1
            while m > 1 and spf[m] == q:
                m //= q
                e += 1
            t *= e + 1
        if t >= kappa:
            count += 1
    return count


def tau_bound_ratio(limit: int, kappa, count: int) -> float:
    """count / ((1/kappa) * limit * log limit): diagnostic against the tau tail bound."""
    return count / (limit * log(limit) / kappa)


def smooth_lambda_part_count(
    limit: int, bound: int, threshold, table: SpfTable | None = None
) -> int:
    """#{n <= limit : the bound-smooth part of lambda(n) exceeds threshold}."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    table = _require_spf(limit, table)
    spf = table.spf
    lam = lambda_star_table(limit, table)
    count = 0
    for n in range(1, limit + 1):
        m = lam[n]
        part = 1
        while m > 1:
            q = spf[m]
            if q > bound:
                break
            qq = 1
            m //= q
            qq *= q
            while m > 1 and spf[m] == q:
                m //= q
                qq *= q
            part *= qq
        if part > threshold:
            count += 1
    return count


def order_check(a: int, p: int) -> int:
    """Multiplicative order of a modulo a prime p not dividing a."""
    if gcd(a, p) != 1:
        raise ValueError(f"a={a} and p={p} share a factor")
    return mult_order(a, p, p - 1)
