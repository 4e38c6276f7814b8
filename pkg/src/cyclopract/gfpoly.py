"""Dense polynomial arithmetic over F_p for the factorization oracle.

Polynomials are lists of coefficients in ascending powers, trimmed so the
last entry is nonzero (the zero polynomial is ``[0]``).  Everything here is
deliberately quadratic schoolbook arithmetic: the oracle only runs at small
degrees and simplicity is what makes it trustworthy.
"""
from __future__ import annotations


def trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def is_zero(f: list[int]) -> bool:
    return len(f) == 1 and f[0] == 0


def degree(f: list[int]) -> int:
    return len(f) - 1


def poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if is_zero(f) or is_zero(g):
        return [0]
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] += fi * gj
    return trim([c % p for c in out])


def poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if is_zero(g):
        raise ZeroDivisionError("polynomial division by zero")
    rem = [c % p for c in f]
    dg = degree(g)
    if degree(trim(rem[:])) < dg:
        return [0], trim(rem)
    inv_lead = pow(g[-1], p - 2, p)
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] % p
        if c:
            q = c * inv_lead % p
            quot[i - dg] = q
            for j in range(dg + 1):
                rem[i - dg + j] = (rem[i - dg + j] - q * g[j]) % p
    return trim(quot), trim(rem)


def poly_mod(f: list[int], g: list[int], p: int) -> list[int]:
    return poly_divmod(f, g, p)[1]


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd over F_p."""
    a = trim([c % p for c in f])
    b = trim([c % p for c in g])
    while not is_zero(b):
        a, b = b, poly_mod(a, b, p)
    if is_zero(a):
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def poly_pow_mod(f: list[int], e: int, modulus: list[int], p: int) -> list[int]:
    """f^e mod modulus over F_p by square-and-multiply."""
    result = [1]
    base = poly_mod(f, modulus, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), modulus, p)
        e >>= 1
        if e:
            base = poly_mod(poly_mul(base, base, p), modulus, p)
    return result


def distinct_degree_counts(f: list[int], p: int) -> dict[int, int]:
    """degree -> number of irreducible factors, for squarefree monic f.

    Classic distinct-degree factorization: advance h = x^(p^d) mod f one
    Frobenius power at a time; gcd(f, h - x) collects the product of all
    factors of degree d.  Once deg f < 2(d+1) the remainder is irreducible.
    """
    f = trim([c % p for c in f])
    counts: dict[int, int] = {}
    x = [0, 1]
    h = poly_mod(x, f, p)
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = poly_pow_mod(h, p, f, p)
        g = poly_gcd(f, poly_sub(h, x, p), p)
        if degree(g) > 0:
            counts[d] = counts.get(d, 0) + degree(g) // d
            f = poly_divmod(f, g, p)[0]
            h = poly_mod(h, f, p)
    if degree(f) > 0:
        counts[degree(f)] = counts.get(degree(f), 0) + 1
    return counts
