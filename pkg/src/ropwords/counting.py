"""Exact counts of rop-words from necklace-counting formulas.

``count_R(n2, n3)`` is the number of rop classes with ``n2`` letters 2 and
``n3`` letters 3; it equals the number of binary necklaces with ``n2``
zeros and ``n3 / 2`` ones.  ``count_L`` counts the aperiodic (Lyndon) ones.
"""

from __future__ import annotations

import math
from fractions import Fraction


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_content(n2: int, n3: int) -> None:
    if n2 < 1 or n2 % 2 == 0:
        raise ValueError(f"n2 must be a positive odd integer, got {n2}")
    if n3 < 0 or n3 % 2:
        raise ValueError(f"n3 must be a non-negative even integer, got {n3}")


def _necklace_sum(n2: int, n3: int, weight) -> int:
    q = n3 // 2
    m = n2 + q
    g = math.gcd(m, q)  # gcd(m, 0) == m
    total = sum(weight(d) * binomial(m // d, q // d) for d in divisors(g))
    assert total % m == 0
    return total // m


def count_R(n2: int, n3: int, *, strict: bool = True) -> int:
    """Number of rop classes with content (n2, n3).

    With ``strict=False`` contents that admit no rop-word (even ``n2`` or
    odd ``n3``) count as 0 instead of raising.
    """
    try:
        _check_content(n2, n3)
    except ValueError:
        if strict or n2 < 0 or n3 < 0:
            raise
        return 0
    return _necklace_sum(n2, n3, euler_phi)


def count_L(n2: int, n3: int, *, strict: bool = True) -> int:
    """Number of Lyndon rop-words with content (n2, n3)."""
    try:
        _check_content(n2, n3)
    except ValueError:
        if strict or n2 < 0 or n3 < 0:
            raise
        return 0
    return _necklace_sum(n2, n3, moebius)


def total_R(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return 0
    # the leading 1 is the class of 2^n (n3 = 0)
    return 1 + sum(count_R(2 * p + 1, n - 2 * p - 1) for p in range((n - 1) // 2))


def total_L(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        return 0
    # L(n, 0) vanishes except at n == 1, where "2" is itself Lyndon
    return sum(count_L(n2, n - n2) for n2 in range(1, n + 1, 2))


def necklace_coeff_prime(p: int, n: int) -> int:
    """Coefficient of x^n in the cycle index of C_p under x_j -> 1/(1 - x^j)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return 1
    c = binomial(p + n - 1, n)
    if n % p == 0:
        c += p - 1
    assert c % p == 0
    return c // p


def cycle_index_coeffs(n2: int, jmax: int) -> list[int]:
    """Coefficients x^0..x^jmax of (1/n2) * sum_{d | n2} phi(d) (1 - x^d)^(-n2/d).

    Entry ``j`` is the number of binary necklaces with ``n2`` zeros and ``j`` ones.
    """
    if n2 < 1:
        raise ValueError(f"n2 must be positive, got {n2}")
    if jmax < 0:
        raise ValueError(f"jmax must be non-negative, got {jmax}")
    series = [Fraction(0)] * (jmax + 1)
    for d in divisors(n2):
        e = n2 // d
        phi = euler_phi(d)
        # (1 - y)^(-e) = sum_m C(e + m - 1, m) y^m with y = x^d
        coeff = Fraction(1)
        for m in range(jmax // d + 1):
            series[m * d] += phi * coeff
            coeff = coeff * (e + m) / (m + 1)
    out = []
    for c in series:
        c /= n2
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral necklace count {c}")
        out.append(c.numerator)
    return out
