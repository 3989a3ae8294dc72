"""Elementary integer number theory: primality, orders, Legendre symbols."""

from __future__ import annotations

import math

# Deterministic for n < 3.3e24, which covers the whole 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for ``0 <= n < 2**63``."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n % w == 0:
            return n == w
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_odd_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise ValueError if it is not an odd prime."""
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p!r}")
    return p


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; fine for the desk-scale inputs used here."""
    if n < 1:
        raise ValueError("n must be positive")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(m: int) -> int:
    result = m
    for prime in factorize(m):
        result -= result // prime
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Smallest ``t >= 1`` with ``a**t == 1 (mod m)``.

    Starts from the totient of ``m`` and strips prime factors while the
    power stays 1, so the cost is a handful of modular exponentiations.
    """
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    order = euler_phi(m)
    for prime in factorize(order):
        while order % prime == 0 and pow(a, order // prime, m) == 1:
            order //= prime
    return order


def lambda_of(p: int) -> int:
    """Order of 2 modulo the odd prime ``p``."""
    return multiplicative_order(2, check_odd_prime(p))


def is_wieferich(p: int) -> bool:
    """True iff ``2**(p-1) == 1 (mod p**2)``."""
    check_odd_prime(p)
    return pow(2, p - 1, p * p) == 1


def is_two_primitive_mod_p_squared(p: int) -> bool:
    check_odd_prime(p)
    return multiplicative_order(2, p * p) == p * (p - 1)


def legendre_symbol(n: int, p: int) -> int:
    """Legendre symbol (n/p) by Euler's criterion."""
    check_odd_prime(p)
    t = pow(n % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t
