import math

import pytest
from hypothesis import given, strategies as st

from charseq.number_theory import (euler_phi, is_prime, is_wieferich, lambda_of,
                                   legendre_symbol, multiplicative_order)
from oracles import legendre_brute, power_iteration_order

SMALL_ODD_PRIMES = [n for n in range(3, 1000) if all(n % d for d in range(2, int(n**0.5) + 1))]


@pytest.mark.parametrize("n,expected", [(0, False), (1, False), (2, True), (9, False),
                                        (1093, True), (3511, True), (561, False),
                                        (2**61 - 1, True), (2**62 + 1, False),
                                        (3215031751, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(3, 1000) if n % 2 and is_prime(n)] == SMALL_ODD_PRIMES


@pytest.mark.parametrize("a,m,expected", [(2, 3, 2), (2, 9, 6), (2, 25, 20)])
def test_multiplicative_order_examples(a, m, expected):
    assert multiplicative_order(a, m) == expected
    assert power_iteration_order(a, m) == expected


def test_multiplicative_order_rejects_non_units():
    with pytest.raises(ValueError):
        multiplicative_order(3, 9)


@given(st.integers(2, 3000), st.integers(1, 3000))
def test_order_matches_iteration_and_divides_phi(m, a):
    if math.gcd(a, m) != 1:
        return
    t = multiplicative_order(a, m)
    assert t == power_iteration_order(a, m)
    assert euler_phi(m) % t == 0


@pytest.mark.parametrize("p,lam", [(3, 2), (7, 3), (11, 10), (5, 4), (31, 5)])
def test_lambda_of(p, lam):
    assert lambda_of(p) == lam


def test_wieferich():
    assert is_wieferich(1093) and is_wieferich(3511)
    assert not is_wieferich(5)
    assert not any(is_wieferich(p) for p in SMALL_ODD_PRIMES)


@pytest.mark.parametrize("n,p,expected", [(0, 7, 0), (1, 7, 1), (3, 7, -1), (2, 7, 1), (14, 7, 0)])
def test_legendre_examples(n, p, expected):
    assert legendre_symbol(n, p) == expected


def test_legendre_multiplicative_and_brute():
    for p in [q for q in SMALL_ODD_PRIMES if q <= 50]:
        for a in range(1, p):
            assert legendre_symbol(a, p) == legendre_brute(a, p)
            for b in range(1, p):
                assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


@pytest.mark.parametrize("r", [2, 3])
def test_order_of_two_modulo_prime_powers(r):
    for p in [q for q in SMALL_ODD_PRIMES if q <= 200]:
        if is_wieferich(p) or lambda_of(p) == 1:
            continue
        assert multiplicative_order(2, p**r) == lambda_of(p) * p ** (r - 1)


def test_rejects_non_odd_prime():
    for bad in (2, 4, 1, 0, 9):
        with pytest.raises(ValueError):
            lambda_of(bad)
