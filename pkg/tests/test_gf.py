import json
from itertools import product

import numpy as np
import pytest

from charseq.gf import (FieldDescriptor, FieldError, build_field, build_field_with_gamma,
                        find_irreducible, is_irreducible, select_gamma)
from charseq.number_theory import legendre_symbol
from oracles import NaiveField, naive_is_irreducible

FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (3, 3), (3, 4), (11, 2),
          (13, 2), (19, 2)]


def scan_minimal_irreducible(p, r):
    for code in range(p**r):
        coeffs = [(code // p**i) % p for i in range(r)] + [1]
        if naive_is_irreducible(coeffs, p):
            return coeffs


def test_find_irreducible_small_cases():
    assert find_irreducible(3, 2) == [1, 0, 1]
    assert find_irreducible(7, 1) == [0, 1]


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (7, 2), (3, 3), (5, 3), (3, 4), (11, 2)])
def test_find_irreducible_matches_exhaustive_scan(p, r):
    assert find_irreducible(p, r) == scan_minimal_irreducible(p, r)


def test_rabin_test_agrees_with_exhaustive_check():
    for p, r in [(3, 2), (3, 3), (5, 2), (3, 4)]:
        for tail in product(range(p), repeat=r):
            coeffs = list(tail) + [1]
            assert is_irreducible(coeffs, p) == naive_is_irreducible(coeffs, p), coeffs


def test_build_field_structure():
    f = build_field(3, 2)
    assert f.q == 9 and len(f.exp_table) == 8 and len(f.log_table) == 9
    assert f.basis == (1, 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_field_alpha_is_smallest_primitive_root(p):
    f = build_field(p, 1)
    roots = [g for g in range(1, p) if len({pow(g, e, p) for e in range(p - 1)}) == p - 1]
    assert f.alpha_index == roots[0]


@pytest.mark.parametrize("p,r", FIELDS)
def test_alpha_is_smallest_generator(p, r):
    f = build_field(p, r)
    if f.q <= 400:
        assert f.alpha_index == NaiveField(p, r, f.modulus).smallest_generator_index()
    a = f.alpha_index
    assert f.power(a, f.q - 1) == 1
    assert all(f.power(a, k) != 1 for k in range(1, f.q - 1))


@pytest.mark.parametrize("p,r", FIELDS)
def test_exp_log_round_trip(p, r):
    f = build_field(p, r)
    e = np.arange(f.q - 1)
    assert np.array_equal(f.log_table[f.exp_table], e)
    assert sorted(f.exp_table.tolist()) == list(range(1, f.q))


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (3, 3)])
def test_arithmetic_matches_naive(p, r):
    for sign in ((1, -1) if r == 2 else (None,)):
        f = build_field_with_gamma(p, sign) if sign else build_field(p, r)
        nf = NaiveField(p, r, f.modulus, f.basis[1:])
        index_of = {nf.xi(n): n for n in range(f.q)}
        for a in range(f.q):
            for b in range(f.q):
                assert f.multiply(a, b) == index_of[nf.mul(nf.xi(a), nf.xi(b))]
                expected_sum = tuple((x + y) % p for x, y in zip(nf.xi(a), nf.xi(b)))
                assert f.add(a, b) == index_of[expected_sum]


def test_unit_zero_and_inverse():
    f = build_field(5, 2)
    for b in range(f.q):
        assert f.multiply(0, b) == 0
        assert f.multiply(1, b) == b
        if b:
            assert f.multiply(b, f.inverse(b)) == 1
            assert f.add(b, f.negate(b)) == 0
    assert f.inverse(f.alpha_index) == f.exp_table[f.q - 2]
    with pytest.raises(ZeroDivisionError):
        f.inverse(0)


def test_discrete_log():
    f = build_field(7, 2)
    assert f.discrete_log(f.alpha_index) == 1
    assert f.discrete_log(1) == 0
    for a in range(1, f.q):
        assert f.exp_table[f.discrete_log(a)] == a
    with pytest.raises(ValueError):
        f.discrete_log(0)


def test_quadratic_character_basics():
    f = build_field(3, 2)
    assert f.quadratic_character(0) == 0
    assert f.quadratic_character(1) == 1
    for p in (3, 5, 7, 11):
        g = build_field(p, 2)
        assert all(g.quadratic_character(i) == 1 for i in range(1, p))


@pytest.mark.parametrize("p,r", [(p, r) for p, r in FIELDS if p**r <= 361])
def test_character_multiplicative_and_euler(p, r):
    f = build_field(p, r)
    chi = f.character_table()
    q = f.q
    for a in range(1, q):
        prods = [f.multiply(a, b) for b in range(1, q)]
        assert np.array_equal(chi[prods], chi[a] * chi[1:])
        assert (f.power(a, (q - 1) // 2) == 1) == (chi[a] == 1)


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (7, 2), (3, 3)])
def test_character_agrees_with_naive_squares(p, r):
    f = build_field(p, r)
    nf = NaiveField(p, r, f.modulus)
    assert [f.quadratic_character(n) for n in range(f.q)] == [nf.chi(nf.xi(n)) for n in range(f.q)]


def test_prime_field_character_is_legendre():
    for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]:
        f = build_field(p, 1)
        assert all(f.quadratic_character(n) == legendre_symbol(n, p) for n in range(1, p))


@pytest.mark.parametrize("desired", [1, -1])
def test_select_gamma_scan_oracle(desired):
    f = build_field(3, 2)
    expected = next(n for n in range(3, 9) if (f.log_table[n] % 2 == 0) == (desired == 1))
    assert select_gamma(f, desired) == expected


def test_select_gamma_both_signs_exist_and_differ():
    f = build_field(5, 2)
    plus, minus = select_gamma(f, 1), select_gamma(f, -1)
    assert plus != minus and plus >= 5 and minus >= 5
    with pytest.raises(FieldError):
        select_gamma(build_field(3, 3), 1)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("sign", [1, -1])
def test_row_cosets_are_scaled_copies(p, sign):
    """{i(1 + j g)} = {i + j g} for every 1 <= i < p."""
    f = build_field_with_gamma(p, sign)
    gamma = p  # ordering index of the second basis vector
    t1 = [f.add(1, f.multiply(j, gamma)) for j in range(p)]
    for i in range(1, p):
        ti = {f.add(i, f.multiply(j, gamma)) for j in range(p)}
        assert {f.multiply(i, t) for t in t1} == ti
        assert ti == {i + j * p for j in range(p)}


def test_gamma_override_ordering():
    f = build_field(5, 2, gamma_override=[7])
    assert f.basis == (1, 7)
    assert f.index_to_code[5] == 7
    assert f.index_to_code[1] == 1


def test_invalid_fields():
    with pytest.raises(FieldError):
        build_field(3, 2, modulus=[2, 0, 1])  # X^2 + 2 = (X+1)(X+2)
    with pytest.raises(FieldError):
        build_field(3, 2, gamma_override=[2])  # 2 lies in F_3
    with pytest.raises(FieldError):
        build_field(3, 17)
    with pytest.raises(FieldError):
        build_field(3, 2, alpha_index=3)  # x has order 4
    with pytest.raises(ValueError):
        build_field(9, 1)


def test_descriptor_json_round_trip():
    f = build_field_with_gamma(5, -1)
    text = f.to_json()
    assert set(json.loads(text)) == {"p", "r", "modulus", "alpha_index", "basis"}
    g = FieldDescriptor.from_json(text)
    assert g.to_json() == text
    assert np.array_equal(g.exp_table, f.exp_table)


def test_explicit_alpha():
    f = build_field(5, 2)
    other = next(a for a in range(f.alpha_index + 1, f.q)
                 if f.discrete_log(a) % 2 and np.gcd(f.discrete_log(a), 24) == 1)
    g = build_field(5, 2, alpha_index=other)
    assert g.alpha_index == other and g.discrete_log(other) == 1
    assert np.array_equal(g.character_table(), f.character_table())


def test_build_large_field_within_cap():
    f = build_field(3, 12)
    assert f.q == 531441
    a = f.alpha_index
    assert f.multiply(f.exp_table[100], f.exp_table[200]) == f.exp_table[300]
    assert f.inverse(a) == f.exp_table[f.q - 2]
