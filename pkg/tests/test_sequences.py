import numpy as np
import pytest

from charseq.gf import build_field, build_field_with_gamma
from charseq.number_theory import legendre_symbol
from charseq.poly2 import BinaryPolynomial, x_pow_t_minus_1
from charseq.sequences import (BinarySequence, DarySequence, SequenceSpec,
                               column_polynomials, gen_character_sequence,
                               gen_indexed_sequence, gen_modified_sequence,
                               gen_sidelnikov, generating_polynomial, least_period,
                               weight_vectors)

SMALL_FIELDS = [(p, r) for p in (3, 5, 7, 11, 13, 17, 19) for r in (1, 2, 3) if p**r <= 361]


def golden_field(entry, p):
    return build_field(p, 2, modulus=entry["modulus"], gamma_override=[entry["gamma_code"]])


@pytest.mark.parametrize("key,p", [("p3_chi+1", 3), ("p3_chi-1", 3), ("p5_chi+1", 5),
                                   ("p5_chi-1", 5), ("p3_default", 3)])
def test_golden_patterns(golden, key, p):
    entry = golden("sequences.json")[key]
    f = golden_field(entry, p)
    assert f.alpha_index == entry["alpha_index"]
    assert gen_character_sequence(f).to_text() == entry["character"]
    assert gen_modified_sequence(f).to_text() == entry["modified"]
    assert gen_sidelnikov(f).to_text() == entry["sidelnikov"]


def test_spec_defaults_reproduce_golden(golden):
    seqs = golden("sequences.json")
    assert SequenceSpec("character", 3, 2, gamma="+1").generate().to_text() == seqs["p3_chi+1"]["character"]
    assert SequenceSpec("character", 3, 2).generate().to_text() == seqs["p3_default"]["character"]
    assert SequenceSpec("sidelnikov", 5, 2, gamma="-1").generate().to_text() == seqs["p5_chi-1"]["sidelnikov"]


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_character_sequence_shape(p, r):
    s = gen_character_sequence(build_field(p, r))
    assert s.period == p**r
    assert s.bits[0] == 0
    assert s.weight() == (p**r - 1) // 2
    assert least_period(s) == p**r


@pytest.mark.parametrize("p,r", SMALL_FIELDS)
def test_indexed_with_d2_equals_character(p, r):
    f = build_field(p, r)
    assert np.array_equal(gen_indexed_sequence(f, 2).symbols, gen_character_sequence(f).bits)
    if r == 2:
        for sign in (1, -1):
            g = build_field_with_gamma(p, sign)
            assert np.array_equal(gen_indexed_sequence(g, 2).symbols,
                                  gen_character_sequence(g).bits)


def test_indexed_examples():
    f = build_field(3, 2)
    s = gen_indexed_sequence(f, f.q - 1)
    assert s.symbols[f.alpha_index] == 1
    counts = np.bincount(gen_indexed_sequence(f, 4).symbols[1:], minlength=4)
    assert counts.tolist() == [2, 2, 2, 2]
    s5 = gen_indexed_sequence(build_field(5, 2), 5)  # 5 does not divide 24
    assert s5.symbols.max() == 4 and s5.symbols[0] == 0


def test_legendre_degeneration():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        s = gen_character_sequence(build_field(p, 1))
        expected = [0] + [(1 - legendre_symbol(n, p)) // 2 for n in range(1, p)]
        assert s.bits.tolist() == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_modified_sequence(p):
    f = build_field_with_gamma(p, 1)
    s = gen_modified_sequence(f)
    assert s.period == p * p
    assert s.bits[0] == 0 and s.bits[p] == 0
    for j in range(1, p):
        assert s.bits[j * p] == (1 - legendre_symbol(j, p)) // 2
    with pytest.raises(ValueError):
        gen_modified_sequence(build_field(p, 1))


@pytest.mark.parametrize("p,r", [(3, 2), (5, 2), (7, 1), (3, 3)])
def test_sidelnikov_conventions(p, r):
    f = build_field(p, r)
    s = gen_sidelnikov(f)
    assert s.period == f.q - 1
    assert s.bits[(f.q - 1) // 2] == 0
    assert s.bits[0] == 0
    assert s.metadata["zero_argument_positions"] == [0]


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("sign", [1, -1])
def test_weight_vectors(p, sign):
    s = gen_character_sequence(build_field_with_gamma(p, sign))
    w = weight_vectors(s, p)
    if sign == 1:
        assert w == [0] + [(p + 1) // 2] * (p - 1)
    else:
        assert w == [p - 1] + [(p - 1) // 2] * (p - 1)
    assert sum(w) == (p * p - 1) // 2


def test_weight_vector_examples():
    assert weight_vectors(gen_character_sequence(build_field_with_gamma(5, 1)), 5) == [0, 3, 3, 3, 3]
    assert weight_vectors(gen_character_sequence(build_field_with_gamma(5, -1)), 5) == [4, 2, 2, 2, 2]
    assert weight_vectors(BinarySequence([0] * 9), 3) == [0, 0, 0]
    with pytest.raises(ValueError):
        weight_vectors(BinarySequence([0] * 10), 3)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("sign", [1, -1])
def test_column_polynomials_reduce_to_monomials(p, sign):
    s = gen_character_sequence(build_field_with_gamma(p, sign))
    w = (p + 1) // 2 if sign == 1 else (p - 1) // 2
    mod = x_pow_t_minus_1(p)
    V = column_polynomials(s, p)
    assert V[0] % mod == BinaryPolynomial(0)
    for i in range(1, p):
        assert V[i] % mod == BinaryPolynomial((w % 2) << i)
    total = BinaryPolynomial(0)
    for v in V:
        total = total + v
    assert total == generating_polynomial(s)


def test_generating_polynomial(golden):
    assert generating_polynomial(BinarySequence([0] * 9)) == BinaryPolynomial(0)
    single = BinarySequence([0, 0, 0, 1, 0, 0, 0, 0, 0])
    assert generating_polynomial(single) == BinaryPolynomial.from_exponents([3])
    text = golden("sequences.json")["p3_chi+1"]["character"]
    S = generating_polynomial(BinarySequence.from_text(text))
    assert S.exponents() == [i for i, c in enumerate(text) if c == "1"]


def test_least_period_examples():
    assert least_period(BinarySequence([0] * 9)) == 1
    assert least_period(BinarySequence.from_text("010101")) == 2
    assert least_period(BinarySequence.from_text("0110")) == 4


def test_text_and_json_round_trip():
    s = SequenceSpec("sidelnikov", 5, 2, gamma="+1").generate()
    back = BinarySequence.from_json(s.to_json())
    assert back == s and back.spec == s.spec and back.metadata == s.metadata
    assert BinarySequence.from_text(s.to_text() + "\n") == s
    d = SequenceSpec("indexed", 3, 2, d=4).generate()
    assert isinstance(d, DarySequence)
    assert DarySequence.from_dict(d.to_dict()).symbols.tolist() == d.symbols.tolist()
    with pytest.raises(ValueError):
        BinarySequence.from_text("01a")


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec("modified", 3, 1)
    with pytest.raises(ValueError):
        SequenceSpec("indexed", 3, 2)
    with pytest.raises(ValueError):
        SequenceSpec("character", 3, 3, gamma="+1")
    with pytest.raises(ValueError):
        SequenceSpec("bogus", 3, 2)


def test_sequences_are_immutable():
    s = gen_character_sequence(build_field(3, 2))
    with pytest.raises(ValueError):
        s.bits[0] = 1
