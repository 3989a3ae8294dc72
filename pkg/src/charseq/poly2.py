"""Polynomials over GF(2), bit-packed into Python integers.

Bit ``i`` of the backing integer is the coefficient of ``X^i``; the zero
polynomial is the integer 0 and has degree -1 here (standing in for
minus infinity).
"""

from __future__ import annotations

from collections import Counter

from .number_theory import check_odd_prime


class BinaryPolynomial:
    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("coefficient bitset must be non-negative")
        object.__setattr__(self, "bits", int(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryPolynomial is immutable")

    @classmethod
    def from_exponents(cls, exponents) -> BinaryPolynomial:
        bits = 0
        for e in exponents:
            bits ^= 1 << e
        return cls(bits)

    @classmethod
    def from_hex(cls, text: str) -> BinaryPolynomial:
        return cls(int.from_bytes(bytes.fromhex(text), "little"))

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def exponents(self) -> list[int]:
        b, out, i = self.bits, [], 0
        while b:
            if b & 1:
                out.append(i)
            b >>= 1
            i += 1
        return out

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def to_hex(self) -> str:
        n = max(1, (self.bits.bit_length() + 7) // 8)
        return self.bits.to_bytes(n, "little").hex()

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        if isinstance(other, BinaryPolynomial):
            return self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash(("gf2x", self.bits))

    def __add__(self, other):
        return BinaryPolynomial(self.bits ^ _bits(other))

    __sub__ = __radd__ = __rsub__ = __add__

    def __mul__(self, other):
        return BinaryPolynomial(_mul(self.bits, _bits(other)))

    __rmul__ = __mul__

    def __mod__(self, other):
        return BinaryPolynomial(_rem(self.bits, _bits(other)))

    def __floordiv__(self, other):
        return BinaryPolynomial(_divmod(self.bits, _bits(other))[0])

    def __divmod__(self, other):
        q, r = _divmod(self.bits, _bits(other))
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __repr__(self):
        if not self.bits:
            return "BinaryPolynomial(0)"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "X" if e == 1 else f"X^{e}")
        return f"BinaryPolynomial({' + '.join(terms)})"


def _bits(a) -> int:
    return a.bits if isinstance(a, BinaryPolynomial) else int(a)


def _mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        low = (b & -b).bit_length() - 1
        a <<= low
        b >>= low
        c ^= a
        a <<= 1
        b >>= 1
    return c


def _rem(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    while da >= db:
        a ^= b << (da - db)
        da = a.bit_length()
    return a


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    da = a.bit_length()
    q = 0
    while da >= db:
        s = da - db
        q ^= 1 << s
        a ^= b << s
        da = a.bit_length()
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _rem(a, b)
    return a


def add(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_bits(a) ^ _bits(b))


def mul(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_mul(_bits(a), _bits(b)))


def rem(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    return BinaryPolynomial(_rem(_bits(a), _bits(b)))


def gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Euclidean gcd; ``gcd(a, 0) == a``."""
    return BinaryPolynomial(_gcd(_bits(a), _bits(b)))


def degree(a: BinaryPolynomial) -> int:
    return _bits(a).bit_length() - 1


def x_pow_t_minus_1(t: int) -> BinaryPolynomial:
    if t < 1:
        raise ValueError("T must be positive")
    return BinaryPolynomial((1 << t) | 1)


def phi_r(p: int, r: int) -> BinaryPolynomial:
    """``1 + X^m + X^(2m) + ... + X^((p-1)m)`` with ``m = p^(r-1)``."""
    check_odd_prime(p)
    if r < 1:
        raise ValueError("r must be positive")
    m = p ** (r - 1)
    bits = 0
    for j in range(p):
        bits |= 1 << (j * m)
    return BinaryPolynomial(bits)


def _square(a: int) -> int:
    # Over GF(2), squaring spreads bit i to bit 2i: interleave zeros.
    if not a:
        return 0
    return int("0".join(bin(a)[2:]), 2)


def distinct_degree_profile(f: BinaryPolynomial) -> dict[int, int]:
    """Number of distinct irreducible factors of each degree of a squarefree ``f``.

    Iterates ``h = X^(2^d) mod f`` and peels off ``gcd(f, h - X)`` per degree.
    """
    rest = _bits(f)
    if rest == 0:
        raise ValueError("zero polynomial has no factorization")
    counts: Counter[int] = Counter()
    h = 2  # X
    d = 0
    while rest.bit_length() - 1 >= 2 * (d + 1):
        d += 1
        h = _rem(_square(h), rest)
        g = _gcd(rest, h ^ 2)
        dg = g.bit_length() - 1
        if dg > 0:
            counts[d] += dg // d
            rest = _divmod(rest, g)[0]
            h = _rem(h, rest)
    if rest.bit_length() - 1 > 0:
        counts[rest.bit_length() - 1] += 1
    return dict(sorted(counts.items()))
