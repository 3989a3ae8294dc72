"""Table-driven arithmetic in F_{p^r} for odd p.

Elements are addressed by their *ordering index*: with a basis
``(g_1 = 1, g_2, ..., g_r)`` the index ``n = n_1 + n_2 p + ... + n_r p^(r-1)``
names the element ``n_1 g_1 + ... + n_r g_r``.  Basis vectors themselves are
given as *polynomial codes*, i.e. ordering indices under the default
polynomial basis ``1, x, ..., x^(r-1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .number_theory import check_odd_prime, factorize

MAX_ORDER = 2**26


class FieldError(ValueError):
    """Invalid field parameters (reducible modulus, dependent basis, cap)."""


# -- polynomials over F_p as coefficient lists, lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pmod(out, m, p)


def _ppowmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test over F_p."""
    m = _trim([int(c) % p for c in modulus])
    r = len(m) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p**r, m, p) != _pmod(x, m, p):
        return False
    for ell in factorize(r):
        h = _ppowmod(x, p ** (r // ell), m, p)
        diff = h + [0] * max(0, 2 - len(h))
        diff[1] -= 1
        diff = _trim([c % p for c in diff])
        if len(_pgcd(m, diff, p)) != 1:
            return False
    return True


def find_irreducible(p: int, r: int) -> list[int]:
    """Monic irreducible of degree ``r`` with smallest code ``sum c_i p^i``."""
    check_odd_prime(p)
    if r < 1:
        raise FieldError("extension degree must be positive")
    if p**r > MAX_ORDER:
        raise FieldError(f"field order {p}^{r} exceeds cap {MAX_ORDER}")
    if r == 1:
        return [0, 1]
    for code in range(p**r):
        coeffs = [(code // p**i) % p for i in range(r)] + [1]
        if coeffs[0] != 0 and is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("unreachable: irreducibles exist in every degree")


# -- digit helpers ------------------------------------------------------------

def _digits(codes: np.ndarray, p: int, r: int) -> np.ndarray:
    out = np.empty((codes.size, r), dtype=np.int64)
    rest = codes.astype(np.int64)
    for i in range(r):
        rest, out[:, i] = np.divmod(rest, p)
    return out


def _undigits(digits: np.ndarray, p: int) -> np.ndarray:
    weights = p ** np.arange(digits.shape[1], dtype=np.int64)
    return digits @ weights


def _code_to_poly(code: int, p: int, r: int) -> list[int]:
    return _trim([(code // p**i) % p for i in range(r)])


def _poly_to_code(poly: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(poly))


@dataclass(frozen=True, eq=False)
class FieldDescriptor:
    """A fully tabulated F_q.  Immutable once built."""

    p: int
    r: int
    modulus: tuple[int, ...]
    basis: tuple[int, ...]
    alpha_index: int
    index_to_code: np.ndarray = field(repr=False)
    code_to_index: np.ndarray = field(repr=False)
    exp_table: np.ndarray = field(repr=False)
    log_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.r

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "modulus": list(self.modulus),
            "alpha_index": self.alpha_index,
            "basis": list(self.basis),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> FieldDescriptor:
        f = build_field(d["p"], d["r"], modulus=d["modulus"],
                        gamma_override=d["basis"][1:] or None,
                        alpha_index=d["alpha_index"])
        return f

    @classmethod
    def from_json(cls, text: str) -> FieldDescriptor:
        return cls.from_dict(json.loads(text))

    # -- element arithmetic on ordering indices ------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise IndexError(f"element index {a} outside [0, {self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        ca, cb = int(self.index_to_code[self._check(a)]), int(self.index_to_code[self._check(b)])
        code = sum(((ca // p**i + cb // p**i) % p) * p**i for i in range(r))
        return int(self.code_to_index[code])

    def negate(self, a: int) -> int:
        p, r = self.p, self.r
        ca = int(self.index_to_code[self._check(a)])
        code = sum((-(ca // p**i)) % p * p**i for i in range(r))
        return int(self.code_to_index[code])

    def subtract(self, a: int, b: int) -> int:
        return self.add(a, self.negate(b))

    def multiply(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if a == 0 or b == 0:
            return 0
        e = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        return int(self.exp_table[e])

    def inverse(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def power(self, a: int, e: int) -> int:
        if self._check(a) == 0:
            if e <= 0:
                raise ZeroDivisionError("non-positive power of zero")
            return 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def discrete_log(self, a: int) -> int:
        """Exponent ``e`` in ``[0, q-2]`` with ``alpha**e == a``."""
        if self._check(a) == 0:
            raise ValueError("discrete log of zero is undefined")
        return int(self.log_table[a])

    def quadratic_character(self, a: int) -> int:
        if self._check(a) == 0:
            return 0
        return 1 if self.log_table[a] % 2 == 0 else -1

    def character_table(self) -> np.ndarray:
        """chi over all ordering indices, with chi(0) = 0."""
        chi = np.where(self.log_table % 2 == 0, 1, -1).astype(np.int8)
        chi[0] = 0
        return chi

    def in_prime_field(self, a: int) -> bool:
        return int(self.index_to_code[self._check(a)]) < self.p

    def select_gamma(self, desired: int) -> int:
        return select_gamma(self, desired)


def _mul_matrix(code: int, modulus: list[int], p: int, r: int) -> np.ndarray:
    """Matrix M with digits(a * b) = digits(b) @ M for the fixed element a."""
    a = _code_to_poly(code, p, r)
    rows = []
    for j in range(r):
        xj = [0] * j + [1]
        prod = _pmulmod(a, xj, modulus, p)
        rows.append(prod + [0] * (r - len(prod)))
    return np.array(rows, dtype=np.int64)


def _is_generator(code: int, modulus: list[int], p: int, r: int) -> bool:
    q = p**r
    a = _code_to_poly(code, p, r)
    if not a:
        return False
    for ell in factorize(q - 1) if q > 2 else ():
        if _ppowmod(a, (q - 1) // ell, modulus, p) == [1]:
            return False
    return True


def _power_codes(code: int, modulus: list[int], p: int, r: int) -> np.ndarray:
    """Polynomial codes of a^0, a^1, ..., a^(q-2), by block doubling."""
    q = p**r
    n = q - 1
    digits = np.zeros((n, r), dtype=np.int64)
    digits[0, 0] = 1
    filled = 1
    step = _mul_matrix(code, modulus, p, r)  # multiplication by a^filled
    while filled < n:
        take = min(filled, n - filled)
        digits[filled:filled + take] = (digits[:take] @ step) % p
        filled += take
        step = (step @ step) % p
    return _undigits(digits, p)


def build_field(p: int, r: int, modulus: Sequence[int] | None = None,
                gamma_override: Sequence[int] | None = None,
                alpha_index: int | None = None) -> FieldDescriptor:
    """Construct F_{p^r} with exp/log tables and the element ordering.

    ``gamma_override`` replaces ``g_2..g_r`` (given as polynomial codes).
    ``alpha_index`` forces the primitive element (an ordering index); by
    default the generator of smallest ordering index is used.
    """
    check_odd_prime(p)
    if r < 1:
        raise FieldError("extension degree must be positive")
    q = p**r
    if q > MAX_ORDER:
        raise FieldError(f"field order {p}^{r} = {q} exceeds cap {MAX_ORDER}")
    if modulus is None:
        mod = find_irreducible(p, r)
    else:
        mod = [int(c) % p for c in modulus]
        if len(_trim(list(mod))) != r + 1 or mod[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {r}")
        if not is_irreducible(mod, p):
            raise FieldError(f"modulus {mod} is reducible over F_{p}")

    basis = [1] + [p**i for i in range(1, r)]
    if gamma_override is not None:
        gamma = [int(g) for g in gamma_override]
        if len(gamma) != r - 1:
            raise FieldError(f"expected {r - 1} basis overrides, got {len(gamma)}")
        basis = [1] + gamma
    basis_digits = _digits(np.array(basis, dtype=np.int64), p, r)
    index_to_code = _undigits((_digits(np.arange(q), p, r) @ basis_digits) % p, p)
    code_to_index = np.full(q, -1, dtype=np.int64)
    code_to_index[index_to_code] = np.arange(q)
    if np.any(code_to_index < 0):
        raise FieldError(f"basis {basis} is linearly dependent over F_{p}")

    if alpha_index is None:
        alpha_index = next(n for n in range(1, q)
                           if _is_generator(int(index_to_code[n]), mod, p, r))
    elif not (0 < alpha_index < q and
              _is_generator(int(index_to_code[alpha_index]), mod, p, r)):
        raise FieldError(f"element {alpha_index} is not a primitive element")

    exp_table = code_to_index[_power_codes(int(index_to_code[alpha_index]), mod, p, r)]
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(q - 1)
    for arr in (index_to_code, code_to_index, exp_table, log_table):
        arr.setflags(write=False)
    return FieldDescriptor(p=p, r=r, modulus=tuple(mod), basis=tuple(basis),
                           alpha_index=int(alpha_index),
                           index_to_code=index_to_code,
                           code_to_index=code_to_index,
                           exp_table=exp_table, log_table=log_table)


def select_gamma(f: FieldDescriptor, desired: int) -> int:
    """Smallest polynomial code outside F_p whose quadratic character is ``desired``.

    Returned as a polynomial code, ready to pass as ``gamma_override``.
    """
    if f.r != 2:
        raise FieldError("gamma selection is defined for r = 2 only")
    if desired not in (1, -1):
        raise ValueError("desired character must be +1 or -1")
    for code in range(f.p, f.q):
        if f.quadratic_character(int(f.code_to_index[code])) == desired:
            return code
    raise AssertionError("unreachable: both characters occur outside F_p")


def build_field_with_gamma(p: int, chi_gamma: int, modulus: Sequence[int] | None = None,
                           alpha_index: int | None = None) -> FieldDescriptor:
    """F_{p^2} with basis ``{1, gamma}`` where ``chi(gamma) == chi_gamma``."""
    base = build_field(p, 2, modulus=modulus)
    gamma = select_gamma(base, chi_gamma)
    return build_field(p, 2, modulus=base.modulus, gamma_override=[gamma],
                       alpha_index=alpha_index)
