"""Binary and d-ary sequences built from the discrete logarithm of F_q."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from typing import Any, Union

import numpy as np

from .gf import FieldDescriptor, FieldError, build_field, select_gamma
from .number_theory import legendre_symbol, check_odd_prime
from .poly2 import BinaryPolynomial

KINDS = ("character", "indexed", "modified", "sidelnikov")

Gamma = Union[str, int]  # "default", "+1", "-1" or an explicit polynomial code


@dataclass(frozen=True)
class SequenceSpec:
    """A reproducible construction recipe.

    ``gamma`` is ``"default"`` (polynomial basis), ``"+1"``/``"-1"`` (pick
    gamma by its quadratic character, r = 2 only) or an explicit
    polynomial code for the second basis vector.
    """

    kind: str
    p: int
    r: int
    modulus: tuple[int, ...] | None = None
    alpha_index: int | None = None
    gamma: Gamma = "default"
    d: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        check_odd_prime(self.p)
        if self.r < 1:
            raise ValueError("r must be positive")
        if self.kind == "modified" and self.r != 2:
            raise ValueError("the modified construction needs r = 2")
        if self.kind == "indexed":
            if self.d is None or self.d < 2:
                raise ValueError("indexed sequences need d >= 2")
        elif self.d is not None:
            raise ValueError("d only applies to indexed sequences")
        if self.gamma in ("+1", "-1") and self.r != 2:
            raise ValueError("gamma selection by character needs r = 2")
        if self.modulus is not None:
            object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))

    def build_field(self) -> FieldDescriptor:
        if self.gamma == "default":
            override = None
        elif self.gamma in ("+1", "-1"):
            base = build_field(self.p, self.r, modulus=self.modulus)
            override = [select_gamma(base, int(self.gamma))]
        else:
            if self.r != 2:
                raise FieldError("an explicit gamma needs r = 2")
            override = [int(self.gamma)]
        return build_field(self.p, self.r, modulus=self.modulus,
                           gamma_override=override, alpha_index=self.alpha_index)

    def generate(self, f: FieldDescriptor | None = None):
        f = f if f is not None else self.build_field()
        if self.kind == "character":
            seq = gen_character_sequence(f)
        elif self.kind == "indexed":
            seq = gen_indexed_sequence(f, self.d)
        elif self.kind == "modified":
            seq = gen_modified_sequence(f)
        else:
            seq = gen_sidelnikov(f)
        return seq.with_spec(self)

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["modulus"] is not None:
            d["modulus"] = list(d["modulus"])
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> SequenceSpec:
        return cls(**d)


@dataclass(frozen=True, eq=False)
class BinarySequence:
    """One period of a binary sequence."""

    bits: np.ndarray
    spec: SequenceSpec | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        arr = np.asarray(self.bits, dtype=np.uint8)
        if arr.ndim != 1 or arr.size < 1:
            raise ValueError("a sequence period must be a non-empty 1-d array")
        if np.any(arr > 1):
            raise ValueError("binary sequence entries must be 0 or 1")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "bits", arr)

    @property
    def period(self) -> int:
        return int(self.bits.size)

    def __len__(self):
        return self.period

    def __eq__(self, other):
        if isinstance(other, BinarySequence):
            return np.array_equal(self.bits, other.bits)
        return NotImplemented

    def weight(self) -> int:
        return int(self.bits.sum())

    def as_int(self) -> int:
        """Bit-packed form, bit ``i`` holding ``s_i``."""
        return int(self.to_text()[::-1], 2)

    @classmethod
    def from_int(cls, value: int, period: int) -> BinarySequence:
        return cls([(value >> i) & 1 for i in range(period)])

    def flip(self, positions) -> BinarySequence:
        bits = self.bits.copy()
        for i in positions:
            bits[i] ^= 1
        return BinarySequence(bits)

    def with_spec(self, spec: SequenceSpec) -> BinarySequence:
        return BinarySequence(self.bits, spec, dict(self.metadata))

    def to_text(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from_text(cls, text: str) -> BinarySequence:
        line = text.strip()
        if not line or set(line) - {"0", "1"}:
            raise ValueError("sequence text must be a single line of 0/1")
        return cls([int(c) for c in line])

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "spec": self.spec.to_dict() if self.spec else None,
            "period": self.period,
            "bits": self.to_text(),
        }
        if self.metadata:
            d["metadata"] = self.metadata
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> BinarySequence:
        seq = cls.from_text(d["bits"])
        if "period" in d and d["period"] != seq.period:
            raise ValueError("declared period does not match the bit string")
        spec = SequenceSpec.from_dict(d["spec"]) if d.get("spec") else None
        return cls(seq.bits, spec, d.get("metadata", {}))

    @classmethod
    def from_json(cls, text: str) -> BinarySequence:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True, eq=False)
class DarySequence:
    """One period of a sequence over Z_d."""

    symbols: np.ndarray
    d: int
    spec: SequenceSpec | None = None

    def __post_init__(self):
        arr = np.asarray(self.symbols, dtype=np.int64).copy()
        if self.d < 2 or np.any(arr < 0) or np.any(arr >= self.d):
            raise ValueError("symbols must lie in [0, d) with d >= 2")
        arr.setflags(write=False)
        object.__setattr__(self, "symbols", arr)

    @property
    def period(self) -> int:
        return int(self.symbols.size)

    def with_spec(self, spec: SequenceSpec) -> DarySequence:
        return DarySequence(self.symbols, self.d, spec)

    def to_binary(self) -> BinarySequence:
        if self.d != 2:
            raise ValueError("only d = 2 sequences are binary")
        return BinarySequence(self.symbols, self.spec)

    def to_text(self) -> str:
        if self.d > 10:
            raise ValueError("text form holds single digits only (d <= 10)")
        return "".join(str(int(s)) for s in self.symbols)

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec.to_dict() if self.spec else None,
            "period": self.period,
            "d": self.d,
            "bits": self.to_text() if self.d <= 10 else None,
            "symbols": [int(s) for s in self.symbols],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> DarySequence:
        spec = SequenceSpec.from_dict(d["spec"]) if d.get("spec") else None
        return cls(np.array(d["symbols"]), d["d"], spec)


# -- generators ---------------------------------------------------------------

def gen_character_sequence(f: FieldDescriptor) -> BinarySequence:
    """sigma_n = (1 - chi(xi_n)) / 2 for n >= 1, sigma_0 = 0."""
    return BinarySequence(f.character_table() == -1)


def gen_indexed_sequence(f: FieldDescriptor, d: int) -> DarySequence:
    if d < 2:
        raise ValueError("d must be at least 2")
    symbols = np.where(f.log_table < 0, 0, f.log_table % d)
    return DarySequence(symbols, d)


def gen_modified_sequence(f: FieldDescriptor) -> BinarySequence:
    if f.r != 2:
        raise ValueError("the modified construction needs r = 2")
    p = f.p
    chi = f.character_table().astype(np.int64)
    leg = np.array([legendre_symbol(i, p) for i in range(p)], dtype=np.int64)
    n = np.arange(f.q)
    i, j = n % p, n // p
    signs = np.where(i == 0, leg[j], leg[i] * chi)
    signs[0] = 1
    return BinarySequence(signs == -1)


def gen_sidelnikov(f: FieldDescriptor) -> BinarySequence:
    """rho_n = (1 - chi(alpha^n - 1)) / 2, with rho_{(q-1)/2} = 0.

    At n = 0 the argument alpha^0 - 1 vanishes; the bit there is 0 and the
    position is recorded under ``metadata["zero_argument_positions"]``.
    """
    q, p = f.q, f.p
    if q < 3:
        raise ValueError("need q >= 3")
    codes = f.index_to_code[f.exp_table]
    const = codes % p
    shifted = codes - const + (const - 1) % p
    chi = f.character_table()[f.code_to_index[shifted]]
    bits = chi == -1
    bits[(q - 1) // 2] = 0
    return BinarySequence(bits, metadata={"zero_argument_positions": [0]})


# -- structural statistics ----------------------------------------------------

def _check_square_period(s: BinarySequence, p: int) -> None:
    check_odd_prime(p)
    if s.period != p * p:
        raise ValueError(f"period {s.period} is not p^2 = {p * p}")


def weight_vectors(s: BinarySequence, p: int) -> list[int]:
    """Weights of the columns ``(s_i, s_{i+p}, ..., s_{i+(p-1)p})``."""
    _check_square_period(s, p)
    return [int(w) for w in s.bits.reshape(p, p).sum(axis=0)]


def column_polynomials(s: BinarySequence, p: int) -> list[BinaryPolynomial]:
    """``V_i(X) = sum_j s_{i+jp} X^{i+jp}`` for ``0 <= i < p``."""
    _check_square_period(s, p)
    polys = []
    for i in range(p):
        polys.append(BinaryPolynomial.from_exponents(
            n for n in range(i, p * p, p) if s.bits[n]))
    return polys


def generating_polynomial(s: BinarySequence) -> BinaryPolynomial:
    return BinaryPolynomial(s.as_int())


def least_period(s: BinarySequence) -> int:
    T = s.period
    for t in range(1, T + 1):
        if T % t == 0 and np.array_equal(s.bits, np.tile(s.bits[:t], T // t)):
            return t
    return T
