"""Linear complexity and k-error linear complexity over GF(2).

Three independent engines live here:

* ``linear_complexity_gcd``: ``T - deg gcd(X^T - 1, S(X))`` by Euclid.
* ``linear_complexity_bm``: Berlekamp-Massey over two periods.
* ``k_error_profile_full``: exhaustive scan of all ``2^T`` candidate periods,
  vectorized with numpy.  LC of every candidate is read off from which
  prime-power factors of ``X^T - 1`` divide its generating polynomial, a
  linear condition evaluated through XOR residue tables.

``k_error_lc_enum`` searches error patterns of bounded weight with the gcd
engine and returns a deterministic witness.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator

import numpy as np

from .number_theory import (check_odd_prime, is_two_primitive_mod_p_squared,
                            is_wieferich, lambda_of)
from .poly2 import BinaryPolynomial, _divmod, _gcd, _mul, _rem
from .sequences import BinarySequence

DEFAULT_BUDGET = 2**28
FULL_ENUM_MAX_PERIOD = 26

EXACT_ENUM = "exact-enum"
FULL_ENUM = "full-enum"
BOUND_ONLY = "bound-only"


@dataclass(frozen=True)
class ProfileEntry:
    k: int
    lc: int
    method: str
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "lc": self.lc, "method": self.method,
                "witness": list(self.witness) if self.witness is not None else None}


@dataclass(frozen=True)
class ComplexityProfile:
    period: int
    entries: tuple[ProfileEntry, ...]

    def __getitem__(self, k: int) -> ProfileEntry:
        entry = self.entries[k]
        assert entry.k == k
        return entry

    def values(self) -> list[int]:
        return [e.lc for e in self.entries]

    def to_dict(self) -> dict[str, Any]:
        return {"period": self.period, "profile": [e.to_dict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ComplexityProfile:
        entries = tuple(
            ProfileEntry(e["k"], e["lc"], e["method"],
                         tuple(e["witness"]) if e.get("witness") is not None else None)
            for e in d["profile"])
        return cls(d["period"], entries)

    @classmethod
    def from_json(cls, text: str) -> ComplexityProfile:
        return cls.from_dict(json.loads(text))


# -- plain linear complexity -------------------------------------------------

def _lc_bits(bits: int, T: int) -> int:
    if bits == 0:
        return 0
    return T - (_gcd((1 << T) | 1, bits).bit_length() - 1)


def linear_complexity_gcd(s: BinarySequence) -> tuple[int, BinaryPolynomial]:
    """LC and characteristic polynomial ``(X^T - 1) / gcd(X^T - 1, S(X))``."""
    T = s.period
    modulus = (1 << T) | 1
    S = s.as_int()
    if S == 0:
        return 0, BinaryPolynomial(1)
    g = _gcd(modulus, S)
    char, r = _divmod(modulus, g)
    assert r == 0
    return T - (g.bit_length() - 1), BinaryPolynomial(char)


def linear_complexity_bm(s: BinarySequence) -> int:
    """Berlekamp-Massey over GF(2), fed two full periods."""
    terms = np.concatenate([s.bits, s.bits])
    c, b = 1, 1  # connection polynomials, bit j = coefficient of X^j
    L, m = 0, 1
    window = 0  # bit j holds s_{n-j}
    for n, bit in enumerate(terms):
        window = (window << 1) | int(bit)
        if (c & window).bit_count() & 1:
            t = c
            c ^= b << m
            if 2 * L <= n:
                L, b, m = n + 1 - L, t, 1
                continue
        m += 1
    return L


# -- bounded-weight search ---------------------------------------------------

def _colex(T: int, w: int) -> Iterator[tuple[int, ...]]:
    """w-subsets of range(T) in colexicographic order."""
    if w == 0:
        yield ()
        return
    for top in range(w - 1, T):
        for rest in _colex(top, w - 1):
            yield rest + (top,)


def _flip_lc(bits: int, T: int, modulus: int, support) -> int:
    v = bits
    for i in support:
        v ^= 1 << i
    return 0 if v == 0 else T - (_gcd(modulus, v).bit_length() - 1)


def _search_block(args: tuple[int, int, int, int]) -> tuple[int, tuple[int, ...]]:
    """Best (lc, support) over supports of size ``w`` whose largest index is ``top``."""
    bits, T, w, top = args
    modulus = (1 << T) | 1
    base = bits ^ (1 << top)
    best: tuple[int, tuple[int, ...]] | None = None
    for rest in itertools.combinations(range(top), w - 1):
        cand = (_flip_lc(base, T, modulus, rest), rest + (top,))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def _search_weight(bits: int, T: int, w: int, pool) -> tuple[int, tuple[int, ...]]:
    # Supports of weight w partition by their largest element; blocks are
    # reduced under the total order on (lc, support), so the result does not
    # depend on how blocks are scheduled.
    tasks = [(bits, T, w, top) for top in range(w - 1, T)]
    if pool is None:
        results = map(_search_block, tasks)
    else:
        results = pool.map(_search_block, tasks, chunksize=max(1, len(tasks) // 16))
    return min(results)


class _Search:
    """Weight-by-weight minimization shared by single-k and profile queries.

    Witnesses are ordered by (lc, weight, support), so once LC 0 is reached
    no heavier pattern can improve the answer.
    """

    def __init__(self, s: BinarySequence, budget: int | None, workers: int):
        self.T = s.period
        self.bits = s.as_int()
        self.budget = default_budget() if budget is None else budget
        self.workers = workers
        self.best: tuple[int, tuple[int, ...]] = (_lc_bits(self.bits, self.T), ())
        self.done_weight = 0
        self.spent = 1
        self.truncated = False
        self._pool = None

    def __enter__(self):
        if self.workers > 1:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
        return self

    def __exit__(self, *exc):
        if self._pool is not None:
            self._pool.shutdown()

    def advance_to(self, k: int) -> ProfileEntry:
        while self.done_weight < k and self.best[0] > 0 and not self.truncated:
            w = self.done_weight + 1
            count = math.comb(self.T, w)
            if self.spent + count > self.budget:
                self._partial_weight(w)
                break
            cand = _search_weight(self.bits, self.T, w, self._pool)
            self.spent += count
            if cand[0] < self.best[0]:
                self.best = cand
            self.done_weight = w
        method = BOUND_ONLY if self.truncated and self.best[0] > 0 else EXACT_ENUM
        return ProfileEntry(k, self.best[0], method, self.best[1])

    def _partial_weight(self, w: int) -> None:
        modulus = (1 << self.T) | 1
        local = None
        for support in _colex(self.T, w):
            if self.spent >= self.budget:
                break
            self.spent += 1
            cand = (_flip_lc(self.bits, self.T, modulus, support), support)
            if local is None or cand < local:
                local = cand
        if local is not None and local[0] < self.best[0]:
            self.best = local
        self.truncated = True


def k_error_lc_enum(s: BinarySequence, k: int, budget: int | None = None,
                    workers: int = 1) -> ProfileEntry:
    """Minimum LC over all flips of at most ``k`` positions.

    The witness is the lightest support reaching the minimum, ties broken
    lexicographically.  Supports are scanned by weight; once ``budget``
    patterns are spent the scan stops (colex order inside the last weight)
    and the result is an upper bound tagged ``bound-only``.
    """
    if not 0 <= k <= s.period:
        raise ValueError(f"k must lie in [0, {s.period}]")
    with _Search(s, budget, workers) as search:
        return search.advance_to(k)


def k_error_profile_enum(s: BinarySequence, k_max: int, budget: int | None = None,
                         workers: int = 1) -> ComplexityProfile:
    if not 0 <= k_max <= s.period:
        raise ValueError(f"k_max must lie in [0, {s.period}]")
    with _Search(s, budget, workers) as search:
        entries = tuple(search.advance_to(k) for k in range(k_max + 1))
    return ComplexityProfile(s.period, entries)


# -- exhaustive profile ------------------------------------------------------

def _factor_small(f: int) -> dict[int, int]:
    """Irreducible factorization of a small GF(2) polynomial by trial division.

    Candidates are tried in increasing integer order, so every divisor that
    is found is irreducible.
    """
    factors: dict[int, int] = {}
    d = 2  # X
    while f.bit_length() - 1 >= 2 * (d.bit_length() - 1):
        while f.bit_length() > 1:
            q, r = _divmod(f, d)
            if r:
                break
            factors[d] = factors.get(d, 0) + 1
            f = q
        d += 1
    if f.bit_length() > 1:
        factors[f] = factors.get(f, 0) + 1
    return factors


def _divisibility_conditions(T: int) -> list[tuple[int, int]]:
    """(modulus g, weight deg f) for every prime power g = f^j dividing X^T - 1."""
    conds = []
    for f, e in sorted(_factor_small((1 << T) | 1).items()):
        g = 1
        for _ in range(e):
            g = _mul(g, f)
            conds.append((g, f.bit_length() - 1))
    return conds


def _residue_table(g: int, positions: range) -> np.ndarray:
    """XOR-span table: entry ``m`` is ``sum_{bit i of m} X^(positions[i]) mod g``."""
    n = len(positions)
    basis = [_rem(1 << i, g) for i in positions]
    table = np.zeros(1 << n, dtype=np.uint32)
    for b, r in enumerate(basis):
        table[1 << b: 2 << b] = table[: 1 << b] ^ np.uint32(r)
    return table


def k_error_profile_full(s: BinarySequence, low_bits: int = 20) -> ComplexityProfile:
    """Exact ``LC_k`` for every ``k`` by scanning all ``2^T`` candidate periods."""
    T = s.period
    if T > FULL_ENUM_MAX_PERIOD:
        raise ValueError(f"full enumeration needs T <= {FULL_ENUM_MAX_PERIOD}, got {T}")
    L = min(T, low_bits)
    H = T - L
    conds = _divisibility_conditions(T)
    low_tabs = [_residue_table(g, range(L)) for g, _ in conds]
    high_tabs = [_residue_table(g, range(L, T)) for g, _ in conds]
    low_idx = np.arange(1 << L, dtype=np.uint32)
    target = s.as_int()
    low_dist = np.bitwise_count(low_idx ^ np.uint32(target & ((1 << L) - 1))).astype(np.int32)
    target_high = target >> L

    seen = np.zeros((T + 1) * (T + 1), dtype=bool)
    for h in range(1 << H):
        lc = np.full(1 << L, T, dtype=np.int32)
        for (_, deg), lo, hi in zip(conds, low_tabs, high_tabs):
            lc -= deg * ((lo ^ hi[h]) == 0)
        dist = low_dist + (h ^ target_high).bit_count()
        seen[dist * (T + 1) + lc] = True

    seen = seen.reshape(T + 1, T + 1)
    best = np.array([np.flatnonzero(row)[0] if row.any() else T + 1 for row in seen])
    profile = np.minimum.accumulate(best)
    entries = tuple(ProfileEntry(k, int(v), FULL_ENUM) for k, v in enumerate(profile))
    return ComplexityProfile(T, entries)


# -- theorem instantiation ---------------------------------------------------

EXACT = "exact"
LOWER_BOUND = "lower-bound"
UNSPECIFIED = "unspecified"


class HypothesisError(ValueError):
    """A theorem's hypotheses do not hold for the requested parameters."""


@dataclass(frozen=True)
class Piece:
    k_lo: int
    k_hi: int  # inclusive
    value: int | None
    kind: str

    def covers(self, k: int) -> bool:
        return self.k_lo <= k <= self.k_hi

    def to_dict(self) -> dict[str, Any]:
        return {"k_lo": self.k_lo, "k_hi": self.k_hi, "value": self.value, "kind": self.kind}


@dataclass(frozen=True)
class TheoremPrediction:
    source: str
    period: int
    pieces: tuple[Piece, ...]
    hypotheses: dict[str, Any] = field(default_factory=dict)

    def at(self, k: int) -> Piece:
        for piece in self.pieces:
            if piece.covers(k):
                return piece
        raise KeyError(k)

    def to_dict(self) -> dict[str, Any]:
        return {"source": self.source, "period": self.period,
                "pieces": [pc.to_dict() for pc in self.pieces],
                "hypotheses": self.hypotheses}


def _pieces(spans: list[tuple[int, int, int | None, str]], T: int) -> tuple[Piece, ...]:
    out = [Piece(lo, hi, v, kind) for lo, hi, v, kind in spans if lo <= hi]
    assert out[0].k_lo == 0 and out[-1].k_hi == T
    assert all(a.k_hi + 1 == b.k_lo for a, b in zip(out, out[1:]))
    return tuple(out)


def _check_bound_hypotheses(p: int) -> int:
    check_odd_prime(p)
    if is_wieferich(p):
        raise HypothesisError(f"{p} is a Wieferich prime")
    lam = lambda_of(p)
    if not 1 < lam < p:
        raise HypothesisError(f"order of 2 modulo {p} is {lam}, need 1 < lambda < p")
    return lam


def lower_bound_lc(p: int, r: int) -> int:
    """``lambda * p^(r-1)`` for non-Wieferich ``p``."""
    if r < 2:
        raise ValueError("the bound is stated for r >= 2")
    return _check_bound_hypotheses(p) * p ** (r - 1)


def lower_bound_klc(p: int, chi_gamma: int) -> tuple[int, int]:
    """(bound ``lambda * p``, exclusive upper end of the k range it holds on)."""
    lam = _check_bound_hypotheses(p)
    half = (p - 1) ** 2 // 2
    if chi_gamma == 1:
        return lam * p, half
    if chi_gamma == -1:
        return lam * p, half + 1
    raise ValueError("chi_gamma must be +1 or -1")


def predict_lc_bound(p: int, r: int) -> TheoremPrediction:
    T = p**r
    bound = lower_bound_lc(p, r)
    return TheoremPrediction(
        "Thm1", T,
        _pieces([(0, 0, bound, LOWER_BOUND), (1, T, None, UNSPECIFIED)], T),
        {"non_wieferich": True, "lambda": lambda_of(p)})


def predict_klc_bound(p: int, chi_gamma: int) -> TheoremPrediction:
    T = p * p
    bound, k_end = lower_bound_klc(p, chi_gamma)
    return TheoremPrediction(
        "Thm2", T,
        _pieces([(0, k_end - 1, bound, LOWER_BOUND), (k_end, T, None, UNSPECIFIED)], T),
        {"non_wieferich": True, "lambda": lambda_of(p), "chi_gamma": chi_gamma})


def predict_profile(p: int, chi_gamma: int) -> TheoremPrediction:
    """Exact k-error profile for r = 2 when 2 is primitive modulo p^2."""
    check_odd_prime(p)
    if chi_gamma not in (1, -1):
        raise ValueError("chi_gamma must be +1 or -1")
    if not is_two_primitive_mod_p_squared(p):
        raise HypothesisError(f"2 is not primitive modulo {p}^2")
    residue = p % 8
    if residue not in (3, 5):
        raise HypothesisError(f"p = {p} is {residue} mod 8; no profile is stated")
    T = p * p
    half = (p - 1) ** 2 // 2
    top = (T - 1) // 2
    # The "rich" shape (p^2-1, p^2-p+1, p^2-p) occurs for chi = +1, p = 5 mod 8
    # and chi = -1, p = 3 mod 8; otherwise LC_0 is already p^2 - p.
    rich = (chi_gamma == 1) == (residue == 5)
    drop_at = half if chi_gamma == 1 else half + 1
    drop_value = p - 1 if chi_gamma == 1 else p
    if rich:
        spans = [(0, 0, T - 1, EXACT),
                 (1, p - 2, T - p + 1, EXACT),
                 (p - 1, drop_at - 1, T - p, EXACT)]
    else:
        spans = [(0, drop_at - 1, T - p, EXACT)]
    spans += [(drop_at, drop_at, drop_value, EXACT),
              (drop_at + 1, top - 1, None, UNSPECIFIED),
              (top, T, 0, EXACT)]
    theorem = "Thm3" if chi_gamma == 1 else "Thm4"
    case = "case1" if residue == 5 else "case2"
    return TheoremPrediction(
        f"{theorem}-{case}", T, _pieces(spans, T),
        {"non_wieferich": not is_wieferich(p), "two_primitive_mod_p2": True,
         "chi_gamma": chi_gamma, "p_mod_8": residue})


def default_budget() -> int:
    value = os.environ.get("CHARSEQ_BUDGET")
    return int(value) if value else DEFAULT_BUDGET
