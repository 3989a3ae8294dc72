"""Instantiate the bound and exact-profile theorems and measure against them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .complexity import (BOUND_ONLY, EXACT, FULL_ENUM_MAX_PERIOD,
                         UNSPECIFIED, HypothesisError, ProfileEntry,
                         TheoremPrediction, k_error_lc_enum, k_error_profile_full,
                         linear_complexity_gcd, predict_klc_bound, predict_lc_bound,
                         predict_profile)
from .gf import build_field, build_field_with_gamma
from .sequences import gen_character_sequence

MATCH, VIOLATION, UNCHECKED = "match", "violation", "unchecked"


@dataclass
class PieceVerdict:
    k_lo: int
    k_hi: int
    kind: str
    predicted: int | None
    measured: dict[int, int]
    verdict: str
    bound_only_k: list[int] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"k_lo": self.k_lo, "k_hi": self.k_hi, "kind": self.kind,
                "predicted": self.predicted,
                "measured": {str(k): v for k, v in sorted(self.measured.items())},
                "bound_only_k": self.bound_only_k, "verdict": self.verdict}


@dataclass
class VerifyReport:
    theorem: int
    parameters: dict[str, Any]
    prediction: TheoremPrediction
    pieces: list[PieceVerdict]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        verdicts = {pc.verdict for pc in self.pieces}
        if VIOLATION in verdicts:
            return VIOLATION
        return MATCH if MATCH in verdicts else UNCHECKED

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        d = {"theorem": self.theorem, "parameters": self.parameters,
             "source": self.prediction.source,
             "hypotheses": self.prediction.hypotheses,
             "pieces": [pc.to_dict() for pc in self.pieces],
             "verdict": self.verdict}
        if timing:
            d["timings"] = self.timings
        return d


def judge(prediction: TheoremPrediction, measured: dict[int, ProfileEntry]) -> list[PieceVerdict]:
    """Compare measured LC_k values against every piece of a prediction.

    A ``bound-only`` measurement is an upper bound on LC_k: it can expose a
    violation but never confirm a piece.
    """
    out = []
    for piece in prediction.pieces:
        ks = [k for k in sorted(measured) if piece.covers(k)]
        values = {k: measured[k].lc for k in ks}
        loose = [k for k in ks if measured[k].method == BOUND_ONLY]
        verdict = UNCHECKED
        if piece.kind != UNSPECIFIED and ks:
            bad = False
            confirmed = False
            for k in ks:
                v = values[k]
                if piece.kind == EXACT:
                    if k in loose:
                        bad |= v < piece.value
                    else:
                        bad |= v != piece.value
                        confirmed = True
                else:  # lower bound
                    bad |= v < piece.value
                    confirmed |= k not in loose
            verdict = VIOLATION if bad else MATCH if confirmed else UNCHECKED
        out.append(PieceVerdict(piece.k_lo, piece.k_hi, piece.kind, piece.value,
                                values, verdict, loose))
    return out


def _measure_profile(s, k_max: int, budget: int | None, workers: int) -> dict[int, ProfileEntry]:
    if s.period <= FULL_ENUM_MAX_PERIOD:
        return {e.k: e for e in k_error_profile_full(s).entries}
    measured = {}
    for k in range(k_max + 1):
        measured[k] = k_error_lc_enum(s, k, budget=budget, workers=workers)
    return measured


def verify_theorem(theorem: int, p: int, r: int = 2, chi_gamma: int | None = None,
                   k_max: int = 3, budget: int | None = None,
                   workers: int = 1) -> VerifyReport:
    """Build sigma for (p, r, chi(gamma)), measure it and judge each piece.

    Raises HypothesisError when the theorem does not apply.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    if theorem == 1:
        prediction = predict_lc_bound(p, r)
    elif theorem in (2, 3, 4):
        if r != 2:
            raise HypothesisError(f"theorem {theorem} is stated for r = 2")
        if chi_gamma is None:
            raise HypothesisError("a gamma sign is required")
        implied = {3: 1, 4: -1}.get(theorem)
        if implied is not None and chi_gamma != implied:
            raise HypothesisError(f"theorem {theorem} needs chi(gamma) = {implied:+d}")
        prediction = (predict_klc_bound(p, chi_gamma) if theorem == 2
                      else predict_profile(p, chi_gamma))
    else:
        raise ValueError(f"unknown theorem {theorem}")
    timings["predict"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if chi_gamma is not None and r == 2:
        f = build_field_with_gamma(p, chi_gamma)
    else:
        f = build_field(p, r)
    s = gen_character_sequence(f)
    timings["generate"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    if theorem == 1:
        lc, _ = linear_complexity_gcd(s)
        measured = {0: ProfileEntry(0, lc, "gcd")}
    else:
        measured = _measure_profile(s, k_max, budget, workers)
    timings["measure"] = time.perf_counter() - t0

    params = {"p": p, "r": r, "chi_gamma": chi_gamma,
              "modulus": list(f.modulus), "alpha_index": f.alpha_index,
              "basis": list(f.basis)}
    return VerifyReport(theorem, params, prediction, judge(prediction, measured), timings)
