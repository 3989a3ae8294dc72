"""Exhaustive k-error profiles for p = 3, 5 next to the predicted piecewise values,
and a bounded-weight search for p = 11."""

import time

from charseq import (build_field_with_gamma, gen_character_sequence, k_error_profile_enum,
                     k_error_profile_full, predict_profile)

for p in (3, 5):
    for sign in (1, -1):
        s = gen_character_sequence(build_field_with_gamma(p, sign))
        t0 = time.perf_counter()
        prof = k_error_profile_full(s)
        pred = predict_profile(p, sign)
        print(f"p={p} chi(gamma)={sign:+d} [{pred.source}] {time.perf_counter() - t0:.2f}s")
        for e in prof.entries[: (p * p + 1) // 2 + 1]:
            piece = pred.at(e.k)
            shown = piece.value if piece.value is not None else "?"
            print(f"  k={e.k:2d}  measured {e.lc:3d}  predicted {shown}")

# T = 121 is far beyond 2^T enumeration; search weight <= 2 patterns instead
s = gen_character_sequence(build_field_with_gamma(11, -1))
for e in k_error_profile_enum(s, 2).entries:
    print(f"p=11 k={e.k} lc={e.lc} witness={e.witness} ({e.method})")
