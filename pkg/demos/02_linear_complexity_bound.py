"""Measured linear complexity against lambda * p^(r-1) for small fields."""

from charseq import (build_field, build_field_with_gamma, gen_character_sequence,
                     is_wieferich, lambda_of, linear_complexity_bm, linear_complexity_gcd,
                     lower_bound_lc, distinct_degree_profile, phi_r)

print(" p  r  chi   LC    bound   BM")
for p in (3, 5, 7, 11, 13, 17, 19):
    if is_wieferich(p):
        continue
    for sign in (1, -1):
        s = gen_character_sequence(build_field_with_gamma(p, sign))
        lc, _ = linear_complexity_gcd(s)
        print(f"{p:2d}  2  {sign:+d}  {lc:4d}  {lower_bound_lc(p, 2):6d}  {linear_complexity_bm(s):4d}")
for p in (3, 5):
    s = gen_character_sequence(build_field(p, 3))
    print(f"{p:2d}  3   .  {linear_complexity_gcd(s)[0]:4d}  {lower_bound_lc(p, 3):6d}")

# where the bound comes from: the irreducible factors of 1 + X^p + ... + X^((p-1)p)
for p in (7, 17, 31):
    print(p, "lambda =", lambda_of(p), "factor degrees:", distinct_degree_profile(phi_r(p, 2)))
