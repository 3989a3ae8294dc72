"""Build a small field, look at its tables, and generate the sequence families."""

from charseq import (build_field, build_field_with_gamma, gen_character_sequence,
                     gen_indexed_sequence, weight_vectors)
from charseq.sequences import gen_modified_sequence, gen_sidelnikov

# F_9 with the smallest irreducible modulus, X^2 + 1
f = build_field(3, 2)
print(f)
print("exp table:", f.exp_table.tolist())
print("chi over ordering indices:", f.character_table().tolist())

# basis {1, gamma} with chi(gamma) = +1 and -1
for sign in (1, -1):
    g = build_field_with_gamma(5, sign)
    s = gen_character_sequence(g)
    print(f"p=5 chi(gamma)={sign:+d}  sigma = {s.to_text()}")
    print("   column weights:", weight_vectors(s, 5))

# d-ary version; d = 2 reproduces the binary sequence
print("d=4:", gen_indexed_sequence(f, 4).to_text())
print("d=2:", gen_indexed_sequence(f, 2).to_text(), "==", gen_character_sequence(f).to_text())

# the two variants with no theorem attached
print("modified:  ", gen_modified_sequence(f).to_text())
rho = gen_sidelnikov(f)
print("sidelnikov:", rho.to_text(), rho.metadata)
