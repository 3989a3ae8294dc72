"""Binary sequences from the quadratic character of F_{p^r} and their
linear complexity profile over GF(2)."""

from .complexity import (ComplexityProfile, ProfileEntry, TheoremPrediction,
                         k_error_lc_enum, k_error_profile_enum, k_error_profile_full,
                         linear_complexity_bm, linear_complexity_gcd, lower_bound_klc,
                         lower_bound_lc, predict_profile)
from .gf import FieldDescriptor, build_field, build_field_with_gamma, select_gamma
from .number_theory import (is_prime, is_wieferich, lambda_of, legendre_symbol,
                            multiplicative_order)
from .poly2 import BinaryPolynomial, distinct_degree_profile, phi_r, x_pow_t_minus_1
from .sequences import (BinarySequence, DarySequence, SequenceSpec,
                        gen_character_sequence, gen_indexed_sequence,
                        gen_modified_sequence, gen_sidelnikov, generating_polynomial,
                        least_period, weight_vectors)

__version__ = "0.1.0"
