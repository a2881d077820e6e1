"""Exact Hilbert data of monomial ideals: numerator, Krull dimension,
h-polynomial, and the three regularity measures.

Run:  python3 demos/03_hilbert_profiles.py
"""

from sgb import (
    expand_hilbert_series,
    hilbert_function,
    hilbert_numerator,
    krull_dim,
    minimalize,
    regularity_profile,
)

# Generators are minimalized on construction: x1^3 is dropped since x1^2
# divides it.
J = minimalize([(2, 0), (3, 0), (1, 1)], n=2)
print("minimal generators of <x1^2, x1^3, x1*x2>:", J.gens)

# The numerator N(z) satisfies HS_{R/J} = N(z) / (1-z)^n as a formal series.
N = hilbert_numerator(J)
print("numerator:", N)
print("HF(0..8) from the numerator:", expand_hilbert_series(N, 2, 8))
print("HF(0..8) by direct counting:", [hilbert_function(J, d) for d in range(9)])

# Krull dimension = n minus the smallest set of variables meeting every
# generator; here {x1} suffices, so dim R/J = 1.
print("Krull dimension:", krull_dim(J))

# The profile packages everything: the h-polynomial h with
# HS = h / (1-z)^r, the stabilization degree of HF, and the regularity
# measures.  With dimension 1 the plain degree of regularity is infinite
# (None) and only the generalized one is defined.
prof = regularity_profile(J)
print("\nprofile:", prof)
print("HF becomes the constant", prof.hp_constant, "from degree", prof.gen_d_reg)

# An Artinian quotient: all three measures coincide.
artinian = minimalize([(2, 0), (1, 1), (0, 3)], n=2)
prof0 = regularity_profile(artinian)
print("\nArtinian example", artinian.gens)
print("d_reg = gen_d_reg = hilb =", prof0.d_reg)
