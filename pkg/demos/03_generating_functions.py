"""Generating functions in the length of a new axis, and full distributions.

Run with ``python demos/03_generating_functions.py``.
"""
from tensorwords import (
    build_cyclic_descent_gf,
    build_descent_gf,
    distribution_brute,
    distribution_transfer,
    make_shape,
    series_coefficients,
    total_descents,
)

base = make_shape([2], 2)
A = build_descent_gf(base)
G = build_cyclic_descent_gf(base)
print("descents, base 2 over [2]:       ", A)
print("cyclic descents, base 2 over [2]:", G)
print("series (M = 0..6):", series_coefficients(A, 7))
print("closed forms     :", [0] + [total_descents(base.extend(M)) for M in range(1, 7)])
print("cyclic series    :", series_coefficients(G, 7))
print()

# The transfer method walks slices along the last axis and keeps a polynomial
# in t per slice; no word is ever listed.
for kind in ("des", "lev", "cycdes", "cyclev"):
    d = distribution_transfer(make_shape([2, 5], 2), kind)
    print(f"{kind:>6} on 2x5 over [2]:", list(d.coeffs))
    assert d == distribution_brute(make_shape([2, 5], 2), kind)

# With 64 columns the counts no longer fit in a machine word.
d = distribution_transfer(make_shape([1, 64], 3), "des")
print("\nwords of length 64 over [3] by descents, mass =", d.mass(), "= 3**64:", d.mass() == 3**64)
