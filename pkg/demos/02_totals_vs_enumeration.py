"""Closed-form totals over all words of a shape, checked against enumeration.

Run with ``python demos/02_totals_vs_enumeration.py``.
"""
import sys

from tensorwords import (
    brute_total,
    cyc_total_descents,
    cyc_total_levels,
    make_shape,
    total_descents,
    total_levels,
)

print(f"{'shape':>10} {'k':>2} {'des':>10} {'lev':>10} {'cycdes':>10} {'cyclev':>10}  match")
for dims, k in [([4], 3), ([2, 3], 2), ([3, 3], 2), ([2, 2, 2], 3), ([3, 4], 3)]:
    s = make_shape(dims, k)
    formulas = [total_descents(s), total_levels(s), cyc_total_descents(s), cyc_total_levels(s)]
    brute = [brute_total(s, kind) for kind in ("des", "lev", "cycdes", "cyclev")]
    print(f"{'x'.join(map(str, dims)):>10} {k:>2} " + " ".join(f"{v:>10}" for v in formulas),
          " ", formulas == brute)

# The formulas stay exact far beyond anything enumerable.
sys.set_int_max_str_digits(0)
big = make_shape([20, 20, 20], 5)
print("\ntotal descents over all 20x20x20 words on 5 letters has",
      len(str(total_descents(big))), "digits")

# A unit axis breaks the cyclic formulas: the wrap pair would join a cell to itself.
s = make_shape([1, 3], 2)
print("\n1x3 over [2]: cyclic descents formula", cyc_total_descents(s),
      "vs enumeration", brute_total(s, "cycdes"))
