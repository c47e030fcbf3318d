"""How many descents can a word have? Bounded runs, extremal words, and a bound for tensors.

Run with ``python demos/04_maximal_descents.py``.
"""
from tensorwords import (
    StatKind,
    brute_max,
    cycdes_upper_bound,
    cyclic_normalize,
    extremal_binary,
    extremal_word,
    make_shape,
    max_descents_1d,
    max_ones_bounded_run,
    phi,
    run_decompose,
    statistic,
    theta,
    word_from_values,
)

# Descent positions of a word form a 0/1 sequence with no run of k ones.
x = word_from_values(make_shape([6], 3), [3, 1, 2, 1, 3, 2])
y = phi(x)
print("word", x.values, "-> descent marks", y, "with", y.popcount(), "ones")

# theta rebuilds a word with as many descents as ones, run by run.
print("runs of", y, "=", run_decompose(y), "-> theta:", theta(y, 3).values)
print()

print(" n  k  max ones  extremal binary   max des  extremal word")
for n, k in [(5, 2), (7, 3), (9, 4)]:
    b = extremal_binary(n - 1, k - 1)
    w = extremal_word(n, k)
    print(f"{n:>2} {k:>2} {max_ones_bounded_run(n - 1, k - 1):>9}  {str(b):<16} "
          f"{max_descents_1d(n, k):>8}  {w.values}")
    assert statistic(w, "des") == brute_max(make_shape([n], k), "des").value

# Rotating a cyclic word so the wrap pair is not a descent.
z = word_from_values(make_shape([5], 3), [1, 3, 2, 3, 1])
r = cyclic_normalize(z)
print("\ncycdes", z.values, "=", statistic(z, "cycdes"), "; rotation", r.values,
      "has des =", statistic(r, "des"))

# For matrices the per-line bound is attained on 3x4 over [3].
s = make_shape([3, 4], 3)
best = brute_max(s, StatKind.CYCDES)
print(f"\nmax cycdes over 3x4 words on [3]: {best.value} (bound {cycdes_upper_bound(s)}), "
      f"searched {best.explored} words; least witness:")
for row in best.witness.rows():
    print("   ", row)
