"""Descents, levels and their cyclic versions on a single matrix word.

Run with ``python demos/01_word_statistics.py``.
"""
from tensorwords import StatKind, complement, make_shape, statistic, word_from_values
from tensorwords.core import adjacent_pairs

# A 3x4 word over the alphabet {1, 2, 3}, stored row by row.
shape = make_shape([3, 4], 3)
w = word_from_values(shape, [3, 1, 2, 1,
                             2, 2, 2, 2,
                             1, 2, 3, 3])
for row in w.rows():
    print(" ".join(map(str, row)))
print()

# Every statistic compares axis-adjacent cells (i, i + e_l).
for kind in StatKind:
    print(f"{kind.value:>7}: {statistic(w, kind)}")
print()

# The cyclic versions also compare the last row/column with the first one.
wraps = [(shape.multi_index(i), shape.multi_index(j))
         for i, j in adjacent_pairs(shape, cyclic=True)
         if i > j and w.values[i] > w.values[j]]
print("wrap-around descents:", wraps)

# Replacing every letter v by k + 1 - v swaps descents and ascents.
c = complement(w)
print("des(w) =", statistic(w, "des"), " asc(complement(w)) =", statistic(c, "asc"))
