"""Descent-preserving maps between words and binary sequences with bounded 1-runs.

``phi`` marks each descent position of a word in ``[k]^n`` with a 1, giving a
sequence in ``C(n-1, k-1)``. ``theta`` goes the other way and builds a word
whose descent count is the number of 1s. The two are not inverse to each other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import closed_forms as cf
from .core import StatKind, TensorWord, TensorWordError, make_shape, statistic, word_from_values


@dataclass(frozen=True)
class BoundedRunBinary:
    """A 0/1 sequence in which no run of 1s is longer than ``bound``."""

    bits: tuple[int, ...]
    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise TensorWordError(f"bound must be >= 1, got {self.bound}")
        if any(b not in (0, 1) for b in self.bits):
            raise TensorWordError(f"bits must be 0 or 1, got {self.bits}")
        if longest_one_run(self.bits) > self.bound:
            raise TensorWordError(
                f"{self} has a run of {longest_one_run(self.bits)} ones, bound is {self.bound}"
            )

    def __len__(self) -> int:
        return len(self.bits)

    def popcount(self) -> int:
        return sum(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    @classmethod
    def parse(cls, text: str, bound: int) -> "BoundedRunBinary":
        if any(ch not in "01" for ch in text):
            raise TensorWordError(f"binary sequence must contain only 0 and 1, got {text!r}")
        return cls(tuple(int(ch) for ch in text), bound)


def longest_one_run(bits) -> int:
    best = run = 0
    for b in bits:
        run = run + 1 if b else 0
        best = max(best, run)
    return best


def iter_bounded_run(n: int, bound: int) -> Iterator[BoundedRunBinary]:
    """Every member of C(n, bound), in lexicographic order."""
    for bits in itertools.product((0, 1), repeat=n):
        if longest_one_run(bits) <= bound:
            yield BoundedRunBinary(bits, bound)


def _require_1d(word: TensorWord) -> None:
    if word.shape.d != 1:
        raise TensorWordError(f"expected a 1-dimensional word, got shape {word.shape.dims}")


def phi(word: TensorWord) -> BoundedRunBinary:
    """Descent indicator sequence. For ``k = 1`` the result has bound 1 (it is all zeros)."""
    _require_1d(word)
    x = word.values
    bits = tuple(int(a > b) for a, b in zip(x, x[1:]))
    return BoundedRunBinary(bits, max(word.shape.k - 1, 1))


def run_decompose(y: "BoundedRunBinary | tuple[int, ...]") -> list[tuple[int, int]]:
    """Split ``y = 0^z1 1^o1 0^z2 1^o2 ...`` into ``[(z1, o1), (z2, o2), ...]``.

    Only ``z1`` and the last ``o`` may be zero.
    """
    bits = y.bits if isinstance(y, BoundedRunBinary) else tuple(y)
    runs = []
    i, n = 0, len(bits)
    while i < n:
        z = 0
        while i < n and bits[i] == 0:
            z += 1
            i += 1
        o = 0
        while i < n and bits[i] == 1:
            o += 1
            i += 1
        runs.append((z, o))
    return runs


def reassemble(runs: list[tuple[int, int]]) -> tuple[int, ...]:
    return tuple(itertools.chain.from_iterable((0,) * z + (1,) * o for z, o in runs))


def theta(y: BoundedRunBinary, k: int) -> TensorWord:
    """Word in ``[k]^(len(y)+1)`` with exactly ``popcount(y)`` descents."""
    if y.bound != k - 1:
        raise TensorWordError(f"theta needs a sequence with bound k-1 = {k - 1}, got bound {y.bound}")
    runs = run_decompose(y) or [(0, 0)]
    values: list[int] = []
    for i, (z, o) in enumerate(runs):
        plateau = z + 1 if i == 0 else z
        values.extend([o + 1] * plateau)
        values.extend(range(o, 0, -1))
    return word_from_values(make_shape([len(values)], k), values)


def extremal_binary(n: int, k: int) -> BoundedRunBinary:
    """``(1^k 0)^sigma 1^rho`` with ``n = sigma (k+1) + rho``: most 1s in C(n, k)."""
    if n < 0 or k < 1:
        raise TensorWordError(f"extremal_binary needs n >= 0 and k >= 1, got n={n}, k={k}")
    sigma, rho = divmod(n, k + 1)
    bits = ((1,) * k + (0,)) * sigma + (1,) * rho
    return BoundedRunBinary(bits, k)


def extremal_word(n: int, k: int) -> TensorWord:
    """A word in ``[k]^n`` with the maximum possible number of descents."""
    if n < 1 or k < 1:
        raise TensorWordError(f"extremal_word needs n >= 1 and k >= 1, got n={n}, k={k}")
    if k == 1:
        return word_from_values(make_shape([n], 1), [1] * n)
    return theta(extremal_binary(n - 1, k - 1), k)


def cyclic_normalize(word: TensorWord) -> TensorWord:
    """Rotate so the wrap pair is not a descent; then ``des`` of the result equals ``cycdes``.

    The rotation starts right after the first position ``i`` with
    ``x[i] <= x[i+1]`` (indices taken cyclically).
    """
    _require_1d(word)
    x = word.values
    n = len(x)
    i = next(i for i in range(n) if x[i] <= x[(i + 1) % n])
    j = (i + 1) % n
    return word_from_values(word.shape, x[j:] + x[:j])


def max_descent_report(n: int, k: int) -> dict:
    """The extremal word for ``[k]^n`` alongside the formula value it attains."""
    w = extremal_word(n, k)
    return {
        "n": n,
        "k": k,
        "formula": cf.max_descents_1d(n, k),
        "word": list(w.values),
        "des": statistic(w, StatKind.DES),
        "cycdes": statistic(w, StatKind.CYCDES),
    }
