"""Shapes, tensor words and the per-word descent/level/ascent statistics.

A word of shape ``(m_1, ..., m_d)`` over ``[k]`` is stored flat in row-major
order (last axis fastest). Letters are ``1..k``. The rank of a word is the
base-``k`` integer whose digits are ``values - 1`` read in flat order, with the
first cell as the most significant digit, so rank order is lexicographic order.

Cyclic statistics add the wrap pair (last layer, first layer) along every axis
with ``m_l >= 2``. An axis of length 1 has no wrap pair.
"""
from __future__ import annotations

import enum
import json
import math
import operator
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

DEFAULT_CAP = 2**24
CAP_ENV_VAR = "TENSORWORD_CAP"


class TensorWordError(ValueError):
    """Invalid shape, word or argument."""


class CapExceededError(RuntimeError):
    """An exhaustive operation would exceed the enumeration or state cap."""


def enumeration_cap() -> int:
    """Current enumeration cap, honouring ``TENSORWORD_CAP`` when set."""
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise TensorWordError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise TensorWordError(f"{CAP_ENV_VAR} must be >= 0, got {cap}")
    return cap


class StatKind(enum.Enum):
    DES = "des"
    LEV = "lev"
    ASC = "asc"
    CYCDES = "cycdes"
    CYCLEV = "cyclev"
    CYCASC = "cycasc"

    @property
    def cyclic(self) -> bool:
        return self in (StatKind.CYCDES, StatKind.CYCLEV, StatKind.CYCASC)

    @property
    def relation(self):
        """Binary predicate ``rel(w(i), w(j))`` on an adjacent pair (i, j)."""
        return _RELATIONS[self.value.removeprefix("cyc")]

    @property
    def plain(self) -> "StatKind":
        return StatKind(self.value.removeprefix("cyc"))

    @property
    def as_cyclic(self) -> "StatKind":
        return self if self.cyclic else StatKind("cyc" + self.value)

    @classmethod
    def parse(cls, name: "str | StatKind") -> "StatKind":
        if isinstance(name, StatKind):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            choices = ", ".join(s.value for s in cls)
            raise TensorWordError(f"unknown statistic {name!r} (expected one of {choices})") from None


_RELATIONS = {"des": operator.gt, "lev": operator.eq, "asc": operator.lt}


@dataclass(frozen=True)
class Shape:
    dims: tuple[int, ...]
    k: int

    @property
    def d(self) -> int:
        return len(self.dims)

    @cached_property
    def cell_count(self) -> int:
        return math.prod(self.dims)

    @cached_property
    def universe_size(self) -> int:
        """``k ** cell_count``, the number of words of this shape."""
        return self.k**self.cell_count

    @cached_property
    def strides(self) -> tuple[int, ...]:
        strides = []
        acc = 1
        for m in reversed(self.dims):
            strides.append(acc)
            acc *= m
        return tuple(reversed(strides))

    def flat_index(self, index: Sequence[int]) -> int:
        """Flat position of a 1-based multi-index."""
        if len(index) != self.d:
            raise TensorWordError(f"index {tuple(index)} has {len(index)} coordinates, shape has {self.d}")
        flat = 0
        for i, m in zip(index, self.dims):
            if not 1 <= i <= m:
                raise TensorWordError(f"index {tuple(index)} outside shape {self.dims}")
            flat = flat * m + (i - 1)
        return flat

    def multi_index(self, flat: int) -> tuple[int, ...]:
        out = []
        for m in reversed(self.dims):
            flat, r = divmod(flat, m)
            out.append(r + 1)
        return tuple(reversed(out))

    def with_k(self, k: int) -> "Shape":
        return make_shape(self.dims, k)

    def extend(self, m: int) -> "Shape":
        """The shape with one more axis of length ``m`` appended."""
        return make_shape(self.dims + (m,), self.k)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.dims))}) over [{self.k}]"


def make_shape(dims: Sequence[int], k: int) -> Shape:
    dims = tuple(dims)
    if not dims:
        raise TensorWordError("dims: must contain at least one axis")
    for pos, m in enumerate(dims):
        if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
            raise TensorWordError(f"dims[{pos}]: expected an integer, got {m!r}")
        if m < 1:
            raise TensorWordError(f"dims[{pos}]: axis length must be >= 1, got {m}")
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise TensorWordError(f"k: expected an integer, got {k!r}")
    if k < 1:
        raise TensorWordError(f"k: alphabet size must be >= 1, got {k}")
    return Shape(tuple(int(m) for m in dims), int(k))


def check_cap(size: int, cap: int | None = None, what: str = "universe") -> None:
    cap = enumeration_cap() if cap is None else cap
    if size > cap:
        raise CapExceededError(
            f"{what} size {size} exceeds the cap {cap}; use a closed-form method "
            f"or raise {CAP_ENV_VAR}"
        )


@dataclass(frozen=True)
class TensorWord:
    shape: Shape
    values: tuple[int, ...]

    def __getitem__(self, index: Sequence[int]) -> int:
        return self.values[self.shape.flat_index(index)]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64).reshape(self.shape.dims)

    def rows(self) -> list:
        """Nested lists following the shape (a matrix for d=2)."""
        return self.as_array().tolist()

    def to_json(self) -> dict:
        return {"dims": list(self.shape.dims), "k": self.shape.k, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj: "dict | str") -> "TensorWord":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            dims, k, values = obj["dims"], obj["k"], obj["values"]
        except (KeyError, TypeError):
            raise TensorWordError('word literal must be an object with "dims", "k" and "values"') from None
        return word_from_values(make_shape(dims, k), values)


def word_from_values(shape: Shape, values) -> TensorWord:
    values = np.asarray(values).ravel().tolist() if isinstance(values, np.ndarray) else list(values)
    if len(values) != shape.cell_count:
        raise TensorWordError(
            f"values: expected {shape.cell_count} entries for shape {shape.dims}, got {len(values)}"
        )
    for pos, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
            raise TensorWordError(f"values[{pos}]: expected an integer, got {v!r}")
        if not 1 <= v <= shape.k:
            raise TensorWordError(f"values[{pos}]: {v} is outside [1, {shape.k}]")
    return TensorWord(shape, tuple(int(v) for v in values))


def word_rank(w: TensorWord) -> int:
    r = 0
    k = w.shape.k
    for v in w.values:
        r = r * k + (v - 1)
    return r


def word_unrank(shape: Shape, r: int, cap: int | None = None) -> TensorWord:
    check_cap(shape.universe_size, cap)
    if not 0 <= r < shape.universe_size:
        raise TensorWordError(f"rank {r} outside [0, {shape.universe_size})")
    digits = []
    for _ in range(shape.cell_count):
        r, v = divmod(r, shape.k)
        digits.append(v + 1)
    return TensorWord(shape, tuple(reversed(digits)))


def iter_words(shape: Shape, cap: int | None = None) -> Iterator[TensorWord]:
    """All words of ``shape`` in rank order (pure Python, for small universes)."""
    check_cap(shape.universe_size, cap)
    for r in range(shape.universe_size):
        yield word_unrank(shape, r, cap)


def adjacent_pairs(shape: Shape, cyclic: bool = False) -> list[tuple[int, int]]:
    """Flat index pairs (i, j) with j = i + e_l, plus wrap pairs when cyclic."""
    pairs = []
    for flat in range(shape.cell_count):
        for m, stride in zip(shape.dims, shape.strides):
            c = (flat // stride) % m
            if c < m - 1:
                pairs.append((flat, flat + stride))
            elif cyclic and m >= 2:
                pairs.append((flat, flat - (m - 1) * stride))
    return pairs


def adjacent_pair_count(shape: Shape, cyclic: bool = False) -> int:
    n = shape.cell_count
    total = 0
    for m in shape.dims:
        rest = n // m
        total += (m - 1) * rest
        if cyclic and m >= 2:
            total += rest
    return total


def statistic(w: TensorWord, kind: "StatKind | str") -> int:
    kind = StatKind.parse(kind)
    rel = kind.relation
    vals = w.values
    return sum(1 for i, j in adjacent_pairs(w.shape, kind.cyclic) if rel(vals[i], vals[j]))


def complement(w: TensorWord) -> TensorWord:
    k1 = w.shape.k + 1
    return TensorWord(w.shape, tuple(k1 - v for v in w.values))


# -- vectorised helpers used by the sweeps -------------------------------------------


_NP_RELATIONS = {"des": np.greater, "lev": np.equal, "asc": np.less}


def batch_statistic(words: np.ndarray, shape: Shape, kind: "StatKind | str") -> np.ndarray:
    """Statistic of every row of a ``(B, cell_count)`` array of words."""
    kind = StatKind.parse(kind)
    rel = _NP_RELATIONS[kind.plain.value]
    arr = words.reshape((-1,) + shape.dims)
    out = np.zeros(arr.shape[0], dtype=np.int64)
    red = tuple(range(1, arr.ndim))
    full = [slice(None)] * arr.ndim
    for axis, m in enumerate(shape.dims, start=1):
        if m < 2:
            continue
        lo, hi, last, first = list(full), list(full), list(full), list(full)
        lo[axis], hi[axis] = slice(0, m - 1), slice(1, m)
        out += np.count_nonzero(rel(arr[tuple(lo)], arr[tuple(hi)]), axis=red)
        if kind.cyclic:
            last[axis], first[axis] = slice(m - 1, m), slice(0, 1)
            out += np.count_nonzero(rel(arr[tuple(last)], arr[tuple(first)]), axis=red)
    return out


def word_dtype(k: int):
    return np.int8 if k < 127 else np.int64


def unrank_block(shape: Shape, start: int, stop: int) -> np.ndarray:
    """Words with ranks ``start..stop-1`` as a ``(stop-start, cell_count)`` integer array."""
    n = shape.cell_count
    dtype = word_dtype(shape.k)
    ranks = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, n), dtype=dtype)
    for pos in range(n - 1, -1, -1):
        ranks, digit = np.divmod(ranks, shape.k)
        out[:, pos] = digit + 1
    return out
