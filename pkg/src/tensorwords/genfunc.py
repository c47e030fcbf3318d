"""Generating functions in the length of an appended axis, and slice transfer.

For a base shape ``(m_1, ..., m_d)`` over ``[k]`` the functions built here are
series in ``x`` whose coefficient of ``x^M`` is the total of a statistic over
all words of shape ``(m_1, ..., m_d, M)``. Write ``P`` for the number of base
cells and ``K = k**P`` for the number of base slices. Then

    descents        (a x + h x^2) / (1 - K x)^2,   h = (k-1) k^(2P-1) P / 2
    levels          (b x + e x^2) / (1 - K x)^2,   e = k^(2P-1) P
    cyclic descents (g K + h) (2 x^2 - K x^3) / (1 - K x)^2
    cyclic levels   (c K + e) (2 x^2 - K x^3) / (1 - K x)^2

where ``a, b, g, c`` are the base totals of the same statistic. ``h`` and ``e``
count, over all ordered pairs of slices, the cells where the first slice is
larger (resp. equal). Half-integer coefficients are stored doubled with
``scale = 2``.

The transfer routine computes the full distribution of a statistic by walking
slices along the last axis.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from .core import (
    Shape,
    StatKind,
    TensorWordError,
    adjacent_pair_count,
    batch_statistic,
    check_cap,
    make_shape,
    unrank_block,
    _NP_RELATIONS,
)
from .sweep import sweep_histogram

DEFAULT_STATE_CAP = 2**16


class GFConsistencyError(ArithmeticError):
    """Series expansion produced a coefficient that is not an integer."""


@dataclass(frozen=True)
class RationalGF:
    """``numerator / (scale * denominator)`` with integer coefficient lists, lowest degree first."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]
    scale: int = 1
    label: str = ""

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise TensorWordError("denominator must have constant term 1")
        if self.scale < 1:
            raise TensorWordError("scale must be a positive integer")

    def series(self, count: int) -> list[int]:
        return series_coefficients(self, count)

    def __str__(self) -> str:
        num = _poly_str(self.numerator)
        den = _poly_str(self.denominator)
        if self.scale != 1:
            num = f"({num})/{self.scale}"
        return f"{num} / ({den})"


def _poly_str(coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def series_coefficients(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` Taylor coefficients of ``gf`` at ``x = 0``."""
    if count < 0:
        raise TensorWordError(f"count must be >= 0, got {count}")
    num, den = gf.numerator, gf.denominator
    raw: list[int] = []
    for n in range(count):
        acc = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * raw[n - j]
        raw.append(acc)
    out = []
    for n, c in enumerate(raw):
        q, r = divmod(c, gf.scale)
        if r:
            raise GFConsistencyError(f"coefficient of x^{n} is {c}/{gf.scale}, not an integer")
        out.append(q)
    return out


def _squared_geometric_denominator(K: int) -> tuple[int, ...]:
    return (1, -2 * K, K * K)


def slice_extension_gf(base: Shape) -> RationalGF:
    """``x / (1 - K x)``: words of shape (base, M) with a fixed first slice, by M."""
    return RationalGF((0, 1), (1, -base.k**base.cell_count), label="fixed first slice")


def build_descent_gf(base: Shape) -> RationalGF:
    P, k = base.cell_count, base.k
    K = k**P
    twice_a = 2 * cf.total_descents(base)
    twice_h = (k - 1) * k ** (2 * P - 1) * P
    return RationalGF((0, twice_a, twice_h), _squared_geometric_denominator(K), 2, "des")


def build_level_gf(base: Shape) -> RationalGF:
    P, k = base.cell_count, base.k
    K = k**P
    b = cf.total_levels(base)
    e = k ** (2 * P - 1) * P
    return RationalGF((0, b, e), _squared_geometric_denominator(K), 1, "lev")


def build_cyclic_descent_gf(base: Shape) -> RationalGF:
    """Cyclic-descent totals for M >= 2; the x^1 coefficient is 0 by construction.

    Uses the closed-form base total, so coefficients are only meaningful when
    every base axis has length >= 2.
    """
    P, k, d = base.cell_count, base.k, base.d
    K = k**P
    twice_h = (k - 1) * k ** (2 * P - 1) * P
    twice_g = d * P * (k - 1) * k ** (P - 1)
    c2 = 2 * (twice_h + K * twice_g)
    c3 = -(K * twice_h + K * K * twice_g)
    return RationalGF((0, 0, c2, c3), _squared_geometric_denominator(K), 2, "cycdes")


def build_cyclic_level_gf(base: Shape) -> RationalGF:
    P, k = base.cell_count, base.k
    K = k**P
    e = k ** (2 * P - 1) * P
    c = cf.cyc_total_levels(base)
    return RationalGF(
        (0, 0, 2 * (e + K * c), -(K * e + K * K * c)), _squared_geometric_denominator(K), 1, "cyclev"
    )


def build_gf(base: Shape, kind: "StatKind | str") -> RationalGF:
    kind = StatKind.parse(kind)
    builders = {
        StatKind.DES: build_descent_gf,
        StatKind.ASC: build_descent_gf,
        StatKind.LEV: build_level_gf,
        StatKind.CYCDES: build_cyclic_descent_gf,
        StatKind.CYCASC: build_cyclic_descent_gf,
        StatKind.CYCLEV: build_cyclic_level_gf,
    }
    return builders[kind](base)


# -- distributions -------------------------------------------------------------------


@dataclass(frozen=True)
class DistPolynomial:
    """Coefficient ``coeffs[l]`` counts the words whose statistic equals ``l``."""

    kind: StatKind
    shape: Shape
    coeffs: tuple[int, ...] = field(default=())

    def mass(self) -> int:
        return sum(self.coeffs)

    def first_moment(self) -> int:
        return sum(i * c for i, c in enumerate(self.coeffs))

    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_json(self) -> dict:
        return {
            "stat": self.kind.value,
            "dims": list(self.shape.dims),
            "k": self.shape.k,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "DistPolynomial":
        return cls(
            StatKind.parse(obj["stat"]),
            make_shape(obj["dims"], obj["k"]),
            tuple(int(c) for c in obj["coeffs"]),
        )


def _trimmed(kind: StatKind, shape: Shape, coeffs) -> DistPolynomial:
    coeffs = [int(c) for c in coeffs]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return DistPolynomial(kind, shape, tuple(coeffs))


def distribution_brute(
    shape: Shape, kind: "StatKind | str", threads: int = 1, cap: int | None = None
) -> DistPolynomial:
    """Histogram of the statistic over every word of ``shape``."""
    kind = StatKind.parse(kind)
    length = adjacent_pair_count(shape, kind.cyclic) + 1
    return _trimmed(kind, shape, sweep_histogram(shape, kind, length, threads, cap))


def _accumulate_dtype(shape: Shape):
    return np.int64 if shape.universe_size < 2**62 else object


def distribution_transfer(
    full_shape: Shape, kind: "StatKind | str", state_cap: int = DEFAULT_STATE_CAP
) -> DistPolynomial:
    """Distribution of the statistic computed slice by slice along the last axis.

    States are the base slices. Appending slice ``v`` after slice ``u``
    contributes ``t ** (rel(u, v) + stat(v))`` where ``rel`` counts cells on
    which the pair (u, v) satisfies the statistic's relation and ``stat`` is the
    statistic inside the slice (cyclic inside the slice for cyclic kinds).
    Cyclic kinds fix the first slice, run the chain, then close the loop with
    ``rel(last, first)``; a last axis of length 1 has no closing pair.
    """
    kind = StatKind.parse(kind)
    if full_shape.d < 2:
        raise TensorWordError(
            f"transfer needs at least 2 axes, got {full_shape.dims}; prepend an axis of length 1"
        )
    base = make_shape(full_shape.dims[:-1], full_shape.k)
    M = full_shape.dims[-1]
    S = base.universe_size
    check_cap(S, state_cap, "transfer state space")

    rel = _NP_RELATIONS[kind.plain.value]
    slice_kind = kind.as_cyclic if kind.cyclic else kind.plain
    states = unrank_block(base, 0, S)
    internal = batch_statistic(states, base, slice_kind)
    length = adjacent_pair_count(full_shape, kind.cyclic) + 1
    dtype = _accumulate_dtype(full_shape)

    def cross_from(u: int) -> np.ndarray:
        return rel(states[u], states).sum(axis=1)

    def step(vec: np.ndarray) -> np.ndarray:
        new = np.zeros_like(vec)
        for u in range(S):
            row = vec[u]
            if not row.any():
                continue
            shift = cross_from(u) + internal
            for s in np.unique(shift):
                s = int(s)
                new[shift == s, s:] += row[: length - s]
        return new

    if not kind.cyclic or M == 1:
        vec = np.zeros((S, length), dtype=dtype)
        vec[np.arange(S), internal] = 1
        for _ in range(M - 1):
            vec = step(vec)
        return _trimmed(kind, full_shape, vec.sum(axis=0))

    total = np.zeros(length, dtype=dtype)
    for f in range(S):
        vec = np.zeros((S, length), dtype=dtype)
        vec[f, internal[f]] = 1
        for _ in range(M - 1):
            vec = step(vec)
        closing = rel(states, states[f]).sum(axis=1)
        for u in range(S):
            s = int(closing[u])
            total[s:] += vec[u, : length - s]
    return _trimmed(kind, full_shape, total)
