"""Exact closed-form totals and extremal values.

Everything here is integer arithmetic on Python ints. The halvings in the
descent totals are exact divisions guarded by an evenness check.

Cyclic totals assume every axis has length at least 2. On shapes with a unit
axis the wrap pair would join a cell to itself, which this package does not
count, so the formulas and direct counting part ways there.
"""
from __future__ import annotations

import math

from .core import Shape, StatKind, TensorWordError


class FormulaDomainError(ArithmeticError):
    """A closed form was evaluated outside the range where it yields an integer."""


def _exact_half(twice: int, what: str, shape: Shape) -> int:
    q, r = divmod(twice, 2)
    if r:
        raise FormulaDomainError(
            f"{what} for {shape} is not an integer ({twice}/2); "
            "cyclic totals are only valid when every axis has length >= 2"
        )
    return q


def _cofactor_sum(dims) -> int:
    """Sum over axes i of the product of the other axis lengths."""
    n = math.prod(dims)
    return sum(n // m for m in dims)


def level_pair_weight(shape: Shape) -> int:
    """``d * prod(m) - sum_i prod_{l != i} m_l``: the number of adjacent pairs."""
    return shape.d * shape.cell_count - _cofactor_sum(shape.dims)


def total_descents(shape: Shape) -> int:
    """Sum of ``des(w)`` over every word of ``shape``."""
    if shape.k == 1:
        return 0
    twice = level_pair_weight(shape) * (shape.k - 1) * shape.k ** (shape.cell_count - 1)
    return _exact_half(twice, "total descents", shape)


def total_levels(shape: Shape) -> int:
    return level_pair_weight(shape) * shape.k ** (shape.cell_count - 1)


def cyc_total_descents(shape: Shape) -> int:
    if shape.k == 1:
        return 0
    twice = shape.d * shape.cell_count * (shape.k - 1) * shape.k ** (shape.cell_count - 1)
    return _exact_half(twice, "cyclic total descents", shape)


def cyc_total_levels(shape: Shape) -> int:
    return shape.d * shape.cell_count * shape.k ** (shape.cell_count - 1)


def cyclic_formula_valid(shape: Shape) -> bool:
    """True when every axis has length >= 2, the domain of the cyclic totals."""
    return all(m >= 2 for m in shape.dims)


def total_for(shape: Shape, kind: "StatKind | str") -> int:
    """Closed-form total for any statistic; ascents equal descents by complement symmetry."""
    kind = StatKind.parse(kind)
    if kind.cyclic:
        return cyc_total_levels(shape) if kind is StatKind.CYCLEV else cyc_total_descents(shape)
    return total_levels(shape) if kind is StatKind.LEV else total_descents(shape)


def max_descents_1d(n: int, k: int) -> int:
    """Largest number of descents (plain or cyclic) of a word in ``[k]^n``."""
    if n < 1 or k < 1:
        raise TensorWordError(f"max_descents_1d needs n >= 1 and k >= 1, got n={n}, k={k}")
    return n * (k - 1) // k


def max_ones_bounded_run(n: int, k: int) -> int:
    """Most 1s in a binary sequence of length ``n`` without ``k + 1`` consecutive 1s."""
    if n < 0 or k < 1:
        raise TensorWordError(f"max_ones_bounded_run needs n >= 0 and k >= 1, got n={n}, k={k}")
    return (n + 1) * k // (k + 1)


def cycdes_upper_bound(shape: Shape) -> int:
    """Upper bound on ``cycdes`` over the shape: each axis line is a cyclic word of length m_i."""
    n = shape.cell_count
    k = shape.k
    return sum((n // m) * (m * (k - 1) // k) for m in shape.dims)
