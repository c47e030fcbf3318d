"""Blocked rank sweeps over a whole universe of words.

Ranks are cut into contiguous blocks; each block is unranked into a numpy
array and handed to a per-block function. Block results are combined in rank
order, so "first maximiser" reductions return the least-rank witness no matter
how many threads were used.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from typing import Callable, Iterator, TypeVar

import numpy as np

from .core import Shape, StatKind, batch_statistic, check_cap, make_shape, unrank_block, word_dtype

T = TypeVar("T")

BLOCK_SIZE = 1 << 16


def rank_blocks(total: int, block: int) -> Iterator[tuple[int, int]]:
    for start in range(0, total, block):
        yield start, min(start + block, total)


def _suffix_digits(shape: Shape, block: int) -> int:
    """Largest b with k**b <= block, b <= cell_count."""
    b = 0
    while b < shape.cell_count and shape.k ** (b + 1) <= block:
        b += 1
    return b


def map_blocks(
    shape: Shape,
    fn: Callable[[int, np.ndarray], T],
    combine: Callable[[T, T], T],
    initial: T,
    threads: int = 1,
    cap: int | None = None,
    block: int | None = None,
) -> T:
    """Apply ``fn(start_rank, words)`` to every block and fold with ``combine``.

    Blocks are aligned to ``k**b`` ranks so that every block shares one table of
    the last ``b`` digits and only the leading digits change between blocks.
    """
    check_cap(shape.universe_size, cap)
    b = _suffix_digits(shape, block or BLOCK_SIZE)
    size = shape.k**b
    n = shape.cell_count
    suffix = unrank_block(make_shape([b], shape.k), 0, size) if b else None
    prefix_shape = make_shape([n - b], shape.k) if n > b else None

    def run(start):
        words = np.empty((size, n), dtype=word_dtype(shape.k))
        if b:
            words[:, n - b:] = suffix
        if prefix_shape is not None:
            words[:, : n - b] = unrank_block(prefix_shape, start // size, start // size + 1)
        return fn(start, words)

    starts = range(0, shape.universe_size, size)
    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(run, starts))
    else:
        parts = map(run, starts)
    return reduce(combine, parts, initial)


def sweep_total(shape: Shape, kind: StatKind, threads: int = 1, cap: int | None = None) -> int:
    return map_blocks(
        shape,
        lambda _, words: int(batch_statistic(words, shape, kind).sum()),
        lambda a, b: a + b,
        0,
        threads,
        cap,
    )


def sweep_histogram(
    shape: Shape, kind: StatKind, length: int, threads: int = 1, cap: int | None = None
) -> list[int]:
    def fn(_, words):
        return np.bincount(batch_statistic(words, shape, kind), minlength=length)

    counts = map_blocks(shape, fn, lambda a, b: a + b, np.zeros(length, dtype=np.int64), threads, cap)
    return [int(c) for c in counts]


def sweep_max(
    shape: Shape, kind: StatKind, threads: int = 1, cap: int | None = None
) -> tuple[int, int]:
    """``(max value, least rank attaining it)``."""

    def fn(start, words):
        stats = batch_statistic(words, shape, kind)
        i = int(np.argmax(stats))
        return int(stats[i]), start + i

    def keep(a, b):
        # strict comparison keeps the earlier block on ties
        return b if b[0] > a[0] else a

    return map_blocks(shape, fn, keep, (-1, -1), threads, cap)
