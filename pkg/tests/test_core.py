import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tensorwords.core import (
    CapExceededError,
    StatKind,
    TensorWord,
    TensorWordError,
    adjacent_pair_count,
    batch_statistic,
    complement,
    enumeration_cap,
    iter_words,
    make_shape,
    statistic,
    unrank_block,
    word_from_values,
    word_rank,
    word_unrank,
)

import oracles

EXAMPLE1 = [3, 1, 2, 1, 2, 2, 2, 2, 1, 2, 3, 3]


@pytest.fixture
def example1():
    return word_from_values(make_shape([3, 4], 3), EXAMPLE1)


def test_make_shape():
    s = make_shape([3, 4], 3)
    assert (s.d, s.cell_count, s.k) == (2, 12, 3)
    assert make_shape([1], 1).cell_count == 1
    s3 = make_shape([2, 2, 2], 2)
    assert (s3.d, s3.cell_count) == (3, 8)


@pytest.mark.parametrize(
    "dims, k, field",
    [([], 2, "dims"), ([2, 0], 2, "dims[1]"), ([-1], 2, "dims[0]"), ([2], 0, "k"), ([2], -3, "k")],
)
def test_make_shape_errors_name_field(dims, k, field):
    with pytest.raises(TensorWordError, match=field.replace("[", r"\[").replace("]", r"\]")):
        make_shape(dims, k)


def test_word_from_values(example1):
    assert example1[(1, 1)] == 3
    assert example1[(2, 4)] == 2
    assert example1[(3, 3)] == 3
    assert example1.rows() == [[3, 1, 2, 1], [2, 2, 2, 2], [1, 2, 3, 3]]
    assert word_from_values(make_shape([2], 2), [1, 1]).values == (1, 1)


def test_word_from_values_errors():
    with pytest.raises(TensorWordError, match=r"values\[1\]: 3 is outside \[1, 2\]"):
        word_from_values(make_shape([2], 2), [1, 3])
    with pytest.raises(TensorWordError, match="expected 2 entries"):
        word_from_values(make_shape([2], 2), [1])


def test_flat_index_last_axis_fastest():
    s = make_shape([2, 3, 4], 2)
    for flat, idx in enumerate(itertools.product(range(1, 3), range(1, 4), range(1, 5))):
        assert s.flat_index(idx) == flat
        assert s.multi_index(flat) == idx


def test_unrank_extremes():
    s = make_shape([2], 2)
    assert word_unrank(s, 0).values == (1, 1)
    assert word_unrank(s, 3).values == (2, 2)
    with pytest.raises(TensorWordError):
        word_unrank(s, 4)


def test_rank_roundtrip_2x2():
    s = make_shape([2, 2], 2)
    assert [word_rank(word_unrank(s, r)) for r in range(16)] == list(range(16))


def test_rank_order_is_lexicographic():
    s = make_shape([3], 3)
    words = [w.values for w in iter_words(s)]
    assert words == sorted(words)
    assert len(set(words)) == 27


def test_unrank_cap():
    with pytest.raises(CapExceededError):
        word_unrank(make_shape([5, 5], 2), 0, cap=2**20)


def test_unrank_block_matches_scalar():
    s = make_shape([2, 3], 3)
    block = unrank_block(s, 0, s.universe_size)
    for r in range(0, s.universe_size, 37):
        assert tuple(block[r]) == word_unrank(s, r).values


@pytest.mark.parametrize(
    "dims, cyclic, expected",
    [([3, 4], False, 17), ([3, 4], True, 24), ([1], True, 0), ([1], False, 0), ([2, 1, 3], True, 12)],
)
def test_adjacent_pair_count(dims, cyclic, expected):
    # expected values counted by oracles.pairs
    assert len(oracles.pairs(tuple(dims), cyclic)) == expected
    assert adjacent_pair_count(make_shape(dims, 2), cyclic) == expected


def test_example1_statistics(example1):
    assert statistic(example1, StatKind.DES) == 4
    assert statistic(example1, StatKind.LEV) == 6
    assert statistic(example1, StatKind.CYCDES) == 8
    assert statistic(example1, StatKind.CYCLEV) == 7


def test_small_statistics():
    w = word_from_values(make_shape([3], 2), [1, 1, 1])
    assert statistic(w, "lev") == 2
    assert statistic(w, "des") == 0
    m = word_from_values(make_shape([2, 2], 2), [1, 2, 2, 1])
    assert statistic(m, "cycdes") == 4


def test_statkind_parse():
    assert StatKind.parse("CycDes") is StatKind.CYCDES
    assert StatKind.CYCLEV.plain is StatKind.LEV
    assert StatKind.ASC.as_cyclic is StatKind.CYCASC
    with pytest.raises(TensorWordError, match="unknown statistic"):
        StatKind.parse("peaks")


def test_complement(example1):
    w = word_from_values(make_shape([4], 3), [3, 1, 2, 1])
    assert complement(w).values == (1, 3, 2, 3)
    assert complement(complement(example1)) == example1
    two_one = word_from_values(make_shape([2], 2), [2, 1])
    assert statistic(two_one, "des") == 1 == statistic(complement(two_one), "asc")


def test_json_roundtrip(example1):
    assert TensorWord.from_json(example1.to_json()) == example1
    with pytest.raises(TensorWordError, match="dims"):
        TensorWord.from_json({"k": 2})


def test_cap_env(monkeypatch):
    monkeypatch.setenv("TENSORWORD_CAP", "100")
    assert enumeration_cap() == 100
    with pytest.raises(CapExceededError, match="TENSORWORD_CAP"):
        word_unrank(make_shape([7], 2), 0)
    monkeypatch.setenv("TENSORWORD_CAP", "lots")
    with pytest.raises(TensorWordError):
        enumeration_cap()


# -- properties -----------------------------------------------------------------


@st.composite
def words(draw, max_cells=12):
    d = draw(st.integers(1, 3))
    dims = draw(st.lists(st.integers(1, 4), min_size=d, max_size=d).filter(
        lambda ds: np.prod(ds) <= max_cells))
    k = draw(st.integers(1, 4))
    n = int(np.prod(dims))
    values = draw(st.lists(st.integers(1, k), min_size=n, max_size=n))
    return word_from_values(make_shape(dims, k), values)


def _as_dict(w):
    return {w.shape.multi_index(f): v for f, v in enumerate(w.values)}


@settings(max_examples=300, deadline=None)
@given(words())
def test_statistic_matches_oracle(w):
    for kind in StatKind:
        assert statistic(w, kind) == oracles.stat(_as_dict(w), w.shape.dims, kind.value)


@settings(max_examples=200, deadline=None)
@given(words())
def test_conservation(w):
    for cyclic in (False, True):
        kinds = [StatKind.DES, StatKind.LEV, StatKind.ASC]
        if cyclic:
            kinds = [k.as_cyclic for k in kinds]
        assert sum(statistic(w, k) for k in kinds) == adjacent_pair_count(w.shape, cyclic)


@settings(max_examples=200, deadline=None)
@given(words())
def test_complement_duality(w):
    c = complement(w)
    for plain in (StatKind.DES, StatKind.CYCDES):
        asc = StatKind.ASC if plain is StatKind.DES else StatKind.CYCASC
        assert statistic(w, plain) == statistic(c, asc)
    assert statistic(w, "lev") == statistic(c, "lev")
    assert statistic(w, "cyclev") == statistic(c, "cyclev")


@settings(max_examples=100, deadline=None)
@given(words())
def test_batch_statistic_matches_scalar(w):
    arr = np.array([w.values], dtype=np.int64)
    for kind in StatKind:
        assert batch_statistic(arr, w.shape, kind)[0] == statistic(w, kind)


@pytest.mark.parametrize("dims, k", [((2, 2), 2), ((1, 3), 3), ((2, 1, 2), 2), ((3,), 4)])
def test_rank_roundtrip_full_range(dims, k):
    s = make_shape(dims, k)
    for r in range(s.universe_size):
        assert word_rank(word_unrank(s, r)) == r


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_one_dimensional_reduces_to_string_scan(n, k):
    s = make_shape([n], k)
    for w in iter_words(s):
        x = w.values
        assert statistic(w, "des") == oracles.string_des(x)
        assert statistic(w, "lev") == oracles.string_lev(x)
        assert statistic(w, "cycdes") == oracles.string_cycdes(x)
