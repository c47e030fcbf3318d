import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tensorwords import bijections as bij
from tensorwords import closed_forms as cf
from tensorwords.core import TensorWordError, iter_words, make_shape, statistic, word_from_values

import oracles


def word(*values, k):
    return word_from_values(make_shape([len(values)], k), values)


def test_phi_examples():
    y = bij.phi(word(3, 1, 2, 1, k=3))
    assert y.bits == (1, 0, 1) and y.bound == 2
    assert y.popcount() == 2 == oracles.string_des((3, 1, 2, 1))
    assert bij.phi(word(2, 2, 2, k=2)).bits == (0, 0)
    assert bij.phi(word(2, 1, k=2)).bits == (1,)


def test_phi_k1_convention():
    y = bij.phi(word(1, 1, 1, k=1))
    assert y.bits == (0, 0) and y.bound == 1


def test_phi_rejects_matrices():
    with pytest.raises(TensorWordError, match="1-dimensional"):
        bij.phi(word_from_values(make_shape([2, 2], 2), [1, 2, 2, 1]))


@pytest.mark.parametrize(
    "bits, runs",
    [((1, 0, 1), [(0, 1), (1, 1)]), ((1, 1, 0), [(0, 2), (1, 0)]), ((), []), ((0, 0, 1, 1, 0, 1), [(2, 2), (1, 1)])],
)
def test_run_decompose(bits, runs):
    assert bij.run_decompose(bits) == runs
    assert bij.reassemble(runs) == bits


@pytest.mark.parametrize(
    "bits, k, expected",
    [("101", 3, (2, 1, 2, 1)), ("110", 3, (3, 2, 1, 1)), ("000", 2, (1, 1, 1, 1)), ("", 4, (1,))],
)
def test_theta_examples(bits, k, expected):
    y = bij.BoundedRunBinary.parse(bits, k - 1)
    x = bij.theta(y, k)
    assert x.values == expected
    assert oracles.string_des(x.values) == y.popcount()


def test_theta_bound_mismatch():
    with pytest.raises(TensorWordError, match="bound"):
        bij.theta(bij.BoundedRunBinary((1, 0), 2), 2)


def test_bounded_run_membership():
    with pytest.raises(TensorWordError, match="run of 3"):
        bij.BoundedRunBinary((1, 1, 1), 2)
    with pytest.raises(TensorWordError):
        bij.BoundedRunBinary.parse("10x", 2)


def test_phi_theta_not_inverse():
    x = word(3, 1, 2, 1, k=3)
    assert bij.theta(bij.phi(x), 3) != x


def test_extremal_binary():
    y = bij.extremal_binary(5, 2)
    assert str(y) == "11011" and y.popcount() == 4
    assert str(bij.extremal_binary(3, 3)) == "111"
    y = bij.extremal_binary(7, 1)
    assert y.popcount() == 4 == oracles.max_ones_bounded(7, 1)
    assert bij.extremal_binary(0, 2).bits == ()


def test_extremal_word():
    x = bij.extremal_word(4, 3)
    assert x.values == (3, 2, 1, 1)
    assert statistic(x, "des") == 2 == cf.max_descents_1d(4, 3)
    assert bij.extremal_word(5, 1).values == (1,) * 5
    x = bij.extremal_word(6, 2)
    assert statistic(x, "des") == 3 == oracles.maximum((6,), 2, "des")


def test_cyclic_normalize_examples():
    x = word(2, 1, 2, 1, k=2)
    y = bij.cyclic_normalize(x)
    assert statistic(x, "cycdes") == 2 == statistic(y, "des")
    assert bij.cyclic_normalize(word(3, 3, 3, k=3)).values == (3, 3, 3)
    # first i with x_i <= x_{i+1} is i=2 (1 <= 3), so the rotation starts at 3
    assert bij.cyclic_normalize(word(2, 1, 3, k=3)).values == (3, 2, 1)


def test_cyclic_normalize_exhaustive_2_4():
    for w in iter_words(make_shape([4], 2)):
        assert statistic(w, "cycdes") == statistic(bij.cyclic_normalize(w), "des")


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(1, 8))
def test_phi_property_exhaustive(n, k):
    for w in iter_words(make_shape([n], k)):
        y = bij.phi(w)
        assert len(y) == n - 1 and y.bound == k - 1
        assert y.popcount() == oracles.string_des(w.values)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(1, 9))
def test_theta_property_exhaustive(n, k):
    for y in bij.iter_bounded_run(n - 1, k - 1):
        x = bij.theta(y, k)
        assert len(x.values) == n
        assert all(1 <= v <= k for v in x.values)
        assert oracles.string_des(x.values) == y.popcount()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 14), st.integers(1, 4))
def test_extremal_binary_is_optimal(n, k):
    y = bij.extremal_binary(n, k)
    assert bij.longest_one_run(y.bits) <= k
    assert y.popcount() == cf.max_ones_bounded_run(n, k)


def test_run_decompose_identity_on_C():
    for n in range(0, 9):
        for k in (1, 2, 3):
            for y in bij.iter_bounded_run(n, k):
                assert bij.reassemble(bij.run_decompose(y)) == y.bits


def test_iter_bounded_run_counts():
    # |C(n,1)| is Fibonacci(n+2)
    assert [sum(1 for _ in bij.iter_bounded_run(n, 1)) for n in range(7)] == [1, 2, 3, 5, 8, 13, 21]


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=9))
def test_cyclic_normalize_property(values):
    x = word(*values, k=4)
    y = bij.cyclic_normalize(x)
    n = len(values)
    assert any(y.values == tuple(values[j:] + values[:j]) for j in range(n))
    assert statistic(y, "cycdes") == statistic(x, "cycdes") == statistic(y, "des")


def test_max_descent_report():
    r = bij.max_descent_report(7, 3)
    assert r["des"] == r["formula"] == 4
    assert r["cycdes"] >= r["des"]
