import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tokengraphs.subsets import (
    binom,
    elements,
    enumerate_ksubsets,
    fmt_subset,
    rank_colex,
    to_mask,
    unrank_colex,
)


def colex_order(n, k):
    # independent oracle: sort by the reversed sorted tuple
    return sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])


def test_rank_examples():
    assert rank_colex(to_mask({0, 1, 2})) == 0
    assert rank_colex(to_mask({0, 1, 3})) == 1
    assert rank_colex(to_mask({4, 5, 6})) == 34 == comb(7, 3) - 1


def test_unrank_examples():
    assert elements(unrank_colex(0, 7, 2)) == [0, 1]
    assert elements(unrank_colex(20, 7, 2)) == [5, 6]
    assert [rank_colex(unrank_colex(r, 7, 3)) for r in range(35)] == list(range(35))


def test_unrank_rejects_out_of_range():
    with pytest.raises(ValueError):
        unrank_colex(35, 7, 3)
    with pytest.raises(ValueError):
        unrank_colex(-1, 7, 3)


def test_enumerate_examples():
    assert [elements(m) for m in enumerate_ksubsets(3, 2)] == [[0, 1], [0, 2], [1, 2]]
    assert len(list(enumerate_ksubsets(7, 2))) == 21
    assert [elements(m) for m in enumerate_ksubsets(5, 5)] == [[0, 1, 2, 3, 4]]
    with pytest.raises(ValueError):
        list(enumerate_ksubsets(3, 4))
    with pytest.raises(ValueError):
        list(enumerate_ksubsets(3, 0))


@pytest.mark.parametrize("n", range(1, 13))
def test_exhaustive_round_trip_and_order(n):
    for k in range(1, n + 1):
        stream = list(enumerate_ksubsets(n, k))
        assert [tuple(elements(m)) for m in stream] == colex_order(n, k)
        for r, m in enumerate(stream):
            assert rank_colex(m) == r
            assert unrank_colex(r, n, k) == m


def test_binomials_exact():
    for n in range(61):
        for k in range(n + 1):
            assert binom(n, k) == comb(n, k)
    assert binom(5, 7) == 0


@given(st.sets(st.integers(0, 59), min_size=1, max_size=12))
def test_rank_independent_of_n(S):
    m = to_mask(S)
    r = rank_colex(m)
    for n in (max(S) + 1, 60):
        assert unrank_colex(r, n, len(S)) == m


@given(st.sets(st.integers(0, 20), max_size=8), st.sets(st.integers(0, 20), max_size=8))
def test_symmetric_difference_even_for_equal_sizes(A, B):
    if len(A) == len(B):
        assert bin(to_mask(A) ^ to_mask(B)).count("1") % 2 == 0


def test_fmt_subset():
    assert fmt_subset(to_mask([0, 2, 5])) == "{0,2,5}"
