from math import comb

import pytest

from tokengraphs.graph import family
from tokengraphs.gray import gray_code_masks, gray_code_strings
from tokengraphs.invariants import gray_code_ham_path
from tokengraphs.subsets import popcount
from tokengraphs.token import build_token_graph


def test_small_example():
    seq = gray_code_strings(4, 1)
    assert len(seq) == 4 and sorted(seq) == ["0001", "0010", "0100", "1000"]


CASES = [(n, k) for n in range(2, 15, 2) for k in range(1, n, 2)]


@pytest.mark.parametrize("n,k", CASES)
def test_gray_code_is_hamiltonian_path(n, k):
    seq = gray_code_masks(n, k)
    assert len(seq) == len(set(seq)) == comb(n, k)
    assert all(popcount(m) == k for m in seq)
    for a, b in zip(seq, seq[1:]):
        d = a ^ b
        # exactly two bits, and they are neighbours on the path
        assert popcount(d) == 2 and d % 3 == 0 and (d // 3) & (d // 3 - 1) == 0


def test_gray_code_walks_the_token_graph():
    TG = build_token_graph(family("path", 8), 3)
    seq = gray_code_masks(8, 3)
    ranks = [TG.rank(m) for m in seq]
    assert all(TG.derived.adjacent(i, j) for i, j in zip(ranks, ranks[1:]))
    assert sorted(ranks) == list(range(TG.derived.n))


def test_config_path_wrapper():
    assert gray_code_ham_path(6, 3).length == comb(6, 3) - 1


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (6, 6), (4, 0), (7, 3)])
def test_rejects_other_parities(n, k):
    with pytest.raises(ValueError):
        gray_code_strings(n, k)
