import itertools
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import from_nx, graphs, to_nx
from tokengraphs.errors import CapacityError
from tokengraphs.graph import are_isomorphic, family, make_graph
from tokengraphs.subsets import elements, to_mask
from tokengraphs.token import (
    VariantSpec,
    build_token_graph,
    build_variant_token_graph,
    complement_bijection,
    expected_counts,
    fixed_token_subgraph,
    token_degree,
    variant_adjacent,
)


def brute_token_edges(G, k):
    # oracle: compare every pair of k-sets directly
    sets = [frozenset(c) for c in itertools.combinations(range(G.n), k)]
    edges = set()
    for A, B in itertools.combinations(sets, 2):
        diff = A ^ B
        if len(diff) == 2 and G.adjacent(*diff):
            edges.add(frozenset((to_mask(A), to_mask(B))))
    return edges


def token_edges(TG):
    return {frozenset((TG.configs[i], TG.configs[j])) for i, j in TG.derived.edges()}


def test_path7_two_tokens():
    TG = build_token_graph(family("path", 7), 2)
    assert (TG.derived.n, TG.derived.edge_count) == (21, 30)


def test_one_token_is_the_base_graph():
    G = family("cycle", 5)
    TG = build_token_graph(G, 1)
    assert TG.configs == tuple(1 << v for v in range(5))
    assert TG.derived == G


def test_f2_c4_is_k24():
    assert are_isomorphic(build_token_graph(family("cycle", 4), 2).derived, family("complete_bipartite", 2, 4))


def test_f2_k4_is_octahedron():
    F = build_token_graph(family("complete", 4), 2).derived
    assert (F.n, F.edge_count) == (6, 12)
    assert are_isomorphic(F, from_nx(nx.octahedral_graph()))


def test_f2_k5_is_johnson_graph():
    F = build_token_graph(family("complete", 5), 2).derived
    # J(5,2) is the complement of the Petersen graph
    assert are_isomorphic(F, from_nx(nx.complement(nx.petersen_graph())))


def test_invalid_k():
    with pytest.raises(ValueError):
        build_token_graph(family("path", 3), 3)
    with pytest.raises(ValueError):
        build_token_graph(family("path", 3), 0)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        build_token_graph(make_graph(40, []), 20)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=8), st.data())
def test_construction_matches_brute_force(G, data):
    k = data.draw(st.integers(1, G.n - 1))
    TG = build_token_graph(G, k)
    assert token_edges(TG) == brute_token_edges(G, k)
    assert (TG.derived.n, TG.derived.edge_count) == expected_counts(G, k)
    assert expected_counts(G, k) == (comb(G.n, k), comb(G.n - 2, k - 1) * G.edge_count)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_degree_is_cut_size(G, data):
    k = data.draw(st.integers(1, G.n - 1))
    TG = build_token_graph(G, k)
    for m in TG.configs:
        assert token_degree(TG, m) == sum(1 for a, b in G.edges() if (m >> a & 1) != (m >> b & 1))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7), st.data())
def test_complement_bijection(G, data):
    TG = build_token_graph(G, data.draw(st.integers(1, G.n - 1)))
    w = complement_bijection(TG)
    other = build_token_graph(G, G.n - TG.k)
    full = (1 << G.n) - 1
    assert all(other.configs[w.mapping[i]] == full ^ m for i, m in enumerate(TG.configs))


def test_rank_lookup():
    TG = build_token_graph(family("path", 7), 2)
    assert TG.rank({0, 1}) == 0
    assert TG.rank([5, 6]) == 20
    with pytest.raises(ValueError):
        TG.rank({0, 1, 2})


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=3, max_n=7), st.data())
def test_fixed_token_subgraph(G, data):
    k = data.draw(st.integers(1, G.n - 1))
    X = data.draw(st.sets(st.integers(0, G.n - 1), max_size=k))
    view = fixed_token_subgraph(build_token_graph(G, k), X)
    assert len(view.configs) == comb(G.n - len(X), k - len(X))
    assert view.witness.check(view.subgraph, view.reduced)


def test_fixed_token_subgraph_all_fixed_is_single_vertex():
    view = fixed_token_subgraph(build_token_graph(family("path", 5), 2), {1, 3})
    assert view.reduced.n == 1 and view.subgraph.n == 1


def test_fixed_token_subgraph_rejects_oversized():
    with pytest.raises(ValueError):
        fixed_token_subgraph(build_token_graph(family("path", 5), 2), {0, 1, 2})


def test_variant_spec_validation():
    with pytest.raises(ValueError):
        VariantSpec(2, "standard")
    with pytest.raises(ValueError):
        VariantSpec(0, "matching")
    with pytest.raises(ValueError):
        VariantSpec(1, "fancy")
    with pytest.raises(ValueError):
        build_variant_token_graph(family("path", 4), 1, VariantSpec(2, "matching"))


def test_variant_with_one_token_moving_is_standard():
    G = family("cycle", 6)
    for mode in ("matching", "complete"):
        assert build_variant_token_graph(G, 3, VariantSpec(1, mode)).derived == build_token_graph(G, 3).derived


def test_variant_p4_example():
    F = build_variant_token_graph(family("path", 4), 2, VariantSpec(2, "matching")).derived
    assert F.edge_count == 2
    assert sorted(F.degree(i) for i in range(F.n)) == [0, 0, 1, 1, 1, 1]


def test_variant_matching_vs_complete():
    G = family("cycle", 4)
    A, B = to_mask({0, 2}), to_mask({1, 3})
    assert variant_adjacent(G, A, B, VariantSpec(2, "matching"))
    assert variant_adjacent(G, A, B, VariantSpec(2, "complete"))
    P = family("path", 4)
    A, B = to_mask({0, 2}), to_mask({1, 3})
    assert variant_adjacent(P, A, B, VariantSpec(2, "matching"))
    assert not variant_adjacent(P, A, B, VariantSpec(2, "complete"))


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=4, max_n=7), st.data())
def test_variant_brute_force(G, data):
    k = data.draw(st.integers(2, G.n - 2))
    r = data.draw(st.integers(1, min(k, G.n - k)))
    mode = data.draw(st.sampled_from(["matching", "complete"]))
    TG = build_variant_token_graph(G, k, VariantSpec(r, mode))
    g = to_nx(G)
    expected = set()
    for A, B in itertools.combinations(TG.configs, 2):
        gone, new = elements(A & ~B), elements(B & ~A)
        if len(gone) != r:
            continue
        if mode == "complete":
            ok = all(g.has_edge(u, w) for u in gone for w in new)
        else:
            bip = nx.Graph()
            bip.add_nodes_from(("L", u) for u in gone)
            bip.add_nodes_from(("R", w) for w in new)
            bip.add_edges_from((("L", u), ("R", w)) for u in gone for w in new if g.has_edge(u, w))
            ok = len(nx.max_weight_matching(bip, maxcardinality=True)) == r
        if ok:
            expected.add(frozenset((A, B)))
    assert token_edges(TG) == expected
