import json

import networkx as nx
import pytest

from conftest import from_nx
from tokengraphs.errors import CapacityError
from tokengraphs.formats import to_graph6
from tokengraphs.graph import family, permute
from tokengraphs.harness import (
    KNOWN_COUNTS,
    SUITES,
    GraphCorpus,
    SuiteParams,
    enumerate_nonisomorphic_graphs,
    load_corpus,
    lift_ham_path,
    reconstruction_scan,
    run_suite,
    union_find_acyclic,
)


@pytest.mark.parametrize("n", range(1, 7))
def test_corpus_counts_match_networkx_atlas(n):
    # the atlas lists every graph on up to 7 vertices
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    corpus = enumerate_nonisomorphic_graphs(n)
    assert len(corpus) == len(atlas) == KNOWN_COUNTS[n]


def test_corpus_members_pairwise_non_isomorphic():
    members = enumerate_nonisomorphic_graphs(5).members
    graphs = [nx.Graph() for _ in members]
    for g, G in zip(graphs, members):
        g.add_nodes_from(range(G.n))
        g.add_edges_from(G.edges())
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not nx.is_isomorphic(graphs[i], graphs[j])


def test_load_corpus_groups_by_order(tmp_path):
    path = tmp_path / "c.g6"
    path.write_text("\n".join(to_graph6(G) for G in [family("path", 3), family("cycle", 4), family("path", 4)]))
    groups = load_corpus(str(path))
    assert sorted(groups) == [3, 4] and len(groups[4]) == 2


@pytest.mark.parametrize("suite", ["counts", "isomorphism", "redblue", "variants", "product"])
def test_suite_reports_are_deterministic(suite):
    params = SuiteParams(max_n=5, seed=3)
    a = run_suite(suite, params).to_dict()
    b = run_suite(suite, params).to_dict()
    assert a == b
    json.dumps(a)


def test_threads_do_not_change_the_report():
    params = SuiteParams(max_n=5)
    one = run_suite("diameter", params).to_dict()
    two = run_suite("diameter", SuiteParams(max_n=5, threads=2)).to_dict()
    one["params"].pop("threads")
    two["params"].pop("threads")
    assert one == two


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nonsense")
    assert set(SUITES) >= {"counts", "diameter", "connectivity", "clique", "chromatic", "hamilton", "product"}


def test_scan_limits():
    with pytest.raises(CapacityError):
        reconstruction_scan(9)
    big = GraphCorpus(9, (family("path", 9),), "test")
    with pytest.raises(CapacityError):
        reconstruction_scan(9, 3, corpus=big)


def test_scan_detects_planted_collision():
    # one graph listed twice under different labels must collide with itself
    G = family("path", 5)
    corpus = GraphCorpus(5, (G, permute(G, [4, 2, 0, 1, 3])), "test")
    report = reconstruction_scan(5, 2, corpus=corpus)
    assert len(report.data["collisions"]) == 1 and report.data["flag"]


def test_lift_ham_path_on_cycle():
    G = from_nx(nx.cycle_graph(6))
    walk = lift_ham_path(G, [0, 1, 2, 3, 4, 5], 3)
    assert walk.is_valid(G) and len(set(walk.steps)) == 20


def test_union_find_acyclic():
    assert union_find_acyclic([(1, 2), (2, 3)])
    assert not union_find_acyclic([(1, 2), (2, 3), (3, 1)])
