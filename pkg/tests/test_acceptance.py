"""Acceptance criteria 1-11, each run at its stated scale.

The terminal summary prints one PASS/FAIL line per criterion with its time
against the target.
"""
from math import comb

import networkx as nx
import pytest

from conftest import from_nx, to_nx
from tokengraphs.cli import main
from tokengraphs.graph import are_isomorphic, cartesian_product, family
from tokengraphs.harness import SuiteParams, enumerate_nonisomorphic_graphs, reconstruction_scan, run_suite
from tokengraphs.invariants import bipartite_imbalance, chromatic_number_exact, gray_code_ham_path, hamiltonian_path
from tokengraphs.paths import check_internally_disjoint, disjoint_path_family
from tokengraphs.token import VariantSpec, build_token_graph, build_variant_token_graph


def assert_passed(report):
    shown = [(v.instance, v.expected, v.observed) for v in report.violations[:5]]
    assert report.passed, f"{len(report.violations)} violations, first: {shown}"
    assert report.checked > 0


@pytest.mark.criterion(1, "vertex and edge counts, n in {4,5,6}", 30)
def test_counts():
    corpus = [G for n in (4, 5, 6) for G in enumerate_nonisomorphic_graphs(n).members]
    assert len(corpus) == 201
    for G in corpus:
        for k in range(1, G.n):
            F = build_token_graph(G, k).derived
            assert F.n == comb(G.n, k)
            assert F.edge_count == comb(G.n - 2, k - 1) * G.edge_count
    report = run_suite("counts", SuiteParams(min_n=4, max_n=6))
    assert_passed(report)


@pytest.mark.criterion(2, "one-token, complement and fixed-token isomorphisms", 30)
def test_isomorphisms():
    report = run_suite("isomorphism", SuiteParams(max_n=7))
    assert_passed(report)
    assert report.checked >= 300
    # independent check of the complement isomorphism
    for G in enumerate_nonisomorphic_graphs(5).members[::7]:
        for k in (1, 2):
            a = to_nx(build_token_graph(G, k).derived)
            b = to_nx(build_token_graph(G, 5 - k).derived)
            assert nx.is_isomorphic(a, b)


@pytest.mark.criterion(3, "diameter sandwich and exact values", 60)
def test_diameter():
    report = run_suite("diameter", SuiteParams(max_n=7, k_max=3))
    assert_passed(report)
    for G, want in [(family("path", 4), 4), (family("path", 5), 6), (family("diameter_tree", 4, 2), 8)]:
        assert nx.diameter(to_nx(build_token_graph(G, 2).derived)) == want


@pytest.mark.criterion(4, "connectivity lower bound, K5/K6 values and path families", 120)
def test_connectivity():
    report = run_suite("connectivity", SuiteParams(max_n=7, max_derived=60))
    assert_passed(report)
    for n, want in [(5, 6), (6, 8)]:
        K = family("complete", n)
        assert nx.node_connectivity(to_nx(build_token_graph(K, 2).derived)) == want
        fam = disjoint_path_family(K, {0, 1}, {0, 2}, n - 1)
        assert check_internally_disjoint(fam.paths)[0]
        assert all(p.is_valid(K) for p in fam.paths)
        assert fam.achieved >= want


@pytest.mark.criterion(5, "red-blue matching on 1000 instances", 5)
def test_red_blue():
    report = run_suite("redblue", SuiteParams())
    assert_passed(report)
    assert report.checked == 1000


@pytest.mark.criterion(6, "clique formula, witnesses and 10^4 triangles", 120)
def test_cliques():
    report = run_suite("clique", SuiteParams(max_n=7, k_max=4))
    assert_passed(report)
    assert report.data["triangles"] >= 10_000


@pytest.mark.criterion(7, "summed colouring, chromatic bounds and bipartiteness", 180)
def test_chromatic():
    report = run_suite("chromatic", SuiteParams(max_n=7, max_derived=60))
    assert_passed(report)
    assert chromatic_number_exact(build_token_graph(family("complete", 4), 2).derived).value == 3
    # F_2(K_4) is the octahedron, whose chromatic number is 3
    assert are_isomorphic(build_token_graph(family("complete", 4), 2).derived, from_nx(nx.octahedral_graph()))


@pytest.mark.criterion(8, "Hamiltonian paths of path token graphs, Gray code, imbalance", 120)
def test_hamiltonian():
    report = run_suite("hamilton", SuiteParams(max_n=8, k_max=3))
    assert_passed(report)
    cells = report.data.get("exception_cells", [])
    assert all(c["hamiltonian_path"] for c in cells)
    assert {(c["family"], c["k"]) for c in cells} >= {("path:3", 1), ("path:5", 1), ("path:7", 1)}
    walk = gray_code_ham_path(6, 3)
    assert len(set(walk.steps)) == 20 and walk.is_valid(family("path", 6))
    assert hamiltonian_path(build_token_graph(family("complete_bipartite", 3, 3), 2).derived).status == "none"
    assert bipartite_imbalance(3, 3) == 0
    assert bipartite_imbalance(3, 2) == -3


@pytest.mark.criterion(9, "product embeddings and the star/subdivided-K_n isomorphism", 60)
def test_products():
    report = run_suite("product", SuiteParams(max_n=8))
    assert_passed(report)
    assert report.checked >= 55
    grid = to_nx(cartesian_product(family("path", 3), family("path", 4))[0])
    assert nx.is_isomorphic(grid, nx.grid_2d_graph(3, 4))


@pytest.mark.criterion(10, "multi-token variants: Petersen graph and r = 1 collapse", 30)
def test_variants():
    report = run_suite("variants", SuiteParams(max_n=7))
    assert_passed(report)
    K5 = family("complete", 5)
    for mode in ("matching", "complete"):
        D = build_variant_token_graph(K5, 2, VariantSpec(2, mode)).derived
        assert nx.is_isomorphic(to_nx(D), nx.petersen_graph())


@pytest.mark.criterion(11, "reconstruction scan n <= 6, k = 2", 120)
def test_reconstruction_scan(capsys):
    for n in range(3, 7):
        report = reconstruction_scan(n, 2)
        assert report.data["collisions"] == []
    assert main(["scan", "--n", "6", "--k", "2", "--threads", "1"]) == 0
    capsys.readouterr()
