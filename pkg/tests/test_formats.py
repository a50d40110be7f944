import io

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, to_nx
from tokengraphs.formats import (
    GraphSpecError,
    from_graph6,
    parse_edge_list,
    parse_graph_spec,
    read_graph6_file,
    subset_labels,
    to_dot,
    to_edge_list,
    to_graph6,
)
from tokengraphs.graph import family, make_graph


@settings(max_examples=100)
@given(graphs(min_n=0, max_n=12))
def test_graph6_round_trip_and_networkx_bytes(G):
    text = to_graph6(G)
    assert from_graph6(text) == G
    assert text == nx.to_graph6_bytes(to_nx(G), header=False).decode().strip()


def test_graph6_large_size_field():
    G = make_graph(70, [(0, 69)])
    text = to_graph6(G)
    assert text.startswith("~")
    assert from_graph6(text) == G


def test_graph6_errors_carry_position():
    with pytest.raises(GraphSpecError) as info:
        from_graph6("C\x01")
    assert info.value.position == 1
    with pytest.raises(GraphSpecError):
        from_graph6("")


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<" + to_graph6(family("cycle", 4))) == family("cycle", 4)


def test_edge_list_round_trip():
    G = family("cycle", 5)
    assert parse_edge_list(to_edge_list(G)) == G
    text = "# a triangle\n3 3\n0 1\n1 2  # comment\n2 0\n"
    assert parse_edge_list(text) == family("complete", 3)


@pytest.mark.parametrize("text,line", [
    ("3 2\n0 1\n", 2),
    ("3 1\n0 5\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 1\n0 x\n", 2),
    ("", 1),
])
def test_edge_list_errors_report_line(text, line):
    with pytest.raises(GraphSpecError) as info:
        parse_edge_list(text)
    assert info.value.unit == "line" and info.value.position == line


def test_dot_output():
    out = to_dot(family("path", 2), labels=subset_labels([0b01, 0b10]), name="F")
    assert out.splitlines()[0] == "graph F {"
    assert '  0 [label="{0}"];' in out and "  0 -- 1;" in out


@pytest.mark.parametrize("spec,n,m", [
    ("path:7", 7, 6),
    ("cycle:5", 5, 5),
    ("complete:4", 4, 6),
    ("biclique:2x3", 5, 6),
    ("star:4", 5, 4),
    ("dtree:4x2", 7, 6),
])
def test_graph_spec_families(spec, n, m):
    G = parse_graph_spec(spec)
    assert (G.n, G.edge_count) == (n, m)


@pytest.mark.parametrize("spec", ["path:x", "biclique:3", "cycle:2", "wheel:5", "path:3x4", "C\x02"])
def test_graph_spec_errors(spec):
    with pytest.raises(GraphSpecError):
        parse_graph_spec(spec)


def test_graph_spec_files_and_stdin(tmp_path):
    edges = tmp_path / "g.txt"
    edges.write_text(to_edge_list(family("path", 4)))
    assert parse_graph_spec(str(edges)) == family("path", 4)
    g6 = tmp_path / "g.g6"
    g6.write_text(to_graph6(family("cycle", 6)) + "\n" + to_graph6(family("path", 2)) + "\n")
    assert parse_graph_spec(str(g6)) == family("cycle", 6)
    assert read_graph6_file(str(g6))[1] == family("path", 2)
    assert parse_graph_spec("-", stdin=io.StringIO("2 1\n0 1\n")) == family("path", 2)
    assert parse_graph_spec(to_graph6(family("complete", 5))) == family("complete", 5)


def test_graph6_file_error_names_line(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~\n\x01\n")
    with pytest.raises(GraphSpecError) as info:
        read_graph6_file(str(bad))
    assert info.value.position == 2
