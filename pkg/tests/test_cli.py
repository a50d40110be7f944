import io
import json
import shlex

import pytest

from tokengraphs.cli import main
from tokengraphs.formats import parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_edgelist(capsys):
    code, out, err = run(capsys, "gen", "path:7", "--k", "2")
    assert code == 0
    G = parse_edge_list(out)
    assert (G.n, G.edge_count) == (21, 30)
    assert "21 vertices" in err


def test_gen_dot_and_json(capsys):
    code, out, _ = run(capsys, "gen", "cycle:4", "--k", "2", "--out", "dot")
    assert code == 0 and out.startswith("graph F {") and 'label="{0,1}"' in out
    code, out, _ = run(capsys, "gen", "complete:5", "--k", "2", "--r", "2", "--mode", "complete", "--out", "json")
    data = json.loads(out)
    assert data["variant"] == {"r": 2, "mode": "complete"} and len(data["edges"]) == 15


def test_gen_bad_k_is_usage_error(capsys):
    code, _, err = run(capsys, "gen", "path:3", "--k", "3")
    assert code == 2 and "error" in err


def test_bad_graph_spec(capsys):
    code, _, err = run(capsys, "gen", "wheel:5", "--k", "2")
    assert code == 2 and "unknown family" in err


def test_missing_argument_exits_two():
    with pytest.raises(SystemExit) as info:
        main(["gen", "path:4"])
    assert info.value.code == 2


def test_analyze_envelope(capsys):
    argv = ["analyze", "path:4", "--k", "2", "--which", "diameter,connectivity,clique,bipartite,hamiltonian"]
    code, out, _ = run(capsys, *argv)
    env = json.loads(out)
    assert code == 0
    assert env["schema"] == 1 and env["tool"] == "tokengraphs" and env["seed"] == 0
    assert shlex.split(env["command"]) == ["tokengraphs"] + argv
    p = env["payload"]
    assert p["diameter"] == 4 and p["clique_number"] == 2 and p["bipartite"] is True
    assert p["hamiltonian_path"] is False
    assert p["connectivity"] == 1


def test_analyze_stdin_disconnected(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("4 2\n0 1\n2 3\n"))
    code, out, _ = run(capsys, "analyze", "-", "--k", "2", "--which", "counts,diameter")
    payload = json.loads(out)["payload"]
    assert code == 0 and payload["diameter"] == "infinity"
    assert payload["counts"] == {"vertices": 6, "edges": 4, "expected_edges": 4}


def test_analyze_chromatic_reports_bracket(capsys):
    code, out, _ = run(capsys, "analyze", "complete:4", "--k", "2", "--which", "chromatic")
    assert json.loads(out)["payload"]["chromatic_number"] == {"lower": 3, "upper": 3, "exact": True}


def test_analyze_unknown_invariant(capsys):
    code, _, _ = run(capsys, "analyze", "path:4", "--k", "2", "--which", "girth")
    assert code == 2


def test_verify_envelope_replays(capsys):
    argv = ["verify", "redblue", "--seed", "4", "--threads", "1"]
    code, out, err = run(capsys, *argv)
    first = json.loads(out)
    assert code == 0 and first["payload"]["passed"] and "PASS" in err
    replay = shlex.split(first["command"])[1:]
    code2, out2, _ = run(capsys, *replay)
    assert code2 == 0 and json.loads(out2) == first


def test_verify_k_range(capsys):
    code, out, _ = run(capsys, "verify", "counts", "--max-n", "4", "--k-range", "2:2", "--threads", "1")
    env = json.loads(out)
    assert code == 0 and env["payload"]["params"]["k_min"] == 2 and env["payload"]["params"]["k_max"] == 2
    code, _, _ = run(capsys, "verify", "counts", "--k-range", "a:b")
    assert code == 2


def test_scan_exit_codes(capsys):
    code, out, err = run(capsys, "scan", "--n", "5", "--threads", "1")
    assert code == 0 and json.loads(out)["payload"]["data"]["collisions"] == []
    code, _, err = run(capsys, "scan", "--n", "9")
    assert code == 2 and "corpus" in err


def test_scan_candidate_exit_code(capsys, monkeypatch):
    # real corpora are deduplicated on load, so plant a collision in the report
    from tokengraphs import cli
    from tokengraphs.harness import CONJECTURE_FLAG, SuiteReport

    def fake_scan(n, k, corpus=None, threads=1):
        hit = {"G": "Ch", "H": "CY", "k": k}
        return SuiteReport("reconstruction", {"n": n, "k": k}, 1,
                           data={"graphs": 2, "collisions": [hit], "flag": CONJECTURE_FLAG})

    monkeypatch.setattr(cli, "reconstruction_scan", fake_scan)
    code, out, err = run(capsys, "scan", "--n", "4")
    assert code == 3 and CONJECTURE_FLAG in err
    assert json.loads(out)["payload"]["data"]["collisions"][0]["H"] == "CY"


def test_scan_corpus_file_deduplicates(capsys, tmp_path):
    corpus = tmp_path / "dup.g6"
    # the same 4-vertex path under two labellings
    corpus.write_text("Ch\nCY\n")
    code, out, _ = run(capsys, "scan", "--n", "4", "--corpus", str(corpus), "--threads", "1")
    assert code == 0 and json.loads(out)["payload"]["data"]["graphs"] == 1
