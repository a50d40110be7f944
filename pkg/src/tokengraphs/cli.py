"""Command line: ``tokengraphs gen|analyze|verify|scan``.

Machine output goes to stdout, human summaries to stderr.  Exit codes:
0 pass, 1 violation, 2 capacity or usage error, 3 reconstruction candidate.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import shlex
import sys

from . import __version__
from .errors import CapacityError, TokenGraphError
from .formats import GraphSpecError, parse_graph_spec, subset_labels, to_dot, to_edge_list
from .harness import SUITES, SuiteParams, load_corpus, reconstruction_scan, run_suite
from .invariants import (
    chromatic_number_exact,
    clique_number_exact,
    diameter,
    hamiltonian_path,
    is_bipartite,
    vertex_connectivity,
)
from .subsets import binom, elements
from .token import VariantSpec, build_token_graph, build_variant_token_graph, expected_counts

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CANDIDATE = 0, 1, 2, 3
ANALYZE_CAP = 2000
INVARIANTS = ("counts", "diameter", "connectivity", "clique", "chromatic", "bipartite", "hamiltonian")


def envelope(argv: list[str], seed, payload) -> dict:
    return {
        "schema": 1,
        "tool": "tokengraphs",
        "version": __version__,
        "command": shlex.join(["tokengraphs"] + list(argv)),
        "seed": seed,
        "payload": payload,
    }


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=False) + "\n")


def _token_graph(args):
    G = parse_graph_spec(args.graph)
    if args.r == 1 and args.mode in (None, "standard"):
        return build_token_graph(G, args.k)
    spec = VariantSpec(args.r, args.mode or "matching")
    return build_variant_token_graph(G, args.k, spec)


def cmd_gen(args, argv) -> int:
    tg = _token_graph(args)
    if args.out == "edgelist":
        sys.stdout.write(to_edge_list(tg.derived))
    elif args.out == "dot":
        sys.stdout.write(to_dot(tg.derived, subset_labels(tg.configs), name="F"))
    else:
        _emit({
            "n": tg.base.n,
            "k": tg.k,
            "variant": {"r": tg.variant.r, "mode": tg.variant.mode},
            "vertices": [elements(m) for m in tg.configs],
            "edges": [list(e) for e in tg.derived.edges()],
        })
    print(f"token graph: {tg.derived.n} vertices, {tg.derived.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def _analysis(tg, which: list[str], budget: int) -> dict:
    D = tg.derived
    out: dict = {}
    for item in which:
        if item not in ("counts", "diameter", "bipartite") and D.n > ANALYZE_CAP:
            raise CapacityError(f"{item} is limited to {ANALYZE_CAP} derived vertices, got {D.n}")
        if item == "counts":
            exp = expected_counts(tg.base, tg.k) if tg.is_standard else None
            out["counts"] = {"vertices": D.n, "edges": D.edge_count,
                             "expected_edges": exp[1] if exp else None}
        elif item == "diameter":
            d = diameter(D)
            out["diameter"] = "infinity" if d == math.inf else d
        elif item == "connectivity":
            out["connectivity"] = vertex_connectivity(D)
        elif item == "clique":
            out["clique_number"] = clique_number_exact(D)[0]
        elif item == "chromatic":
            res = chromatic_number_exact(D, budget=budget)
            out["chromatic_number"] = {"lower": res.lower, "upper": res.upper, "exact": res.exact}
        elif item == "bipartite":
            out["bipartite"] = is_bipartite(D)[0]
        elif item == "hamiltonian":
            res = hamiltonian_path(D, budget=budget)
            out["hamiltonian_path"] = {"found": True, "none": False}.get(res.status, "unknown")
        else:
            raise ValueError(f"unknown invariant {item!r}; choose from {', '.join(INVARIANTS)}")
    return out


def cmd_analyze(args, argv) -> int:
    tg = _token_graph(args)
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    payload = _analysis(tg, which, args.budget)
    _emit(envelope(argv, args.seed, payload))
    print(", ".join(f"{k}={v}" for k, v in payload.items()), file=sys.stderr)
    return EXIT_OK


def _k_range(text: str | None) -> tuple[int, int | None]:
    if not text:
        return 1, None
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            return int(lo), int(lo)
        return int(lo or 1), int(hi) if hi else None
    except ValueError:
        raise GraphSpecError(f"bad --k-range {text!r}; use K, LO:HI, LO: or :HI") from None


def cmd_verify(args, argv) -> int:
    k_min, k_max = _k_range(args.k_range)
    params = SuiteParams(
        max_n=args.max_n, k_min=k_min, k_max=k_max, seed=args.seed, budget=args.budget,
        samples=args.samples, threads=args.threads, corpus_file=args.corpus,
    )
    report = run_suite(args.suite, params)
    _emit(envelope(argv, args.seed, report.to_dict()))
    status = "PASS" if report.passed else "FAIL"
    skips = sum(report.skipped.values())
    print(f"{args.suite}: {status}, {report.checked} checks, {len(report.violations)} violations, "
          f"{skips} skipped, {report.runtime:.1f}s", file=sys.stderr)
    for v in report.violations[:10]:
        print(f"  violation: {v.instance} expected {v.expected} observed {v.observed}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_scan(args, argv) -> int:
    corpus = None
    if args.corpus:
        groups = load_corpus(args.corpus)
        if args.n not in groups:
            raise CapacityError(f"corpus file has no graphs on {args.n} vertices")
        corpus = groups[args.n]
    report = reconstruction_scan(args.n, args.k, corpus=corpus, threads=args.threads)
    _emit(envelope(argv, args.seed, report.to_dict()))
    hits = report.data["collisions"]
    print(f"reconstruction scan n={args.n} k={args.k}: {report.data['graphs']} graphs, "
          f"{report.checked} pairs tested, {len(hits)} collisions, {report.runtime:.1f}s", file=sys.stderr)
    if hits:
        print(f"  {report.data['flag']} {hits}", file=sys.stderr)
        return EXIT_CANDIDATE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tokengraphs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="path:7, cycle:5, complete:6, biclique:3x3, star:4, dtree:4x2, "
                                         "an edge-list file, a graph6 string, or - for stdin")
            p.add_argument("--k", type=int, required=True, help="number of tokens")
            p.add_argument("--r", type=int, default=1, help="tokens moved per step")
            p.add_argument("--mode", choices=("standard", "matching", "complete"), default=None)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=1_000_000, help="search node budget")
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    g = sub.add_parser("gen", help="write a token graph")
    common(g)
    g.add_argument("--out", choices=("dot", "edgelist", "json"), default="edgelist")

    a = sub.add_parser("analyze", help="compute invariants of a token graph")
    common(a)
    a.add_argument("--which", default="counts,diameter", help=f"comma list from {','.join(INVARIANTS)}")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    common(v, graph=False)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--k-range", default=None, help="K, LO:HI, LO: or :HI")
    v.add_argument("--samples", type=int, default=10, help="sampled pairs per instance (paths suite)")
    v.add_argument("--corpus", default=None, help="graph6 file with extra corpus graphs")

    s = sub.add_parser("scan", help="look for token-graph collisions between non-isomorphic graphs")
    common(s, graph=False)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--corpus", default=None, help="graph6 file with graphs on n vertices")
    return parser


COMMANDS = {"gen": cmd_gen, "analyze": cmd_analyze, "verify": cmd_verify, "scan": cmd_scan}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, argv)
    except (CapacityError, GraphSpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TokenGraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
