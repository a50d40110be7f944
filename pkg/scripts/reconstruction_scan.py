#!/usr/bin/env python3
"""Search small graphs for non-isomorphic pairs with isomorphic token graphs.

Uses the built-in corpus up to n = 7; larger n needs a graph6 corpus file.
"""
import argparse
import sys

from tokengraphs.harness import load_corpus, reconstruction_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--corpus", default=None, help="graph6 file; overrides the built-in corpus for its orders")
    args = ap.parse_args()

    extra = load_corpus(args.corpus) if args.corpus else {}
    hits = 0
    for n in range(args.k + 1, args.n_max + 1):
        rep = reconstruction_scan(n, args.k, corpus=extra.get(n))
        d = rep.data
        hits += len(d["collisions"])
        print(f"n={n} k={args.k}: {d['graphs']:>5} graphs, {d['fingerprint_groups']:>5} fingerprint groups, "
              f"{d['pairs_tested']:>5} pairs tested, {len(d['collisions'])} collisions  ({rep.runtime:.1f}s)")
        for c in d["collisions"]:
            print(f"  {d['flag']} {c['G']} vs {c['H']}")
    return 3 if hits else 0


if __name__ == "__main__":
    sys.exit(main())
