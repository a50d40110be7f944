#!/usr/bin/env python3
"""Histogram of chi(G) - chi(F_k(G)) over the corpus.

Large gaps would indicate how far the upper bound chi(F_k(G)) <= chi(G) is from tight.
"""
import argparse
from collections import Counter

from tokengraphs.harness import SuiteParams, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--max-derived", type=int, default=60)
    ap.add_argument("--budget", type=int, default=10**6)
    args = ap.parse_args()

    rep = run_suite("chromatic", SuiteParams(max_n=args.max_n, max_derived=args.max_derived, budget=args.budget))
    gap = Counter({int(g): c for g, c in rep.data.get("gap", {}).items()})
    total = sum(gap.values())
    print(f"{total} (G, k) pairs with exact chromatic numbers")
    for g in sorted(gap):
        print(f"  gap {g}: {gap[g]:>6}  ({100 * gap[g] / total:.2f}%)")
    if rep.skipped:
        print(f"skipped: {rep.skipped}")


if __name__ == "__main__":
    main()
