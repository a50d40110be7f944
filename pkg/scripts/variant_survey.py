#!/usr/bin/env python3
"""Tabulate size, connectedness and diameter of the multi-token variants on small families."""
import argparse
import math

from tokengraphs.graph import family, is_connected
from tokengraphs.invariants import diameter
from tokengraphs.token import VariantSpec, build_variant_token_graph

FAMILIES = [("path", 6), ("cycle", 6), ("complete", 6), ("star", 5), ("complete_bipartite", 3, 3)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=3)
    args = ap.parse_args()

    print(f"{'graph':<24}{'r':>2} {'mode':<9}{'V':>5}{'E':>6}  connected  diameter")
    for kind, *params in FAMILIES:
        G = family(kind, *params)
        label = f"{kind}({','.join(map(str, params))})"
        for r in range(1, min(args.k, G.n - args.k) + 1):
            for mode in ("matching", "complete"):
                D = build_variant_token_graph(G, args.k, VariantSpec(r, mode)).derived
                d = diameter(D)
                print(f"{label:<24}{r:>2} {mode:<9}{D.n:>5}{D.edge_count:>6}  {str(is_connected(D)):<9}  "
                      f"{'inf' if d == math.inf else d}")


if __name__ == "__main__":
    main()
