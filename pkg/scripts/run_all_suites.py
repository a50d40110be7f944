#!/usr/bin/env python3
"""Run every verification suite and print a one-line summary for each.

Writes the full reports as JSON when --out is given.
"""
import argparse
import json
import sys
import time

from tokengraphs.harness import SUITES, SuiteParams, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suites", default=",".join(SUITES), help="comma list of suite names")
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default=None, help="write reports to this JSON file")
    args = ap.parse_args()

    reports = {}
    failed = 0
    for name in args.suites.split(","):
        t0 = time.perf_counter()
        rep = run_suite(name, SuiteParams(max_n=args.max_n, seed=args.seed, threads=args.threads))
        reports[name] = rep.to_dict()
        failed += not rep.passed
        status = "PASS" if rep.passed else "FAIL"
        print(f"{name:<13} {status}  checks={rep.checked:<6} violations={len(rep.violations):<3} "
              f"skipped={sum(rep.skipped.values()):<5} {time.perf_counter() - t0:6.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(reports, fh, indent=2)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
