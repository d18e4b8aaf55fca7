#!/usr/bin/env python3
"""Reproduce small Ramsey and Gallai-Ramsey values by exhaustive search.

Two-color: r2(C4)=6, r2(C5)=9 (and r2(C3)=6).  Gallai, triangles:
gr_k(K3,K3) for k=1..5, expected 3, 6, 11, 26, 51.
"""
import argparse
import json

from gallai_ramsey import threshold_scan

TWO_COLOR = [(3, 3, 7), (4, 4, 7), (5, 5, 10)]          # (L, from, to)
TRIANGLE = {1: 3, 2: 6, 3: 11, 4: 26, 5: 51}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-colors", type=int, default=5)
    ap.add_argument("--time-limit", type=float, default=600)
    ap.add_argument("--json", action="store_true", help="dump full reports")
    args = ap.parse_args()

    reports = []
    for L, lo, hi in TWO_COLOR:
        rep = threshold_scan(2, L, lo, hi, "two-color", time_limit=args.time_limit)
        reports.append(rep)
        print(f"r2(C{L}) = {rep.threshold}")
    for k in range(1, args.max_colors + 1):
        expect = TRIANGLE.get(k)
        lo = expect - 1 if expect else 3
        rep = threshold_scan(k, 3, lo, lo + 2, "gallai", time_limit=args.time_limit)
        reports.append(rep)
        note = "" if expect is None else f"  (closed form {expect})"
        print(f"gr_{k}(K3,K3) = {rep.threshold}{note}")
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=1))


if __name__ == "__main__":
    main()
