#!/usr/bin/env python3
"""Verdicts for the doubling constructions on m*2^k vertices against C_{2m+1}.

    python scripts/lower_bounds.py --m 2 3 4 --max-colors 6
"""
import argparse
import time

from gallai_ramsey import gallai_lower_bound, is_bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--max-colors", type=int, default=6)
    args = ap.parse_args()

    print(f"{'m':>3} {'k':>3} {'n':>6} {'cycle':>6}  verdict   ms")
    for m in args.m:
        for k in range(1, args.max_colors + 1):
            g = gallai_lower_bound(m, k)
            t0 = time.perf_counter()
            v = is_bad(g, 2 * m + 1)
            ms = (time.perf_counter() - t0) * 1000
            print(f"{m:>3} {k:>3} {g.n:>6} {2 * m + 1:>6}  {v.verdict:<8} {ms:6.1f}")


if __name__ == "__main__":
    main()
