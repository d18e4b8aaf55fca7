#!/usr/bin/env python3
"""Sample random Gallai 3-colorings of K33 and look for monochromatic C9s.

Every sample should contain one; the script reports per-color hit counts
and the slowest detection.
"""
import argparse
import collections
import time

from gallai_ramsey import is_bad, random_gallai


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--n", type=int, default=33)
    ap.add_argument("--colors", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0, help="first seed; samples use seed..seed+samples-1")
    args = ap.parse_args()

    verdicts = collections.Counter()
    by_color = collections.Counter()
    slowest = (0.0, None)
    for s in range(args.seed, args.seed + args.samples):
        g = random_gallai(args.n, args.colors, s)
        t0 = time.perf_counter()
        v = is_bad(g, 9)
        dt = time.perf_counter() - t0
        slowest = max(slowest, (dt, s))
        verdicts[v.verdict] += 1
        if v.witnesses:
            by_color[v.witnesses[0].color] += 1
    print(f"verdicts: {dict(verdicts)}")
    print(f"first witness color: {dict(sorted(by_color.items()))}")
    print(f"slowest detection: {slowest[0] * 1000:.1f} ms (seed {slowest[1]})")


if __name__ == "__main__":
    main()
