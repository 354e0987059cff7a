#!/usr/bin/env python3
"""Timing sweep over instance sizes for the main algorithms.

The `zed bench` subcommand runs the fixed smoke scenarios; this script sweeps
sizes so scaling is visible.
"""

import time

from zedkit import SetGenome, lcs, zed_set_fpt, zed_set_matching
from zedkit.generate import SplitMix64, random_set_pair
from zedkit.model import SeqGenome


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return time.perf_counter() - t0, out


def main() -> None:
    print("longest common subsequence (random 40-symbol alphabet)")
    for n in (500, 1000, 2000, 5000):
        rng = SplitMix64(n)
        a = SeqGenome(tuple(rng.randint(1, 40) for _ in range(n)))
        b = SeqGenome(tuple(rng.randint(1, 40) for _ in range(n)))
        dt, out = timed(lambda: lcs(a, b))
        print(f"  n=m={n:<6} {dt:7.3f}s  (lcs length {len(out)})")

    print("matching route on special instances")
    for k, s in ((50, 500), (100, 1000), (200, 2000)):
        g1, g2 = random_set_pair(k, s, k, special=True)
        dt, dec = timed(lambda: zed_set_matching(g1, g2))
        print(f"  k={k:<4} |S|={s:<5} {dt:7.3f}s  (answer {dec.answer})")

    print("permutation scan forced to exhaust all k! pairings")
    for k in (6, 7, 8):
        left = [{i} for i in range(1, k + 1)]
        left[0] = {1, k + 1}  # one gene only on the left: always NO
        g1 = SetGenome.of(*left)
        g2 = SetGenome.of(*({i} for i in range(1, k + 1)))
        dt, dec = timed(lambda: zed_set_fpt(g1, g2, max_k=k))
        print(f"  k={k}   {dt:7.3f}s  (answer {dec.answer})")


if __name__ == "__main__":
    main()
