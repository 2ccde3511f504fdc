"""Measure generation throughput of the concatenation engine.

Streams the cycle for one cell through a counting sink (no list is built, so
memory stays flat no matter how long the cycle is) and reports symbols per
second plus the per-symbol comparison cost. The default cell produces a bit
over ten million symbols.
"""

import argparse
import sys
import time

from bwcycles.grandmama import GenStats, iter_concat_prefixes
from bwcycles.words import ParamSet


def bench(params, repeat):
    best = None
    for _ in range(repeat):
        stats = GenStats()
        produced = 0
        started = time.perf_counter()
        for chunk in iter_concat_prefixes(params, stats=stats):
            produced += len(chunk)
        elapsed = time.perf_counter() - started
        if best is None or elapsed < best[0]:
            best = (elapsed, produced, stats)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--t", type=int, default=4)
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--w", type=int, default=19)
    ap.add_argument("--repeat", type=int, default=1, help="take the best of this many runs")
    args = ap.parse_args()

    params = ParamSet(args.t, args.n, args.w)
    expected = params.universe_size
    print(f"cell t={args.t} n={args.n} w={args.w}, {expected} symbols expected")

    elapsed, produced, stats = bench(params, max(1, args.repeat))
    if produced != expected:
        print(f"length mismatch: produced {produced}")
        return 1

    rate = produced / elapsed
    print(f"{produced} symbols in {elapsed:.2f}s ({rate / 1e6:.2f}M symbols/s)")
    print(f"comparisons {stats.comparisons} "
          f"({2 * stats.comparisons / produced:.3f} per symbol, budget 16)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
