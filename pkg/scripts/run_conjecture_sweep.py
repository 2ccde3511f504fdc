"""Compare the register-engine cycle against the reverse-colex construction.

The two are conjectured to coincide for every cell with w < t. This sweep
checks the conjecture across a grid and reports any cell where the sequences
differ, including the first position where they split. Divergence is a
finding, not an error, so the script always exits 0.
"""

import argparse
import sys
import time

from bwcycles.msr import generate_msr, generate_reverse_colex
from bwcycles.words import ParamSet


def compare_cell(t, n, w):
    params = ParamSet(t, n, w)
    a = generate_msr(params).symbols
    b = generate_reverse_colex(params).symbols
    if a == b:
        return None
    split = next(i for i, (x, y) in enumerate(zip(a, b)) if x != y)
    return split, a, b


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-t", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--quiet", action="store_true", help="only print divergences and the summary")
    args = ap.parse_args()

    started = time.perf_counter()
    cells = 0
    divergent = []
    for t in range(2, args.max_t + 1):
        for n in range(1, args.max_n + 1):
            for w in range(t):
                cells += 1
                result = compare_cell(t, n, w)
                if result is None:
                    if not args.quiet:
                        print(f"t={t} n={n} w={w} equal")
                    continue
                split, a, b = result
                divergent.append((t, n, w))
                print(f"t={t} n={n} w={w} DIVERGES at position {split}")
                lo, hi = max(0, split - 5), split + 6
                print(f"  register      ...{a[lo:hi]}...")
                print(f"  reverse-colex ...{b[lo:hi]}...")
    elapsed = time.perf_counter() - started
    print(f"{cells} cells in {elapsed:.1f}s, {len(divergent)} divergent")
    if divergent:
        print("divergent cells:", ", ".join(f"({t},{n},{w})" for t, n, w in divergent))
    return 0


if __name__ == "__main__":
    sys.exit(main())
