"""Sweep a (t, n, w) grid and check that all engines tell the same story.

For every cell: the concatenation engine, the successor engine started at 0^n,
and the tree-derived reference successor must produce identical sequences, and
the oracle must confirm exact window coverage. Cells with w < t additionally
run the register engine and reverse-colex and verify those too.

Exits nonzero if any cell fails, so it can run in CI.
"""

import argparse
import itertools
import sys
import time

from bwcycles.cyclejoin import FeedbackKind, build_tree, generic_successor
from bwcycles.grandmama import GenStats, generate_by_successor, generate_concat
from bwcycles.msr import generate_msr, generate_reverse_colex
from bwcycles.oracle import verify_universal_cycle
from bwcycles.words import ParamSet


def run_cell(t, n, w, words, verbose):
    params = ParamSet(t, n, w)
    stats = GenStats()
    concat = generate_concat(params, stats=stats)
    successor = generate_by_successor(params)

    tree = build_tree(FeedbackKind.PCR, params)
    window = (0,) * n
    reference = []
    for _ in range(params.universe_size):
        reference.append(window[0])
        window = window[1:] + (generic_successor(tree, window),)

    universe = [wd for wd, s in words if s <= w]
    problems = []
    if not concat.symbols == successor.symbols == tuple(reference):
        problems.append("engines disagree")
    if not verify_universal_cycle(concat, universe).ok:
        problems.append("concat coverage")
    if w < t:
        if not verify_universal_cycle(generate_msr(params), universe).ok:
            problems.append("register coverage")
        if not verify_universal_cycle(generate_reverse_colex(params), universe).ok:
            problems.append("reverse-colex coverage")

    ratio = 2 * stats.comparisons / max(1, len(concat))
    if verbose or problems:
        status = "ok" if not problems else "FAIL " + ", ".join(problems)
        print(f"t={t} n={n} w={w:2d} len={len(concat):7d} cmp/sym={ratio:5.2f} {status}")
    return not problems, ratio


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-t", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--cell-cap", type=int, default=10**6,
                    help="skip (t, n) pairs with t^n above this")
    ap.add_argument("--verbose", action="store_true", help="print every cell, not just failures")
    args = ap.parse_args()

    started = time.perf_counter()
    cells = failures = 0
    worst_ratio = 0.0
    for t in range(2, args.max_t + 1):
        for n in range(1, args.max_n + 1):
            if t**n > args.cell_cap:
                continue
            words = [(wd, sum(wd)) for wd in itertools.product(range(t), repeat=n)]
            for w in range(n * (t - 1) + 1):
                ok, ratio = run_cell(t, n, w, words, args.verbose)
                cells += 1
                failures += not ok
                worst_ratio = max(worst_ratio, ratio)
    elapsed = time.perf_counter() - started
    print(f"{cells} cells in {elapsed:.1f}s, {failures} failures,"
          f" worst comparisons/symbol {worst_ratio:.3f} (budget 16)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
