"""Universal cycles for weight-bounded words: concatenation and successor engines.

The concatenation engine walks the first-nonzero parent tree of necklaces
iteratively (probe the change index, then scan left), visiting necklaces in
colexicographic order and emitting each one's aperiodic prefix. The successor
engine produces the identical cyclic sequence one symbol at a time from any
starting window, paying O(n) per symbol and at most one necklace test.

Both are instrumented: ``GenStats`` counts emitted symbols, necklace tests, and
inner-loop iterations of the necklace test (each iteration is at most two
symbol comparisons), which is how the constant-amortized-work claim is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from bwcycles.words import ParamSet, Word, _symbols

__all__ = [
    "UCycle",
    "GenStats",
    "iter_concat_prefixes",
    "generate_concat",
    "successor_h1",
    "generate_by_successor",
]


@dataclass
class GenStats:
    """Instrumentation counters shared by the generators in this package."""

    symbols: int = 0
    necklace_tests: int = 0
    comparisons: int = 0

    def add(self, symbols=0, tests=0, comparisons=0):
        self.symbols += symbols
        self.necklace_tests += tests
        self.comparisons += comparisons


@dataclass(frozen=True)
class UCycle:
    """A generated cyclic sequence plus enough provenance to interpret it.

    ``params`` is the underlying (t, n, w) cell; ``n`` doubles as the window
    length. The subset/multiset wrappers set ``scheme`` and re-alphabet the
    symbols, so only word-level cycles promise symbols < t.
    """

    symbols: tuple[int, ...]
    params: ParamSet
    engine: str
    scheme: str | None = None
    scheme_params: tuple[int, int] | None = None

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def w(self) -> int:
        return self.params.w_eff

    def __len__(self) -> int:
        return len(self.symbols)

    def window(self, i: int) -> tuple[int, ...]:
        """The length-n window starting at cyclic position i."""
        L = len(self.symbols)
        return tuple(self.symbols[(i + d) % L] for d in range(self.n))

    def windows(self) -> Iterator[tuple[int, ...]]:
        for i in range(len(self.symbols)):
            yield self.window(i)

    def __str__(self) -> str:
        if all(s < 10 for s in self.symbols):
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)


def _period_count(a: Sequence[int], n: int) -> tuple[int, int]:
    """(smallest period or 0, inner-loop iterations executed)."""
    p = 1
    for i in range(1, n):
        d = a[i] - a[i - p]
        if d < 0:
            return 0, i
        if d > 0:
            p = i + 1
    if n % p:
        return 0, n - 1
    return p, n - 1


def iter_concat_prefixes(params: ParamSet, stats: GenStats | None = None) -> Iterator[list[int]]:
    """Yield the aperiodic prefix of every weight-bounded necklace, in colex order.

    Concatenating the chunks gives the universal cycle. The walk keeps one
    shared scratch word and an explicit stack, so memory stays O(n * t) no
    matter how long the output is; chunks are fresh lists the caller may keep.

    Children of a node are discovered by first probing the increment at the
    node's change index, then scanning positions to its left; each child is
    re-tested on entry to learn its period. All tests are tallied in ``stats``.
    """
    t, n, w = params.t, params.n, params.w_eff
    a = [0] * n
    tmax = t - 1
    tests = 0
    iters = 0
    symbols = 1
    try:
        yield [0]
        if w == 0:
            return
        # frame: [next_child_pos, change_index, has_increment_child, node_weight, entry_pos]
        stack = []
        fr = None

        # children of the root: change index n-1, weight 0
        c0 = n - 1
        c_ok = False
        if a[c0] < tmax:
            a[c0] += 1
            p, it = _period_count(a, n)
            a[c0] -= 1
            tests += 1
            iters += it
            c_ok = p > 0
        j = c0 - 1
        while j >= 0:
            a[j] = 1
            p, it = _period_count(a, n)
            a[j] = 0
            tests += 1
            iters += it
            if p == 0:
                break
            j -= 1
        if j + 1 < c0 or c_ok:
            stack.append([j + 1, c0, c_ok, 0, -1])

        while stack:
            fr = stack[-1]
            i = fr[0]
            if i < fr[1] or (i == fr[1] and fr[2]):
                fr[0] += 1
                # enter the child that bumps position i
                a[i] += 1
                w2 = fr[3] + 1
                p, it = _period_count(a, n)
                tests += 1
                iters += it
                yield a[:p]
                symbols += p
                if w2 < w:
                    c_ok = False
                    if a[i] < tmax:
                        a[i] += 1
                        p, it = _period_count(a, n)
                        a[i] -= 1
                        tests += 1
                        iters += it
                        c_ok = p > 0
                    j = i - 1
                    while j >= 0:
                        a[j] = 1
                        p, it = _period_count(a, n)
                        a[j] = 0
                        tests += 1
                        iters += it
                        if p == 0:
                            break
                        j -= 1
                    if j + 1 < i or c_ok:
                        stack.append([j + 1, i, c_ok, w2, i])
                        continue
                a[i] -= 1
            else:
                stack.pop()
                if fr[4] >= 0:
                    a[fr[4]] -= 1
    finally:
        if stats is not None:
            stats.add(symbols=symbols, tests=tests, comparisons=iters)


def generate_concat(
    params: ParamSet,
    sink: Callable[[list[int]], None] | None = None,
    stats: GenStats | None = None,
) -> UCycle | None:
    """Build the whole universal cycle for one (t, n, w) cell.

    With no sink the sequence is materialized and returned as a UCycle. With a
    sink, chunks are handed over as they are produced, nothing is retained, and
    None is returned; use that form for very long outputs.
    """
    if sink is not None:
        for chunk in iter_concat_prefixes(params, stats):
            sink(chunk)
        return None
    out: list[int] = []
    for chunk in iter_concat_prefixes(params, stats):
        out.extend(chunk)
    return UCycle(tuple(out), params, "grandmama-concat")


def _validate_window(params: ParamSet, window) -> tuple[int, ...]:
    syms = _symbols(window)
    if len(syms) != params.n:
        raise ValueError(f"window length {len(syms)} != n = {params.n}")
    if any(s < 0 or s >= params.t for s in syms):
        raise ValueError(f"window {syms} has symbols outside 0..{params.t - 1}")
    if sum(syms) > params.w_eff:
        raise ValueError(f"window {syms} exceeds the weight ceiling {params.w_eff}")
    return syms


def successor_h1(
    params: ParamSet,
    window: "Word | Sequence[int]",
    *,
    exhaustive: bool = False,
    stats: GenStats | None = None,
) -> int:
    """Next symbol after ``window`` in the colex concatenation cycle.

    The rule: let j be the position of the last nonzero symbol among the final
    n-1 window symbols (position 1 when there is none), and let x be the
    largest symbol that keeps 0^(n-j) x a2..aj a necklace without busting the
    weight ceiling. Emit 0 when the leading symbol equals x, leading+1 when it
    is below x, and the leading symbol unchanged otherwise (including x
    nonexistent).

    The default path locates the only viable candidate arithmetically and
    spends at most one necklace test. ``exhaustive=True`` scans candidates from
    the top instead; both paths agree everywhere and the tests assert it.
    """
    t, n, w = params.t, params.n, params.w_eff
    syms = _validate_window(params, window)
    a1 = syms[0]
    tail_weight = sum(syms) - a1

    j0 = n - 1
    while j0 >= 1 and syms[j0] == 0:
        j0 -= 1
    if j0 < 1:
        j0 = 0
    run_needed = n - 1 - j0
    upper = min(t - 1, w - tail_weight)

    x = -1
    if upper >= 1:
        if exhaustive:
            for cand in range(upper, 0, -1):
                beta = (0,) * run_needed + (cand,) + syms[1 : j0 + 1]
                p, it = _period_count(beta, n)
                if stats is not None:
                    stats.add(tests=1, comparisons=it)
                if p:
                    x = cand
                    break
        else:
            # smallest symbol that follows a run of run_needed zeros strictly
            # inside the tail; any candidate above it cannot be a necklace
            cap = t - 1
            zrun = 0
            for pos in range(1, j0 + 1):
                s = syms[pos]
                if zrun >= run_needed and s < cap:
                    cap = s
                if s == 0:
                    zrun += 1
                else:
                    zrun = 0
            x0 = min(cap, upper)
            if x0 >= 1:
                beta = (0,) * run_needed + (x0,) + syms[1 : j0 + 1]
                p, it = _period_count(beta, n)
                if stats is not None:
                    stats.add(tests=1, comparisons=it)
                x = x0 if p else x0 - 1
                if x < 1:
                    x = -1

    if x == -1 or a1 > x:
        return a1
    if a1 == x:
        return 0
    return a1 + 1


def generate_by_successor(
    params: ParamSet,
    start: "Word | Sequence[int] | None" = None,
    steps: int | None = None,
    stats: GenStats | None = None,
) -> UCycle:
    """Generate the cycle by iterating the successor rule from ``start``.

    By default emits exactly one full period: the universe size |Sigma_t(n,w)|
    symbols. From the all-zero window this is byte-for-byte the concatenation
    engine's output; from any other valid window it is the same cyclic sequence
    rotated. ``steps`` overrides the number of successor applications.
    """
    t, n = params.t, params.n
    if start is None:
        start = (0,) * n
    syms = _validate_window(params, start)
    size = params.universe_size
    if steps is None:
        if size < n:
            # single-word universes: the cycle is shorter than the window
            out = syms[:size]
            if stats is not None:
                stats.add(symbols=len(out))
            return UCycle(out, params, "grandmama-successor")
        steps = size - n
    out = list(syms)
    win = syms
    for _ in range(steps):
        s = successor_h1(params, win, stats=stats)
        out.append(s)
        win = win[1:] + (s,)
    if stats is not None:
        stats.add(symbols=len(out))
    return UCycle(tuple(out), params, "grandmama-successor")
