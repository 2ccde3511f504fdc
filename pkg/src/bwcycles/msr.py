"""Universal cycles from the missing-symbol register, for weight ceilings below t.

Every window alpha of weight at most w < t determines the symbol
z = w - weight(alpha) that tops the weight back up; the register that always
emits z has the length-n prefixes of rotations of length-(n+1), weight-w
necklaces as its cycles. Splicing those cycles along the first-nonzero parent
tree gives a universal cycle for the same weight-bounded universe as the
colex-concatenation engine, but traversed in a different order.

``successor_h2`` is the O(n)-per-symbol rule (at most one necklace test per
call); ``generate_reverse_colex`` builds the concatenation of aperiodic
prefixes of the weight-w necklaces in reverse colex order, and
``check_conjecture`` compares the two outputs symbol by symbol. Their equality
is an observation, not a contract: nothing in this package relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from bwcycles.grandmama import GenStats, UCycle, _period_count, _validate_window
from bwcycles.words import ParamSet, Word, _symbols, words_iter

__all__ = [
    "MsrState",
    "successor_h2",
    "generate_msr",
    "generate_reverse_colex",
    "ConjectureReport",
    "check_conjecture",
]


def _require_small_weight(params: ParamSet) -> tuple[int, int, int]:
    t, n, w = params.t, params.n, params.w_eff
    if w >= t:
        raise ValueError(
            f"missing-symbol rule needs w < t (got w={w}, t={t});"
            " for w = t expand the weight-bounded cycle instead"
        )
    return t, n, w


@dataclass(frozen=True)
class MsrState:
    """A window plus its missing symbol z = w - weight(window), updated in O(1).

    Carrying z with the window makes each successor step constant-overhead
    bookkeeping: feeding symbol s turns z into z + window[0] - s.
    """

    params: ParamSet
    window: tuple[int, ...]
    z: int

    @classmethod
    def from_window(cls, params: ParamSet, window: "Word | Sequence[int]") -> "MsrState":
        t, n, w = _require_small_weight(params)
        syms = _validate_window(params, window)
        return cls(params, syms, w - sum(syms))

    def step(self, symbol: int) -> "MsrState":
        z = self.z + self.window[0] - symbol
        window = self.window[1:] + (symbol,)
        if not 0 <= z < self.params.t:
            raise ValueError(f"feeding {symbol} after {self.window} leaves the universe")
        return MsrState(self.params, window, z)


def _h2_core(t, n, w, syms, z, exhaustive, stats):
    a1 = syms[0]
    j0 = n - 1
    while j0 >= 1 and syms[j0] == 0:
        j0 -= 1
    if j0 < 1:
        j0 = 0
    run_needed = n - 1 - j0
    # x may not exceed a1 + z, or the companion symbol y = z - x + a1 would go
    # negative; y < t is automatic because z + a1 <= w < t
    upper = min(t - 1, a1 + z)

    x = -1
    if upper >= 1:
        if exhaustive:
            for cand in range(upper, 0, -1):
                beta = (0,) * run_needed + (cand, z - cand + a1) + syms[1 : j0 + 1]
                p, it = _period_count(beta, n + 1)
                if stats is not None:
                    stats.add(tests=1, comparisons=it)
                if p:
                    x = cand
                    break
        else:
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
            if run_needed == 0:
                # with no zero padding, the companion symbol y = z - x + a1
                # immediately follows x, and the rotation starting at y caps
                # the first symbol of any necklace: x <= y, i.e. 2x <= a1 + z.
                # Starting above that can need several decrements (seen at
                # t=7, n=2, w=6, window 13), so fold it into the start point.
                cap = min(cap, (a1 + z) // 2)
            x0 = min(cap, upper)
            if x0 >= 1:
                beta = (0,) * run_needed + (x0, z - x0 + a1) + syms[1 : j0 + 1]
                p, it = _period_count(beta, n + 1)
                if stats is not None:
                    stats.add(tests=1, comparisons=it)
                x = x0 if p else x0 - 1
                if x < 1:
                    x = -1

    if x == -1 or z > x:
        return z
    if z == x:
        return 0
    return z + 1


def successor_h2(
    params: ParamSet,
    window: "Word | Sequence[int] | MsrState",
    *,
    exhaustive: bool = False,
    stats: GenStats | None = None,
) -> int:
    """Next symbol after ``window`` in the missing-symbol universal cycle.

    Same decision shape as the colex successor, with the missing symbol z in
    the leading role: find the largest x >= 1 such that 0^(n-j) x y a2..aj is a
    necklace of length n+1 (y keeps the weight at w); emit 0 if z = x, z + 1 if
    z < x, and plain z otherwise. Costs at most one necklace test per call on
    the default path; ``exhaustive=True`` is the brute-force cross-check.

    Pass an ``MsrState`` to reuse its carried z instead of re-summing the
    window.
    """
    t, n, w = _require_small_weight(params)
    if isinstance(window, MsrState):
        return _h2_core(t, n, w, window.window, window.z, exhaustive, stats)
    syms = _validate_window(params, window)
    return _h2_core(t, n, w, syms, w - sum(syms), exhaustive, stats)


def generate_msr(
    params: ParamSet,
    start: "Word | Sequence[int] | None" = None,
    steps: int | None = None,
    stats: GenStats | None = None,
    debug: bool = False,
) -> UCycle:
    """Iterate the missing-symbol successor for one full period (or ``steps``).

    With ``debug=True`` the carried z is re-derived from scratch at every
    power-of-two step and any drift raises, which pins down bookkeeping bugs
    without slowing the common path measurably.
    """
    t, n, w = _require_small_weight(params)
    if start is None:
        start = (0,) * n
    syms = _validate_window(params, start)
    size = params.universe_size
    if steps is None:
        if size < n:
            out = syms[:size]
            if stats is not None:
                stats.add(symbols=len(out))
            return UCycle(out, params, "msr")
        steps = size - n
    out = list(syms)
    win = syms
    z = w - sum(syms)
    for k in range(steps):
        s = _h2_core(t, n, w, win, z, False, stats)
        out.append(s)
        z += win[0] - s
        win = win[1:] + (s,)
        if debug and (k & (k - 1)) == 0 and z != w - sum(win):
            raise AssertionError(f"carried z drifted at step {k}: {z} != {w - sum(win)}")
    if stats is not None:
        stats.add(symbols=len(out))
    return UCycle(tuple(out), params, "msr")


def generate_reverse_colex(params: ParamSet, stats: GenStats | None = None) -> UCycle:
    """Concatenate aperiodic prefixes of weight-w necklaces of length n+1 in
    reverse colex order.

    Built by brute-force enumeration, so this engine is for desk-scale cells;
    it exists to be compared against ``generate_msr``, which conjecturally
    produces the same sequence.
    """
    t, n, w = _require_small_weight(params)
    if t ** (n + 1) > 20_000_000:
        raise ValueError(f"refusing to scan {t}^{n + 1} words for the reverse-colex engine")
    necklaces = []
    for word in words_iter(t, n + 1, None):
        if sum(word) != w:
            continue
        p, _ = _period_count(word, n + 1)
        if p:
            necklaces.append((word, p))
    necklaces.sort(key=lambda item: item[0][::-1], reverse=True)
    out: list[int] = []
    for word, p in necklaces:
        out.extend(word[:p])
    if stats is not None:
        stats.add(symbols=len(out))
    return UCycle(tuple(out), params, "reverse-colex")


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of comparing the successor-rule output with the reverse-colex
    concatenation on one parameter cell. Reported, never assumed."""

    t: int
    n: int
    w: int
    holds: bool
    length_msr: int
    length_reverse_colex: int
    first_divergence: tuple[int, int, int] | None  # (index, msr symbol, reverse-colex symbol)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "n": self.n,
            "w": self.w,
            "holds": self.holds,
            "length_msr": self.length_msr,
            "length_reverse_colex": self.length_reverse_colex,
            "first_divergence": None
            if self.first_divergence is None
            else {
                "index": self.first_divergence[0],
                "msr": self.first_divergence[1],
                "reverse_colex": self.first_divergence[2],
            },
        }


def check_conjecture(params: ParamSet) -> ConjectureReport:
    """Compare generate_msr and generate_reverse_colex symbol by symbol.

    Both sequences are anchored at the all-zero window (the reverse-colex
    concatenation starts with the 0...0w necklace, so its first n symbols are
    zeros). Divergence is reported, not raised: the equality is an open
    observation and downstream code must keep working if a counterexample
    ever shows up.
    """
    t, n, w = _require_small_weight(params)
    a = generate_msr(params).symbols
    b = generate_reverse_colex(params).symbols
    divergence = None
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            divergence = (i, x, y)
            break
    if divergence is None and len(a) != len(b):
        shorter = min(len(a), len(b))
        divergence = (
            shorter,
            a[shorter] if len(a) > shorter else -1,
            b[shorter] if len(b) > shorter else -1,
        )
    return ConjectureReport(
        t=t,
        n=n,
        w=w,
        holds=divergence is None,
        length_msr=len(a),
        length_reverse_colex=len(b),
        first_divergence=divergence,
    )
