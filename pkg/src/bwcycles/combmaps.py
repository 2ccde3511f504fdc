"""Subsets and multisets of {1..n} as strings, and universal cycles for them.

Three string representations carry the combinatorial objects:

- subset difference: a k-subset becomes its consecutive gaps d1 = s1,
  di = si - s(i-1), a length-k word over {1..n-k+1};
- multiset shorthand frequency: a k-multiset over {1..n} becomes the counts of
  1..n-1 (the count of n is implied), a length-(n-1) word over {0..k};
- multiset difference: consecutive gaps of the sorted multiset with the first
  symbol lowered by one, a length-k word over {0..n-1}.

Each representation turns the object family into exactly the weight-bounded
word universe some (t, n, w) cell generates, so the engines from grandmama and
msr yield universal cycles for k-subsets and k-multisets directly. For subsets
the engine alphabet {0..n-k} is shifted up by one on output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from bwcycles.grandmama import UCycle, generate_concat
from bwcycles.msr import generate_msr, generate_reverse_colex
from bwcycles.words import ParamSet, Word, _symbols

__all__ = [
    "CombObject",
    "Representation",
    "SCHEME_SUBSET_DIFF",
    "SCHEME_MULTISET_FREQ",
    "SCHEME_MULTISET_DIFF",
    "subset_to_diff",
    "diff_to_subset",
    "multiset_to_freq",
    "freq_to_multiset",
    "multiset_to_diff",
    "diff_to_multiset",
    "ucycle_subsets",
    "ucycle_multisets_freq",
    "ucycle_multisets_diff",
    "decode_window",
    "fixed_weight_expand",
]

SCHEME_SUBSET_DIFF = "subset_difference"
SCHEME_MULTISET_FREQ = "multiset_shorthand_frequency"
SCHEME_MULTISET_DIFF = "multiset_difference"

_SCHEMES = (SCHEME_SUBSET_DIFF, SCHEME_MULTISET_FREQ, SCHEME_MULTISET_DIFF)


@dataclass(frozen=True)
class CombObject:
    """A k-subset or k-multiset of the ground set {1..n}.

    ``elements`` is sorted; subsets are strictly increasing, multisets merely
    non-decreasing.
    """

    kind: str  # "subset" | "multiset"
    n: int
    k: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("subset", "multiset"):
            raise ValueError(f"kind must be subset or multiset, got {self.kind!r}")
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n, k >= 1, got n={self.n} k={self.k}")
        object.__setattr__(self, "elements", tuple(self.elements))
        if len(self.elements) != self.k:
            raise ValueError(f"expected {self.k} elements, got {len(self.elements)}")
        for e in self.elements:
            if not 1 <= e <= self.n:
                raise ValueError(f"element {e} outside 1..{self.n}")
        pairs = zip(self.elements, self.elements[1:])
        if self.kind == "subset":
            if self.k > self.n:
                raise ValueError(f"a subset cannot have k={self.k} > n={self.n}")
            if any(a >= b for a, b in pairs):
                raise ValueError("subset elements must be strictly increasing")
        elif any(a > b for a, b in pairs):
            raise ValueError("multiset elements must be sorted")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "k": self.k, "elements": list(self.elements)}


@dataclass(frozen=True)
class Representation:
    """A combinatorial object rendered as a string under one of the schemes."""

    scheme: str
    word: Word

    def __post_init__(self) -> None:
        if self.scheme not in _SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")


def subset_to_diff(obj: CombObject) -> Word:
    """Difference representation of a subset: {1,3,4} in [5] -> 121."""
    if obj.kind != "subset":
        raise ValueError("subset_to_diff takes a subset")
    e = obj.elements
    diffs = (e[0],) + tuple(e[i] - e[i - 1] for i in range(1, obj.k))
    return Word(diffs, obj.n - obj.k + 2)


def diff_to_subset(word: "Word | Sequence[int]", n: int) -> CombObject:
    """Inverse of subset_to_diff: partial sums rebuild the subset."""
    diffs = _symbols(word)
    if not diffs:
        raise ValueError("empty difference word")
    total = 0
    elements = []
    for d in diffs:
        if d < 1:
            raise ValueError(f"difference symbols must be positive, got {d}")
        total += d
        if total > n:
            raise ValueError(f"partial sums exceed the ground set bound {n}")
        elements.append(total)
    return CombObject("subset", n, len(diffs), tuple(elements))


def multiset_to_freq(obj: CombObject) -> Word:
    """Shorthand frequency representation: counts of 1..n-1, count of n implied."""
    if obj.kind != "multiset":
        raise ValueError("multiset_to_freq takes a multiset")
    if obj.n < 2:
        raise ValueError("frequency words need a ground set with n >= 2")
    counts = [0] * (obj.n - 1)
    for e in obj.elements:
        if e < obj.n:
            counts[e - 1] += 1
    return Word(tuple(counts), obj.k + 1)


def freq_to_multiset(word: "Word | Sequence[int]", k: int) -> CombObject:
    """Inverse of multiset_to_freq; the ground size is the word length plus one."""
    freqs = _symbols(word)
    n = len(freqs) + 1
    if any(f < 0 for f in freqs):
        raise ValueError("frequencies cannot be negative")
    used = sum(freqs)
    if used > k:
        raise ValueError(f"frequencies sum to {used}, above k={k}")
    elements = []
    for value, f in enumerate(freqs, start=1):
        elements.extend([value] * f)
    elements.extend([n] * (k - used))
    return CombObject("multiset", n, k, tuple(elements))


def multiset_to_diff(obj: CombObject) -> Word:
    """Difference representation with the first symbol lowered by one."""
    if obj.kind != "multiset":
        raise ValueError("multiset_to_diff takes a multiset")
    e = obj.elements
    diffs = (e[0] - 1,) + tuple(e[i] - e[i - 1] for i in range(1, obj.k))
    return Word(diffs, obj.n)


def diff_to_multiset(word: "Word | Sequence[int]", n: int) -> CombObject:
    """Inverse of multiset_to_diff."""
    diffs = _symbols(word)
    if not diffs:
        raise ValueError("empty difference word")
    if any(d < 0 for d in diffs):
        raise ValueError("multiset difference symbols cannot be negative")
    current = diffs[0] + 1
    elements = [current]
    for d in diffs[1:]:
        current += d
        elements.append(current)
    if current > n:
        raise ValueError(f"differences reach {current}, outside the ground set 1..{n}")
    return CombObject("multiset", n, len(diffs), tuple(elements))


def _run_engine(params: ParamSet, engine: str) -> UCycle:
    if engine == "grandmama":
        return generate_concat(params)
    if engine == "msr":
        return generate_msr(params)
    if engine == "reverse-colex":
        return generate_reverse_colex(params)
    raise ValueError(f"unknown engine {engine!r}")


def ucycle_subsets(n: int, k: int, engine: str = "grandmama") -> UCycle:
    """Universal cycle for the k-subsets of {1..n} in difference representation.

    Runs the chosen engine on the (n-k+1, k, n-k) word cell and shifts every
    symbol up by one; each k-subset's difference word then appears exactly once
    as a cyclic window. Length C(n, k). k = n collapses to the one-letter
    alphabet and yields the single window 1^k.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k} n={n}")
    params = ParamSet(n - k + 1, k, n - k)
    base = _run_engine(params, engine)
    return UCycle(
        tuple(s + 1 for s in base.symbols),
        params,
        base.engine,
        scheme=SCHEME_SUBSET_DIFF,
        scheme_params=(n, k),
    )


def _multiset_guard(n: int, k: int, allow_degenerate: bool) -> None:
    if n >= 2 and k >= 2:
        return
    if not allow_degenerate:
        raise ValueError(
            f"multiset cycles assume n, k >= 2 (got n={n}, k={k});"
            " pass allow_degenerate=True to accept collapsed cells"
        )
    if n < 1 or k < 1:
        raise ValueError(f"need n, k >= 1, got n={n} k={k}")


def ucycle_multisets_freq(
    n: int, k: int, engine: str = "grandmama", allow_degenerate: bool = False
) -> UCycle:
    """Universal cycle for k-multisets of {1..n} in shorthand frequency form.

    Word cell: (k+1, n-1, k). Length C(n+k-1, k).
    """
    _multiset_guard(n, k, allow_degenerate)
    if n < 2:
        raise ValueError("frequency windows have length n-1, so n >= 2 is required")
    params = ParamSet(k + 1, n - 1, k)
    base = _run_engine(params, engine)
    return UCycle(
        base.symbols, params, base.engine, scheme=SCHEME_MULTISET_FREQ, scheme_params=(n, k)
    )


def ucycle_multisets_diff(
    n: int, k: int, engine: str = "grandmama", allow_degenerate: bool = False
) -> UCycle:
    """Universal cycle for k-multisets of {1..n} in difference form.

    Word cell: (n, k, n-1). Length C(n+k-1, k).
    """
    _multiset_guard(n, k, allow_degenerate)
    params = ParamSet(n, k, n - 1)
    base = _run_engine(params, engine)
    return UCycle(
        base.symbols, params, base.engine, scheme=SCHEME_MULTISET_DIFF, scheme_params=(n, k)
    )


def decode_window(cycle: UCycle, position: int):
    """Decode the cyclic window starting at ``position``.

    For scheme-tagged cycles this returns the CombObject behind the window; for
    plain word cycles it returns the window as a Word.
    """
    if not 0 <= position < len(cycle):
        raise ValueError(f"position {position} outside 0..{len(cycle) - 1}")
    win = cycle.window(position)
    if cycle.scheme is None:
        return Word(win, cycle.t)
    n, k = cycle.scheme_params
    if cycle.scheme == SCHEME_SUBSET_DIFF:
        return diff_to_subset(win, n)
    if cycle.scheme == SCHEME_MULTISET_FREQ:
        return freq_to_multiset(win, k)
    if cycle.scheme == SCHEME_MULTISET_DIFF:
        return diff_to_multiset(win, n)
    raise ValueError(f"unknown scheme {cycle.scheme!r}")


def fixed_weight_expand(cycle: UCycle) -> list[tuple[int, ...]]:
    """Expand a weight-bounded cycle into every weight-w word of length n+1.

    Appending the missing symbol w - weight(window) to each cyclic window gives
    each length-(n+1) word of weight exactly w once, provided w < t. At w = t
    the all-zero window is first collapsed from n zeros to n-1 (dropping one
    symbol of the cycle); above t there is no such cycle and we refuse.
    """
    if cycle.scheme is not None:
        raise ValueError("fixed-weight expansion applies to word-level cycles")
    t, n, w = cycle.t, cycle.n, cycle.w
    if w > t:
        raise ValueError(f"fixed-weight expansion needs w <= t, got w={w} t={t}")
    symbols = list(cycle.symbols)
    if w == t:
        zero = (0,) * n
        spot = next((i for i in range(len(symbols)) if cycle.window(i) == zero), None)
        if spot is None:
            raise ValueError("w = t expansion needs the all-zero window in the cycle")
        del symbols[spot]
    L = len(symbols)
    out = []
    for i in range(L):
        win = tuple(symbols[(i + d) % L] for d in range(n))
        out.append(win + (w - sum(win),))
    return out
