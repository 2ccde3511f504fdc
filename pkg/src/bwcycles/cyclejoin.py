"""Cycle-joining trees for two shift registers, and the generic joined successor.

Two feedback functions are covered:

- PCR (pure cycling register): the feedback symbol is the window's first symbol,
  so the register's cycles are the rotation classes of weight-bounded words and
  each cycle is named by its necklace.
- MSR (missing symbol register): the feedback symbol is w minus the window
  weight. Each cycle is named by a necklace of length n+1 and weight exactly w;
  the windows on that cycle are the length-n prefixes of its rotations.

A parent rule maps every non-root necklace to another necklace one step closer
to the all-zero root; drawing an edge per node yields a spanning tree of the
register's cycles. Each edge carries a conjugate pair (two windows differing
only in their first symbol, one per endpoint cycle); swapping the successors of
the two windows of every edge splices all cycles into one universal cycle. That
splice, applied to the plain register map, is ``generic_successor``: the slow,
obviously-correct reference the O(n)-per-symbol rules are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from bwcycles.words import ParamSet, Word, _symbols, necklace_info, words_iter

__all__ = [
    "FeedbackKind",
    "ConjugatePair",
    "CycleTree",
    "pcr_parent",
    "msr_parent",
    "build_tree",
    "check_chain_property",
    "check_periodic_leaves",
    "generic_successor",
]

DEFAULT_NODE_CAP = 10**6


class FeedbackKind(Enum):
    PCR = "pcr"
    MSR = "msr"


@dataclass(frozen=True)
class ConjugatePair:
    """Two windows that differ exactly in their first symbol.

    ``sigma`` sits on the parent's cycle, ``sigma_hat`` on the child's; swapping
    their successors merges the two cycles.
    """

    sigma: tuple[int, ...]
    sigma_hat: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sigma) != len(self.sigma_hat):
            raise ValueError("conjugate pair windows must have equal length")
        if not self.sigma or self.sigma[1:] != self.sigma_hat[1:]:
            raise ValueError("conjugate pair windows must differ exactly in the first symbol")
        if self.sigma[0] == self.sigma_hat[0]:
            raise ValueError("conjugate pair windows must differ in the first symbol")


def _render(word: tuple[int, ...]) -> str:
    if all(s < 10 for s in word):
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


def _first_nonzero(word: tuple[int, ...]) -> int:
    """0-based index of the first nonzero symbol, or -1 if all zero."""
    for i, s in enumerate(word):
        if s:
            return i
    return -1


def _change_index(word: tuple[int, ...]) -> int:
    """1-based first-nonzero position; the all-zero convention is the full length."""
    j = _first_nonzero(word)
    return len(word) if j < 0 else j + 1


def _pcr_parent(word: tuple[int, ...]) -> tuple[int, ...]:
    j = _first_nonzero(word)
    return word[:j] + (word[j] - 1,) + word[j + 1 :]


def _msr_parent(word: tuple[int, ...]) -> tuple[int, ...]:
    j = _first_nonzero(word)
    return word[:j] + (word[j] - 1, word[j + 1] + 1) + word[j + 2 :]


def _pcr_pair(child: tuple[int, ...]) -> ConjugatePair:
    j = _first_nonzero(child)
    tail = child[j + 1 :] + child[:j]
    return ConjugatePair(sigma=(child[j] - 1,) + tail, sigma_hat=(child[j],) + tail)


def _msr_pair(child: tuple[int, ...]) -> ConjugatePair:
    # child has length n+1; the pair lives in length-n window space
    j = _first_nonzero(child)
    tail = child[j + 2 :] + child[:j]
    return ConjugatePair(sigma=(child[j + 1] + 1,) + tail, sigma_hat=(child[j + 1],) + tail)


def pcr_parent(word: "Word | Sequence[int]"):
    """Parent of a nonzero necklace under the pure-cycling-register rule.

    Decrement the first nonzero symbol. The result is again a necklace of the
    same length with weight one lower. Given a Word, returns a Word; given a
    plain sequence, returns a tuple.
    """
    syms = _symbols(word)
    if not necklace_info(syms).is_necklace:
        raise ValueError(f"{_render(syms)} is not a necklace")
    if _first_nonzero(syms) < 0:
        raise ValueError("the all-zero root has no parent")
    out = _pcr_parent(syms)
    return Word(out, word.t) if isinstance(word, Word) else out


def msr_parent(word: "Word | Sequence[int]"):
    """Parent of a necklace under the missing-symbol-register rule.

    Decrement the first nonzero symbol and increment the one after it, keeping
    the weight fixed. Defined for every weight-w necklace except the root form
    0...0w, whose first nonzero symbol is the last position.
    """
    syms = _symbols(word)
    if not necklace_info(syms).is_necklace:
        raise ValueError(f"{_render(syms)} is not a necklace")
    j = _first_nonzero(syms)
    if j < 0 or j == len(syms) - 1:
        raise ValueError(f"{_render(syms)} is a root; it has no parent")
    out = _msr_parent(syms)
    return Word(out, word.t) if isinstance(word, Word) else out


@dataclass
class CycleTree:
    """A rooted spanning tree over the cycles of one feedback register.

    Nodes are necklace labels (tuples). ``children`` lists each node's children
    in ascending change-index order, which makes the preorder walk visit labels
    in colex order (PCR) or reverse colex order (MSR). Every non-root node
    carries the conjugate pair of the edge to its parent.
    """

    kind: FeedbackKind
    params: ParamSet
    root: tuple[int, ...]
    parent: dict[tuple[int, ...], tuple[int, ...] | None]
    children: dict[tuple[int, ...], tuple[tuple[int, ...], ...]]
    change_index: dict[tuple[int, ...], int]
    pairs: dict[tuple[int, ...], ConjugatePair | None]
    depth: dict[tuple[int, ...], int]
    _successor_map: dict[tuple[int, ...], int] | None = field(
        default=None, repr=False, compare=False
    )

    def __len__(self) -> int:
        return len(self.parent)

    def preorder(self) -> list[tuple[int, ...]]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.append(node)
            stack.extend(reversed(self.children[node]))
        return out

    def edges_root_down(self) -> list[tuple[int, ...]]:
        """Non-root nodes ordered by depth (ties broken by preorder position)."""
        order = {node: i for i, node in enumerate(self.preorder())}
        nodes = [n for n in order if n != self.root]
        nodes.sort(key=lambda n: (self.depth[n], order[n]))
        return nodes

    def to_dot(self) -> str:
        lines = ["digraph cycletree {", "  rankdir=TB;"]
        for node in self.preorder():
            lines.append(
                f'  "{_render(node)}" [label="{_render(node)}\\nc={self.change_index[node]}"];'
            )
        for node in self.preorder():
            pair = self.pairs[node]
            if pair is None:
                continue
            lines.append(
                f'  "{_render(self.parent[node])}" -> "{_render(node)}"'
                f' [label="({_render(pair.sigma)},{_render(pair.sigma_hat)})"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        nodes = []
        for node in self.preorder():
            pair = self.pairs[node]
            nodes.append(
                {
                    "label": list(node),
                    "change_index": self.change_index[node],
                    "depth": self.depth[node],
                    "parent": None if self.parent[node] is None else list(self.parent[node]),
                    "pair": None
                    if pair is None
                    else {"sigma": list(pair.sigma), "sigma_hat": list(pair.sigma_hat)},
                }
            )
        return {
            "kind": self.kind.value,
            "t": self.params.t,
            "n": self.params.n,
            "w": self.params.w_eff,
            "node_count": len(self),
            "root": list(self.root),
            "nodes": nodes,
        }


def build_tree(
    kind: FeedbackKind, params: ParamSet, max_nodes: int = DEFAULT_NODE_CAP
) -> CycleTree:
    """Materialize the full parent-rule tree for one register.

    This enumerates every necklace label, so it is meant for desk-scale
    instances; node counts above ``max_nodes`` (default 10^6) are refused, as
    are label scans that would provably exceed it.
    """
    t, n, w = params.t, params.n, params.w_eff
    if kind is FeedbackKind.MSR:
        if w >= t:
            raise ValueError(
                f"missing-symbol register needs w < t, got w={w}, t={t}"
            )
        label_len = n + 1
        root = (0,) * n + (w,)
    else:
        label_len = n
        root = (0,) * n
    if t**label_len > max_nodes * max(label_len, 1):
        raise ValueError(
            f"scanning {t}^{label_len} labels would exceed the {max_nodes}-node cap"
        )

    labels = []
    for word in words_iter(t, label_len, None):
        if kind is FeedbackKind.MSR:
            if sum(word) != w:
                continue
        elif sum(word) > w:
            continue
        if necklace_info(word).is_necklace:
            labels.append(word)
    if len(labels) > max_nodes:
        raise ValueError(f"tree has {len(labels)} nodes, above the cap {max_nodes}")

    node_set = set(labels)
    parent: dict = {root: None}
    pairs: dict = {root: None}
    kids: dict = {label: [] for label in labels}
    for label in labels:
        if label == root:
            continue
        if kind is FeedbackKind.MSR:
            par, pair = _msr_parent(label), _msr_pair(label)
        else:
            par, pair = _pcr_parent(label), _pcr_pair(label)
        if par not in node_set:
            raise RuntimeError(f"parent {_render(par)} of {_render(label)} left the node set")
        parent[label] = par
        pairs[label] = pair
        kids[par].append(label)

    change_index = {label: _change_index(label) for label in labels}
    children = {
        label: tuple(sorted(kids[label], key=lambda c: change_index[c])) for label in labels
    }
    depth: dict = {root: 0}
    stack = [root]
    while stack:
        node = stack.pop()
        for child in children[node]:
            depth[child] = depth[node] + 1
            stack.append(child)
    if len(depth) != len(labels):
        raise RuntimeError("parent rule produced a disconnected structure")
    return CycleTree(
        kind=kind,
        params=params,
        root=root,
        parent=parent,
        children=children,
        change_index=change_index,
        pairs=pairs,
        depth=depth,
    )


def check_chain_property(tree: CycleTree) -> bool:
    """No two edges into the same node may use pair windows with the same tail.

    Equal tails at one node would make the successor swaps interfere, so this
    is the structural condition behind the O(n)-per-symbol successor rules.
    """
    for node in tree.parent:
        tails = [tree.pairs[c].sigma[1:] for c in tree.children[node]]
        if len(set(tails)) != len(tails):
            return False
    return True


def check_periodic_leaves(tree: CycleTree) -> bool:
    """Every periodic non-root necklace in a PCR tree must be a leaf."""
    if tree.kind is not FeedbackKind.PCR:
        raise ValueError("the periodic-leaf claim is specific to PCR trees")
    for node in tree.parent:
        if node == tree.root:
            continue
        info = necklace_info(node)
        if info.aperiodic_prefix_len != len(node) and tree.children[node]:
            return False
    return True


def _feedback_map(tree: CycleTree) -> dict[tuple[int, ...], int]:
    t, n, w = tree.params.t, tree.params.n, tree.params.w_eff
    if tree.kind is FeedbackKind.MSR:
        return {win: w - sum(win) for win in words_iter(t, n, w)}
    return {win: win[0] for win in words_iter(t, n, w)}


def generic_successor(tree: CycleTree, window: "Word | Sequence[int]") -> int:
    """Successor of a window in the universal cycle defined by the tree.

    Starts from the register's own map (rotate for PCR, emit the missing symbol
    for MSR) and applies every edge's conjugate-pair swap in root-down order.
    The map is materialized once per tree and cached, so this is a reference
    implementation for small instances, not a streaming generator.
    """
    if tree._successor_map is None:
        emit = _feedback_map(tree)
        for child in tree.edges_root_down():
            pair = tree.pairs[child]
            emit[pair.sigma], emit[pair.sigma_hat] = emit[pair.sigma_hat], emit[pair.sigma]
        tree._successor_map = emit
    syms = _symbols(window)
    try:
        return tree._successor_map[syms]
    except KeyError:
        raise ValueError(
            f"window {_render(syms)} is outside the universe of {tree.params}"
        ) from None
