"""Slow reference implementations used to check the real structures.

Everything here follows the textbook definitions directly and makes no use
of the suffix arrays, LPF construction or search code of the package.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import PermutationKind, Text
from .lpf import LpfArray


def _seq(text) -> tuple[int, ...]:
    return tuple(text.symbols if isinstance(text, Text) else text)


def naive_locate_all(text, pattern: Sequence[int]) -> list[int]:
    s = _seq(text)
    p = tuple(pattern)
    m = len(p)
    if m == 0:
        raise ValueError("empty pattern")
    return [i + 1 for i in range(len(s) - m + 1) if s[i : i + m] == p]


def brute_ranks(text, kind: PermutationKind) -> list[int]:
    """pi(i) for i = 1..n from naive sorting of suffixes or reversed prefixes."""
    s = _seq(text)
    n = len(s)
    base = kind.base
    if base is PermutationKind.LEX:
        order = sorted(range(n), key=lambda i: s[i:])
    elif base is PermutationKind.COLEX:
        order = sorted(range(n), key=lambda i: s[: i + 1][::-1])
    else:
        order = list(range(n))
    ranks = [0] * n
    for r, i in enumerate(order, 1):
        ranks[i] = r
    if kind.is_dual:
        ranks = [n - r + 1 for r in ranks]
    return ranks


def _lcp(a: Sequence[int], b: Sequence[int]) -> int:
    h = 0
    while h < len(a) and h < len(b) and a[h] == b[h]:
        h += 1
    return h


def brute_lpf(text, kind: PermutationKind) -> LpfArray:
    s = _seq(text)
    n = len(s)
    ranks = brute_ranks(s, kind)
    values = []
    for i in range(n):
        best = 0
        for j in range(n):
            if ranks[j] < ranks[i]:
                best = max(best, _lcp(s[i:], s[j:]))
        values.append(best)
    return LpfArray(values, kind)


def brute_pda(text, kind: PermutationKind) -> list[int]:
    """Distinct i + LPF[i] over irreducible i, sorted by reversed prefix."""
    s = _seq(text)
    v = brute_lpf(s, kind).values
    ends = {i + 1 + v[i] for i in range(len(v)) if i == 0 or v[i] != v[i - 1] - 1}
    return sorted(ends, key=lambda j: s[:j][::-1])


def substring_occurrences(text) -> dict[tuple[int, ...], list[int]]:
    """Every distinct non-empty substring with its sorted start positions."""
    s = _seq(text)
    n = len(s)
    occ: dict[tuple[int, ...], list[int]] = {}
    for i in range(n):
        for j in range(i + 1, n + 1):
            occ.setdefault(s[i:j], []).append(i + 1)
    return occ


def brute_right_maximal(text) -> set[tuple[int, ...]]:
    """Substrings (including the empty one) followed by at least two distinct symbols."""
    s = _seq(text)
    n = len(s)
    follow: dict[tuple[int, ...], set[int]] = {(): set(s)}
    for i in range(n):
        for j in range(i + 1, n):
            follow.setdefault(s[i:j], set()).add(s[j])
    return {alpha for alpha, nxt in follow.items() if len(nxt) >= 2}


@dataclass
class BruteNode:
    alpha: tuple[int, ...]
    leaves: list[int]  # suffix starts below this node, in lex order of the suffixes
    children: dict[int, "BruteNode"] = field(default_factory=dict)
    parent: "BruteNode | None" = None

    @property
    def depth(self) -> int:
        return len(self.alpha)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def i_min(self) -> int:
        return self.leaves[0]

    @property
    def i_max(self) -> int:
        return self.leaves[-1]


class BruteSuffixTree:
    """Suffix tree of a terminated text built by inserting every suffix."""

    def __init__(self, text):
        s = _seq(text)
        self.symbols = s
        n = len(s)
        self.lex_order = sorted(range(1, n + 1), key=lambda i: s[i - 1:])
        right_maximal = brute_right_maximal(s)
        suffixes = {s[i - 1:]: i for i in range(1, n + 1)}
        self.root = BruteNode((), list(self.lex_order))
        self.by_alpha: dict[tuple[int, ...], BruteNode] = {(): self.root}
        for i in self.lex_order:
            node = self.root
            depth = 0
            suffix = s[i - 1:]
            while depth < len(suffix):
                a = suffix[depth]
                child = node.children.get(a)
                if child is None:
                    # next explicit node below: shortest right-maximal extension, else the leaf
                    end = depth + 1
                    while end < len(suffix) and suffix[:end] not in right_maximal:
                        end += 1
                    alpha = suffix[:end]
                    child = BruteNode(alpha, [], parent=node)
                    node.children[a] = child
                    self.by_alpha[alpha] = child
                node = child
                node.leaves.append(i)
                depth = node.depth
            assert suffixes[node.alpha] == i
        for node in self.by_alpha.values():
            node.children = dict(sorted(node.children.items()))

    @property
    def nodes(self) -> list[BruteNode]:
        return list(self.by_alpha.values())

    def node(self, alpha: Sequence[int]) -> BruteNode | None:
        return self.by_alpha.get(tuple(alpha))

    def leaf(self, i: int) -> BruteNode:
        return self.by_alpha[self.symbols[i - 1:]]

    def next_leaf(self, i: int) -> int | None:
        k = self.lex_order.index(i)
        return self.lex_order[k + 1] if k + 1 < len(self.lex_order) else None

    def locate(self, pattern: Sequence[int]) -> list[int]:
        """Occurrences by descending to the locus and listing its leaves."""
        p = tuple(pattern)
        node = self.root
        while node.depth < len(p):
            child = node.children.get(p[node.depth])
            if child is None:
                return []
            upto = min(len(p), child.depth)
            if child.alpha[:upto] != p[:upto]:
                return []
            node = child
        return sorted(node.leaves)
