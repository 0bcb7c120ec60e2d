"""Locating patterns with any order-preserving permutation.

The primary occurrence (the one whose start has the smallest rank) is found
by extending the pattern one symbol at a time against the sampled prefixes.
Every other occurrence is copied from an earlier-ranked one through a
phrase of the LPF cover, found by point-enclosure queries on rectangles
built from the phrase sources.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .core import PermutationKind, Text, TextArrays
from .lpf import build_lpf, build_pda, irreducible_positions, LpfArray, _sa_neighbourhood
from .oracle import TextOracle, colex_range
from .rmq import SparseTable


def find_primary(oracle: TextOracle, samples: Sequence[int], pattern: Sequence[int],
                 pick: Callable[[int, int], int], i: int, j: int = 1) -> int | None:
    """Extend a match of pattern[:j-1] ending at i-1 to the whole pattern.

    On a mismatch the match is moved to the sampled prefix chosen by
    ``pick(b, e)`` among those ending with the matched context followed by
    the wanted symbol. Returns the start of the final match or None.
    """
    s = oracle.symbols
    n = oracle.n
    m = len(pattern)
    while j <= m:
        c = pattern[j - 1]
        if i > n or s[i - 1] != c:
            rng = colex_range(oracle, samples, i - 1, j - 1, c)
            if rng is None:
                return None
            i = samples[pick(*rng) - 1]
        i += 1
        j += 1
    start = i - m
    return start if oracle.matches(start, pattern) else None


class Phrase(NamedTuple):
    start: int
    length: int
    source: int
    reducible: int


class Rectangle(NamedTuple):
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int
    label: int


def rectangle_for(phrase: Phrase) -> Rectangle:
    s = phrase.source
    return Rectangle(s, s + phrase.reducible - 1, s, s + phrase.length - 1, phrase.start)


@dataclass(frozen=True)
class PhraseCover:
    type1: list[int]
    type2: list[Phrase]

    def rectangles(self) -> list[Rectangle]:
        return [rectangle_for(p) for p in self.type2]


def build_cover(text: Text | Sequence[int], kind: PermutationKind,
                arrays: TextArrays | None = None, lpf: LpfArray | None = None) -> PhraseCover:
    arrays = arrays if arrays is not None else TextArrays(text)
    if lpf is None:
        lpf = build_lpf(text, kind, arrays)
    v = lpf.values
    n = arrays.n
    ranks = arrays.ranks(kind)
    sa = arrays.sa.inverse
    type1 = [i for i in range(1, n + 1) if v[i - 1] == 0]
    type2 = []
    for i in irreducible_positions(lpf):
        length = v[i - 1]
        if length == 0:
            continue
        lo, hi = _sa_neighbourhood(arrays, i, length)
        rank = ranks[i - 1]
        source = min(sa[k] for k in range(lo, hi + 1) if ranks[sa[k] - 1] < rank)
        ell = 1
        while ell < length and v[i + ell - 1] == v[i + ell - 2] - 1:
            ell += 1
        type2.append(Phrase(i, length, source, ell))
    return PhraseCover(type1, type2)


class _Node:
    __slots__ = ("center", "by_lo", "by_hi", "left", "right")


class PointEnclosure:
    """Centered interval tree over the x-sides of the rectangles.

    Each node keeps the rectangles whose x-interval contains its center,
    sorted by left end and by right end; a query walks one root-to-leaf
    path and filters the scanned candidates on y.
    """

    def __init__(self, rectangles: Sequence[Rectangle]):
        self.rectangles = list(rectangles)
        self._root = self._build(self.rectangles)

    def _build(self, rects: list[Rectangle]) -> _Node | None:
        if not rects:
            return None
        ends = sorted(x for r in rects for x in (r.x_lo, r.x_hi))
        center = ends[len(ends) // 2]
        here, left, right = [], [], []
        for r in rects:
            if r.x_hi < center:
                left.append(r)
            elif r.x_lo > center:
                right.append(r)
            else:
                here.append(r)
        node = _Node()
        node.center = center
        node.by_lo = sorted(here, key=lambda r: r.x_lo)
        node.by_hi = sorted(here, key=lambda r: -r.x_hi)
        node.left = self._build(left)
        node.right = self._build(right)
        return node

    def __len__(self) -> int:
        return len(self.rectangles)

    def stab(self, x: int, y: int) -> list[Rectangle]:
        out = []
        node = self._root
        while node is not None:
            if x < node.center:
                for r in node.by_lo:
                    if r.x_lo > x:
                        break
                    if r.y_lo <= y <= r.y_hi:
                        out.append(r)
                node = node.left
            elif x > node.center:
                for r in node.by_hi:
                    if r.x_hi < x:
                        break
                    if r.y_lo <= y <= r.y_hi:
                        out.append(r)
                node = node.right
            else:
                out.extend(r for r in node.by_lo if r.y_lo <= y <= r.y_hi)
                break
        return out


class GeneralLocator:
    def __init__(self, text: Text, kind: PermutationKind,
                 arrays: TextArrays | None = None, seed: int = 0):
        arrays = arrays if arrays is not None else TextArrays(text)
        self.kind = kind
        self.n = arrays.n
        self.oracle = TextOracle(text, seed)
        lpf = build_lpf(text, kind, arrays)
        self.pda = build_pda(text, kind, arrays, lpf).positions
        ranks = arrays.ranks(kind)
        self.first = ranks.index(1) + 1
        self._rmq = SparseTable([ranks[p - 1] for p in self.pda])
        self.cover = build_cover(text, kind, arrays, lpf)
        self.enclosure = PointEnclosure(self.cover.rectangles())

    def sufsearch(self, i: int, j: int, c: int) -> tuple[int, int] | None:
        return colex_range(self.oracle, self.pda, j, j - i + 1, c)

    def stab(self, x: int, y: int) -> list[Rectangle]:
        return self.enclosure.stab(x, y)

    def locate_primary(self, pattern: Sequence[int]) -> int | None:
        p = tuple(pattern)
        if not p:
            raise ValueError("empty pattern")
        return find_primary(self.oracle, self.pda, p, self._rmq.query, self.first)

    def locate_all(self, pattern: Sequence[int]) -> list[int]:
        p = tuple(pattern)
        start = self.locate_primary(p)
        if start is None:
            return []
        m = len(p)
        out = []
        stack = [start]
        while stack:
            x = stack.pop()
            out.append(x)
            for r in self.enclosure.stab(x, x + m - 1):
                stack.append(r.label + x - r.x_lo)
        return out
