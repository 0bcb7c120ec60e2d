"""Generalized longest-previous-factor arrays, irreducible positions, path
decomposition arrays and the quadruple compressor built on them."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .core import PermutationKind, Text, TextArrays


class CorruptStructureError(Exception):
    """Raised when a serialized or hand-built structure is inconsistent."""


@dataclass(frozen=True)
class LpfArray:
    values: list[int]
    kind: PermutationKind

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        """1-based."""
        if not 1 <= i <= len(self.values):
            raise IndexError(i)
        return self.values[i - 1]


@dataclass(frozen=True)
class PdaArray:
    positions: list[int]
    kind: PermutationKind

    def __len__(self) -> int:
        return len(self.positions)


def _arrays(text, arrays: TextArrays | None) -> TextArrays:
    if arrays is not None:
        return arrays
    return TextArrays(text)


def build_lpf(text: Text | Sequence[int], kind: PermutationKind,
              arrays: TextArrays | None = None) -> LpfArray:
    """LPF_pi[i] = max over pi(j) < pi(i) of rlce(j, i), 0 for pi(i) = 1.

    Suffixes are kept in a doubly linked list in SA order. Deleting them in
    decreasing pi order leaves, at the moment i is visited, exactly the j
    with pi(j) < pi(i); the best match is a list neighbour, and the lcp of
    two new neighbours is the min over the removed element.
    """
    arrays = _arrays(text, arrays)
    n = arrays.n
    ranks = arrays.ranks(kind)
    isa = arrays.sa.forward
    lcp = arrays.lcp
    by_rank = [0] * n
    for i, r in enumerate(ranks):
        by_rank[r - 1] = i
    prev = list(range(-1, n - 1))
    nxt = list(range(1, n + 1))
    # link_lcp[k]: lcp between list element k and its current successor
    link_lcp = lcp[1:] + [0]
    values = [0] * n
    for i in reversed(by_rank):
        k = isa[i] - 1
        p, q = prev[k], nxt[k]
        left = link_lcp[p] if p >= 0 else 0
        right = link_lcp[k] if q < n else 0
        values[i] = left if left > right else right
        if p >= 0:
            nxt[p] = q
            link_lcp[p] = min(left, right) if q < n else 0
        if q < n:
            prev[q] = p
    return LpfArray(values, kind)


def irreducible_positions(lpf: LpfArray | Sequence[int]) -> list[int]:
    values = lpf.values if isinstance(lpf, LpfArray) else lpf
    out = []
    for i, v in enumerate(values):
        if i == 0 or v != values[i - 1] - 1:
            out.append(i + 1)
    return out


def colex_key(arrays: TextArrays):
    """Sort key placing prefix T[1, j] in colex order (j = 0 first, n + 1 last)."""
    ipa = arrays.pa.forward
    n = arrays.n

    def key(j: int) -> int:
        if j == 0:
            return 0
        if j > n:
            return n + 1
        return ipa[j - 1]
    return key


def build_pda(text: Text | Sequence[int], kind: PermutationKind,
              arrays: TextArrays | None = None, lpf: LpfArray | None = None) -> PdaArray:
    arrays = _arrays(text, arrays)
    if lpf is None:
        lpf = build_lpf(text, kind, arrays)
    ends = {i + lpf.values[i - 1] for i in irreducible_positions(lpf)}
    return PdaArray(sorted(ends, key=colex_key(arrays)), kind)


def _sa_neighbourhood(arrays: TextArrays, i: int, length: int) -> tuple[int, int]:
    """0-based SA rank interval of suffixes sharing ``length`` symbols with suffix i."""
    lcp = arrays.lcp
    k = arrays.sa.forward[i - 1] - 1
    lo = k
    while lo > 0 and lcp[lo] >= length:
        lo -= 1
    hi = k
    while hi + 1 < arrays.n and lcp[hi + 1] >= length:
        hi += 1
    return lo, hi


def min_rank_source(arrays: TextArrays, ranks: list[int], i: int, length: int) -> int:
    """The position j minimizing pi(j) among those with rlce(j, i) >= length."""
    lo, hi = _sa_neighbourhood(arrays, i, length)
    sa = arrays.sa.inverse
    return min((sa[k] for k in range(lo, hi + 1)), key=lambda j: ranks[j - 1])


class Quadruple(NamedTuple):
    start: int
    length: int
    source: int
    symbol: int | None  # None when start + length runs past the end


@dataclass(frozen=True)
class CompressedText:
    quadruples: list[Quadruple]
    n: int
    sigma: int

    @cached_property
    def _index(self) -> tuple[list[int], list[Quadruple], dict[int, int | None]]:
        quads = sorted(self.quadruples)
        return [q.start for q in quads], quads, {q.start + q.length: q.symbol for q in quads}


def compress(text: Text | Sequence[int], kind: PermutationKind,
             arrays: TextArrays | None = None) -> CompressedText:
    arrays = _arrays(text, arrays)
    s = arrays.symbols
    n = arrays.n
    lpf = build_lpf(text, kind, arrays)
    ranks = arrays.ranks(kind)
    quads = []
    for i in irreducible_positions(lpf):
        length = lpf.values[i - 1]
        src = min_rank_source(arrays, ranks, i, length) if length else 1
        end = i + length
        quads.append(Quadruple(i, length, src, s[end - 1] if end <= n else None))
    sigma = text.sigma if isinstance(text, Text) else (max(s) + 1 if s else 0)
    return CompressedText(quads, n, sigma)


def extract_char(ct: CompressedText, j: int) -> int:
    """Recover T[j] by following sources until a stored symbol is reached."""
    if not 1 <= j <= ct.n:
        raise IndexError(f"position {j} outside [1, {ct.n}]")
    starts, quads, stored = ct._index
    for _ in range(ct.n + 1):
        if j in stored:
            sym = stored[j]
            if sym is None:
                raise CorruptStructureError(f"no symbol stored for position {j}")
            return sym
        k = bisect_right(starts, j) - 1
        if k < 0:
            raise CorruptStructureError(f"position {j} is not covered by any phrase")
        q = quads[k]
        if not q.start <= j < q.start + q.length:
            raise CorruptStructureError(f"position {j} is not covered by any phrase")
        j = q.source + (j - q.start)
    raise CorruptStructureError("source chain longer than the text")
