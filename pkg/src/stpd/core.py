"""Suffix and prefix sorting, BWT variants, run counting and the six
order-preserving permutation kinds.

Positions in the public API are 1-based. Arrays are returned as plain
Python lists whose entries are 1-based positions or ranks, so ``sa[0]`` is
the first suffix-array entry.
"""
from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np

TERMINATOR = 0


class Text:
    """A string over an integer alphabet ending with a unique minimal symbol.

    ``symbols`` holds the raw values, ``sigma`` is an exclusive upper bound on
    them. The terminator is whatever symbol ends the text, as long as it is
    the strict minimum of the whole sequence.
    """

    __slots__ = ("symbols", "sigma")

    def __init__(self, symbols: Sequence[int], sigma: int | None = None):
        symbols = tuple(int(c) for c in symbols)
        if not symbols:
            raise ValueError("text must be non-empty")
        last = symbols[-1]
        if any(c <= last for c in symbols[:-1]):
            raise ValueError("last symbol must be the unique minimum of the text")
        if min(symbols) < 0:
            raise ValueError("symbols must be non-negative")
        top = max(symbols) + 1
        if sigma is None:
            sigma = top
        elif sigma < top:
            raise ValueError(f"sigma={sigma} but text contains symbol {top - 1}")
        self.symbols = symbols
        self.sigma = sigma

    @classmethod
    def from_bytes(cls, data: bytes, raw_terminator: bool = False) -> "Text":
        """Build a text from file bytes.

        By default byte 0 is forbidden and appended as the terminator. With
        ``raw_terminator`` the data must already end with its unique minimum.
        """
        if not data:
            raise ValueError("empty input")
        if raw_terminator:
            return cls(data)
        if TERMINATOR in data:
            raise ValueError("input contains byte 0; use raw_terminator for pre-terminated data")
        return cls(bytes(data) + bytes([TERMINATOR]))

    @classmethod
    def from_str(cls, s: str, terminator: str = "$") -> "Text":
        """``"AACG$"`` style literal: ``terminator`` maps to 0, other
        characters to their code points. Appends the terminator if missing."""
        if not s.endswith(terminator):
            s += terminator
        return cls([0 if ch == terminator else ord(ch) for ch in s])

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        """1-based access."""
        if not 1 <= i <= len(self.symbols):
            raise IndexError(f"position {i} outside [1, {len(self.symbols)}]")
        return self.symbols[i - 1]

    @property
    def terminator(self) -> int:
        return self.symbols[-1]

    def encode(self, s: str | bytes) -> tuple[int, ...]:
        """Turn a pattern literal into symbols (``$`` stands for 0)."""
        if isinstance(s, (bytes, bytearray)):
            return tuple(s)
        return tuple(0 if ch == "$" else ord(ch) for ch in s)

    def decode(self, seq: Sequence[int]) -> str:
        """Render symbols for display; 0 prints as ``$`` and sigma as ``#``."""
        out = []
        for c in seq:
            if c == 0:
                out.append("$")
            elif c == self.sigma:
                out.append("#")
            else:
                out.append(chr(c))
        return "".join(out)

    def __repr__(self) -> str:
        return f"Text({self.decode(self.symbols)!r})"


class PermutationKind(Enum):
    LEX = "LEX"
    LEX_DUAL = "LEX_DUAL"
    COLEX = "COLEX"
    COLEX_DUAL = "COLEX_DUAL"
    POS = "POS"
    POS_DUAL = "POS_DUAL"

    @property
    def is_dual(self) -> bool:
        return self.value.endswith("_DUAL")

    @property
    def base(self) -> "PermutationKind":
        return PermutationKind(self.value.removesuffix("_DUAL"))

    @property
    def dual(self) -> "PermutationKind":
        if self.is_dual:
            return self.base
        return PermutationKind(self.value + "_DUAL")


class IndexPermutation:
    """A pair of mutually inverse arrays over [1, n].

    ``forward[i-1]`` is the rank of position i (ISA, IPA) and
    ``inverse[k-1]`` the position holding rank k (SA, PA).
    """

    __slots__ = ("forward", "inverse")

    def __init__(self, forward: list[int], inverse: list[int]):
        self.forward = forward
        self.inverse = inverse

    @classmethod
    def from_order(cls, order: list[int]) -> "IndexPermutation":
        forward = [0] * len(order)
        for k, p in enumerate(order, 1):
            forward[p - 1] = k
        return cls(forward, list(order))

    def __len__(self) -> int:
        return len(self.forward)

    def rank(self, i: int) -> int:
        return self.forward[i - 1]

    def at(self, k: int) -> int:
        return self.inverse[k - 1]


def _doubling(seq: Sequence[int], cyclic: bool) -> np.ndarray:
    """0-based start order of all suffixes (or rotations) by prefix doubling."""
    s = np.asarray(seq, dtype=np.int64)
    n = len(s)
    rank = np.unique(s, return_inverse=True)[1].astype(np.int64).reshape(-1) + 1
    order = np.argsort(rank, kind="stable")
    k = 1
    while k < n:
        if cyclic:
            second = np.roll(rank, -k)
        else:
            second = np.zeros(n, dtype=np.int64)
            second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        a, b = rank[order], second[order]
        fresh = np.empty(n, dtype=bool)
        fresh[0] = True
        fresh[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1])
        rank = np.empty(n, dtype=np.int64)
        rank[order] = np.cumsum(fresh)
        if fresh.all():
            break
        k *= 2
    return order


def suffix_order(seq: Sequence[int]) -> list[int]:
    """1-based suffix starts in lexicographic order; a proper prefix sorts first."""
    return (_doubling(seq, cyclic=False) + 1).tolist()


def prefix_order(seq: Sequence[int]) -> list[int]:
    """1-based prefix ends in colexicographic order, via suffixes of the reverse."""
    n = len(seq)
    rev = list(seq)[::-1]
    return [n - p + 1 for p in suffix_order(rev)]


def build_sa(text: Text | Sequence[int]) -> IndexPermutation:
    """forward = ISA, inverse = SA."""
    return IndexPermutation.from_order(suffix_order(_symbols(text)))


def build_pa(text: Text | Sequence[int]) -> IndexPermutation:
    """forward = IPA, inverse = PA."""
    return IndexPermutation.from_order(prefix_order(_symbols(text)))


def _symbols(text) -> Sequence[int]:
    return text.symbols if isinstance(text, Text) else text


def bwt(text: Text | Sequence[int]) -> list[int]:
    """Last column of the sorted rotations; for a Text this is T[SA[i]-1]."""
    s = _symbols(text)
    n = len(s)
    if isinstance(text, Text):
        order = suffix_order(s)
    else:
        order = (_doubling(s, cyclic=True) + 1).tolist()
    return [s[p - 2] if p > 1 else s[n - 1] for p in order]


def cobwt(text: Text | Sequence[int]) -> list[int]:
    """Symbol following each prefix in colex order; for a Text T[PA[i]+1]."""
    s = _symbols(text)
    n = len(s)
    if isinstance(text, Text):
        ends = prefix_order(s)
    else:
        # rotations read backwards are rotations of the reverse
        rev = list(s)[::-1]
        ends = [n - p + 1 for p in (_doubling(rev, cyclic=True) + 1).tolist()]
    return [s[p] if p < n else s[0] for p in ends]


def count_runs(seq: Sequence[int]) -> int:
    if len(seq) == 0:
        raise ValueError("empty sequence")
    runs = 1
    for a, b in zip(seq, seq[1:]):
        if a != b:
            runs += 1
    return runs


class TextArrays:
    """SA/ISA/PA/IPA (and LCP on demand) of a symbol sequence.

    Works on any sequence, terminated or not, so the measure code can run
    on the terminator-free strings used by the repetitiveness experiments.
    """

    def __init__(self, text: Text | Sequence[int]):
        self.symbols = tuple(_symbols(text))
        self.n = len(self.symbols)
        self.sa = build_sa(self.symbols)
        self._pa: IndexPermutation | None = None
        self._lcp: list[int] | None = None

    @property
    def pa(self) -> IndexPermutation:
        if self._pa is None:
            self._pa = build_pa(self.symbols)
        return self._pa

    @property
    def lcp(self) -> list[int]:
        """lcp[k] = lcp of the suffixes at SA ranks k and k+1 (0-based k), lcp[0] = 0."""
        if self._lcp is None:
            self._lcp = kasai_lcp(self.symbols, self.sa)
        return self._lcp

    def ranks(self, kind: PermutationKind) -> list[int]:
        """pi(i) for i = 1..n as a 0-based list."""
        n = self.n
        base = kind.base
        if base is PermutationKind.LEX:
            values = self.sa.forward
        elif base is PermutationKind.COLEX:
            values = self.pa.forward
        else:
            values = list(range(1, n + 1))
        if kind.is_dual:
            return [n - v + 1 for v in values]
        return list(values)


def kasai_lcp(s: Sequence[int], sa: IndexPermutation) -> list[int]:
    n = len(s)
    lcp = [0] * n
    h = 0
    isa, order = sa.forward, sa.inverse
    for i in range(n):
        k = isa[i] - 1
        if k == 0:
            h = 0
            continue
        j = order[k - 1] - 1
        while i + h < n and j + h < n and s[i + h] == s[j + h]:
            h += 1
        lcp[k] = h
        if h:
            h -= 1
    return lcp


def perm_eval(kind: PermutationKind, arrays: TextArrays, i: int) -> int:
    n = arrays.n
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside [1, {n}]")
    base = kind.base
    if base is PermutationKind.LEX:
        v = arrays.sa.forward[i - 1]
    elif base is PermutationKind.COLEX:
        v = arrays.pa.forward[i - 1]
    else:
        v = i
    return n - v + 1 if kind.is_dual else v


def check_order_preserving(perm: Sequence[int], text: Text | Sequence[int]) -> bool:
    """Quadratic check of the order-preserving clause; perm[i-1] = pi(i)."""
    s = _symbols(text)
    n = len(s)
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise ValueError("not a permutation of [1, n]")
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(n - 1):
        groups.setdefault((s[i], s[i + 1]), []).append(i)
    for members in groups.values():
        for i in members:
            for j in members:
                if perm[i] < perm[j] and not perm[i + 1] < perm[j + 1]:
                    return False
    return True
