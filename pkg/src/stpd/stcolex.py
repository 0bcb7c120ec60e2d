"""Pattern matching over the colexicographic path decomposition.

With colex ranks the sampled prefixes are already sorted by rank, so the
primary occurrence needs no range-minimum structure. All occurrences are
then read off the prefix array with the PA-variant successor function,
Q = ceil(m / B) entries at a time.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import PermutationKind, Text, TextArrays, prefix_order
from .general import find_primary
from .lpf import build_pda
from .oracle import TextOracle, colex_range
from .phi import PA, PhiStructure, build_phi

DEFAULT_BLOCK_WORDS = 64
MAX_KMER = 12
_CODE_BITS = 62


def _pick_first(b: int, e: int) -> int:
    return b


class KmerTable:
    """End position of the colex-smallest occurrence of every k-mer, k <= kmax."""

    def __init__(self, text: Text, kmax: int, ipa: Sequence[int]):
        s = np.asarray(text.symbols, dtype=np.int64)
        values, dense = np.unique(s, return_inverse=True)
        self.codes = {int(v): k + 1 for k, v in enumerate(values)}
        self.base = len(values) + 1
        self.kmax = kmax
        self.tables: list[dict[int, int]] = [{}]
        n = len(s)
        dense = dense.reshape(-1).astype(np.int64) + 1
        ipa = np.asarray(ipa, dtype=np.int64)
        code = np.zeros(n, dtype=np.int64)
        for k in range(1, kmax + 1):
            # code[p] now encodes the window of length k ending at p (0-based)
            shifted = np.zeros(n, dtype=np.int64)
            shifted[1:] = code[:-1]
            code = shifted * self.base + dense
            ends = np.arange(k - 1, n)
            order = np.lexsort((ipa[ends], code[ends]))
            sorted_codes = code[ends][order]
            keep = np.ones(len(order), dtype=bool)
            keep[1:] = sorted_codes[1:] != sorted_codes[:-1]
            firsts = ends[order][keep] + 1
            self.tables.append(dict(zip(sorted_codes[keep].tolist(), firsts.tolist())))

    @staticmethod
    def max_k(base: int) -> int:
        k = 0
        while k < MAX_KMER and base ** (k + 1) < (1 << _CODE_BITS):
            k += 1
        return k

    def entries(self) -> int:
        return sum(len(t) for t in self.tables)

    def lookup(self, kmer: Sequence[int]) -> int | None:
        code = 0
        for c in kmer:
            d = self.codes.get(c)
            if d is None:
                return None
            code = code * self.base + d
        return self.tables[len(kmer)].get(code)


def auto_kmax(table: KmerTable, text: Text, pda_size: int, phi_size: int) -> int:
    """Largest k whose table fits in half the words of the rest of the index.

    Each entry costs two words; texts over fewer than four symbols get no table.
    """
    if len(set(text.symbols[:-1])) < 4:
        return 0
    budget = (pda_size + 2 * phi_size) // 2
    used = 0
    best = 0
    for k in range(1, table.kmax + 1):
        used += 2 * len(table.tables[k])
        if used > budget:
            break
        best = k
    return best


class StColexIndex:
    def __init__(self, text: Text, pda: list[int], phi: PhiStructure,
                 block_words: int = DEFAULT_BLOCK_WORDS, kmax: int | None = None,
                 seed: int = 0, ipa: Sequence[int] | None = None):
        if block_words < 1:
            raise ValueError("block_words must be positive")
        self.text = text
        self.n = len(text)
        self.pda = pda
        self.phi = phi
        self.block_words = block_words
        self.oracle = TextOracle(text, seed)
        auto = kmax is None
        limit = KmerTable.max_k(len(set(text.symbols)) + 1)
        kmax = limit if kmax is None else min(kmax, limit)
        self.kmers = None
        if kmax > 0:
            if ipa is None:
                ipa = [0] * self.n
                for r, p in enumerate(prefix_order(text.symbols), 1):
                    ipa[p - 1] = r
            table = KmerTable(text, kmax, ipa)
            if auto:
                kmax = auto_kmax(table, text, len(pda), len(phi))
                table.tables = table.tables[: kmax + 1]
                table.kmax = kmax
            self.kmers = table if kmax > 0 else None
        self.kmax = kmax

    @classmethod
    def build(cls, text: Text, arrays: TextArrays | None = None,
              block_words: int = DEFAULT_BLOCK_WORDS, kmax: int | None = None,
              seed: int = 0) -> "StColexIndex":
        arrays = arrays if arrays is not None else TextArrays(text)
        pda = build_pda(text, PermutationKind.COLEX, arrays).positions
        ipa = arrays.pa.forward
        if any(ipa[a - 1] >= ipa[b - 1] for a, b in zip(pda, pda[1:])):
            raise AssertionError("colex samples are not rank-sorted")
        return cls(text, pda, build_phi(text, PA, arrays), block_words, kmax, seed, ipa)

    def sufsearch(self, i: int, j: int, c: int) -> tuple[int, int] | None:
        """Range of samples whose prefix ends with T[i, j] followed by c."""
        return colex_range(self.oracle, self.pda, j, j - i + 1, c)

    def locate_primary(self, pattern: Sequence[int]) -> int | None:
        p = tuple(pattern)
        m = len(p)
        if m == 0:
            raise ValueError("empty pattern")
        if self.kmers is not None:
            k = min(m, self.kmax)
            end = self.kmers.lookup(p[:k])
            if end is None:
                return None
            if m == k:
                return end - m + 1
            return find_primary(self.oracle, self.pda, p, _pick_first, end + 1, k + 1)
        return find_primary(self.oracle, self.pda, p, _pick_first, self.n)

    def locate_all(self, pattern: Sequence[int], stats: dict | None = None) -> list[int]:
        """All occurrences; ``stats['phi_next']`` accumulates successor calls."""
        p = tuple(pattern)
        start = self.locate_primary(p)
        if start is None:
            return []
        m = len(p)
        q = -(-m // self.block_words)
        matches = self.oracle.matches
        out = [start]
        current = start + m - 1
        calls = 0
        while True:
            block = []
            x = current
            for _ in range(q):
                step = self.phi.phi_next(x)
                calls += 1
                if step.wrapped:
                    break
                x = step.position
                block.append(x)
            if len(block) == q and matches(block[-1] - m + 1, p):
                out.extend(e - m + 1 for e in block)
                current = block[-1]
                continue
            # the entries still inside the pattern's range form a prefix of the block
            lo, hi = 0, len(block)
            while lo < hi:
                mid = (lo + hi) // 2
                if matches(block[mid] - m + 1, p):
                    lo = mid + 1
                else:
                    hi = mid
            out.extend(e - m + 1 for e in block[:lo])
            break
        if stats is not None:
            stats["phi_next"] = stats.get("phi_next", 0) + calls
        return out
