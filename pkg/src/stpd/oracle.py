"""Random access, longest common extensions and fingerprints over a text.

This is the plain-text oracle: everything is answered by scanning symbols.
"""
from __future__ import annotations

import random
from typing import Sequence

from .core import Text

MERSENNE_61 = (1 << 61) - 1


class TextOracle:
    """Oracle over ``text`` (a Text or any symbol sequence), 1-based."""

    def __init__(self, text: Text | Sequence[int], seed: int = 0):
        self.symbols = tuple(text.symbols if isinstance(text, Text) else text)
        self.n = len(self.symbols)
        self.seed = seed
        self.base = random.Random(seed).randrange(256, MERSENNE_61 - 1)
        self._prefix: list[int] | None = None
        self._powers: list[int] | None = None

    def _check(self, i: int, lo: int = 1) -> None:
        if not lo <= i <= self.n:
            raise IndexError(f"position {i} outside [{lo}, {self.n}]")

    def access(self, i: int) -> int:
        self._check(i)
        return self.symbols[i - 1]

    def extract(self, i: int, j: int) -> tuple[int, ...]:
        """T[i, j]; an empty tuple when j = i - 1."""
        if j == i - 1 and 1 <= i <= self.n + 1:
            return ()
        self._check(i)
        self._check(j)
        if i > j:
            raise IndexError(f"empty or reversed range [{i}, {j}]")
        return self.symbols[i - 1 : j]

    def matches(self, i: int, pattern: Sequence[int]) -> bool:
        """True iff T[i, i+m-1] equals ``pattern`` (False if it runs off the end)."""
        m = len(pattern)
        if i < 1 or i + m - 1 > self.n:
            return False
        return self.symbols[i - 1 : i - 1 + m] == tuple(pattern)

    def rlce(self, i: int, j: int) -> int:
        """Longest common prefix of the suffixes at i and j.

        Position n + 1 (the empty suffix) is accepted and yields 0.
        """
        if not (1 <= i <= self.n + 1 and 1 <= j <= self.n + 1):
            raise IndexError(f"positions {i}, {j} outside [1, {self.n + 1}]")
        s = self.symbols
        n = self.n
        a, b = i - 1, j - 1
        if a == b:
            return n - a
        h = 0
        while a + h < n and b + h < n and s[a + h] == s[b + h]:
            h += 1
        return h

    def llce(self, i: int, j: int) -> int:
        """Longest common suffix of the prefixes ending at i and j.

        Position 0 (the empty prefix) is accepted and yields 0.
        """
        if not (0 <= i <= self.n and 0 <= j <= self.n):
            raise IndexError(f"positions {i}, {j} outside [0, {self.n}]")
        if i == j:
            return i
        s = self.symbols
        a, b = i - 1, j - 1
        h = 0
        while a - h >= 0 and b - h >= 0 and s[a - h] == s[b - h]:
            h += 1
        return h

    def _tables(self) -> tuple[list[int], list[int]]:
        if self._prefix is None:
            p, base = MERSENNE_61, self.base
            prefix = [0] * (self.n + 1)
            powers = [1] * (self.n + 1)
            h = 0
            for k, c in enumerate(self.symbols, 1):
                # shift by one so that symbol 0 still contributes
                h = (h * base + c + 1) % p
                prefix[k] = h
                powers[k] = powers[k - 1] * base % p
            self._prefix, self._powers = prefix, powers
        return self._prefix, self._powers

    def fingerprint(self, i: int, j: int) -> int:
        """Karp-Rabin hash of T[i, j] modulo 2^61 - 1."""
        self._check(i)
        self._check(j)
        if i > j:
            raise IndexError(f"empty or reversed range [{i}, {j}]")
        prefix, powers = self._tables()
        return (prefix[j] - prefix[i - 1] * powers[j - i + 1]) % MERSENNE_61


def colex_compare(oracle: TextOracle, x: int, end: int, length: int) -> int:
    """Compare the prefix T[1, x] with the substring T[end-length+1, end].

    Returns 0 when the substring is a suffix of T[1, x], -1 when T[1, x] is
    colex-smaller and 1 when it is larger. x = 0 is the empty prefix.
    """
    c = oracle.llce(x, end) if length else 0
    if c >= length:
        return 0
    if c == x:
        return -1
    a = oracle.symbols[x - c - 1]
    b = oracle.symbols[end - c - 1]
    return -1 if a < b else 1


def colex_range(oracle: TextOracle, samples: Sequence[int], end: int, length: int,
                last: int | None = None) -> tuple[int, int] | None:
    """1-based range [b, e] of colex-sorted ``samples`` whose prefix ends with
    T[end-length+1, end] followed by ``last`` (omitted when None).

    Two binary searches, each probe costing one llce and one access.
    """
    def cmp(x: int) -> int:
        if last is not None:
            if x == 0:
                return -1
            c = oracle.symbols[x - 1]
            if c != last:
                return -1 if c < last else 1
            return colex_compare(oracle, x - 1, end, length)
        return colex_compare(oracle, x, end, length)

    lo, hi = 0, len(samples)
    while lo < hi:
        mid = (lo + hi) // 2
        if cmp(samples[mid]) < 0:
            lo = mid + 1
        else:
            hi = mid
    first = lo
    hi = len(samples)
    while lo < hi:
        mid = (lo + hi) // 2
        if cmp(samples[mid]) <= 0:
            lo = mid + 1
        else:
            hi = mid
    if first == lo:
        return None
    return first + 1, lo
