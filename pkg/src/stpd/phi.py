"""Run-length sampled successor function over the suffix or prefix array.

phi_next(i) is the array entry following i: SA[ISA[i] + 1] for the SA
variant and PA[IPA[i] + 1] for the PA variant.

Inside a BWT run consecutive suffixes stay consecutive after prepending
the shared symbol, so for the SA variant phi(x) = phi(x + 1) - 1 unless
ISA[x + 1] closes a run. Only the x sitting right before a run end need a
stored value, and everything else is offset arithmetic from the nearest
sample to the right. The PA variant is the mirror image: phi(x) =
phi(x - 1) + 1 unless IPA[x - 1] closes a coBWT run, samples are taken
after run ends and lookups go to the nearest sample on the left. Text
positions are treated cyclically, which only matters for the PA variant
where position 1 follows position n.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple

from .core import IndexPermutation, Text, TextArrays, bwt as _bwt, cobwt as _cobwt

SA = "SA"
PA = "PA"


class PhiStep(NamedTuple):
    position: int
    wrapped: bool  # True when i held the last rank and position is A[1]


class PhiStructure:
    def __init__(self, variant: str, n: int, keys: list[int], values: list[int], last: int):
        if variant not in (SA, PA):
            raise ValueError(f"unknown variant {variant!r}")
        self.variant = variant
        self.n = n
        self.keys = keys
        self.values = values
        self.last = last  # the position holding rank n

    def __len__(self) -> int:
        return len(self.keys)

    def phi_next(self, i: int) -> PhiStep:
        n = self.n
        if not 1 <= i <= n:
            raise IndexError(f"position {i} outside [1, {n}]")
        keys = self.keys
        if self.variant == SA:
            k = bisect_left(keys, i)
            if k == len(keys):
                k, shift = 0, keys[0] + n - i
            else:
                shift = keys[k] - i
            value = (self.values[k] - shift - 1) % n + 1
        else:
            k = bisect_right(keys, i) - 1
            if k < 0:
                k, shift = len(keys) - 1, i + n - keys[-1]
            else:
                shift = i - keys[k]
            value = (self.values[k] + shift - 1) % n + 1
        return PhiStep(value, i == self.last)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PhiStructure) and self.variant == other.variant
                and self.n == other.n and self.keys == other.keys
                and self.values == other.values and self.last == other.last)


def build_phi(text: Text, variant: str, arrays: TextArrays | None = None) -> PhiStructure:
    arrays = arrays if arrays is not None else TextArrays(text)
    n = arrays.n
    if variant == SA:
        perm: IndexPermutation = arrays.sa
        column = _bwt(text)
    elif variant == PA:
        perm = arrays.pa
        column = _cobwt(text)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    order, inv = perm.inverse, perm.forward
    samples = set()
    for k in range(n):
        if k == n - 1 or column[k] != column[k + 1]:
            p = order[k]
            if variant == SA:
                samples.add(n if p == 1 else p - 1)
            else:
                samples.add(1 if p == n else p + 1)
    keys = sorted(samples)
    values = []
    for x in keys:
        rank = inv[x - 1]
        values.append(order[rank] if rank < n else order[0])
    return PhiStructure(variant, n, keys, values, order[n - 1])
