"""Sparse-table range minimum and maximum queries."""
from __future__ import annotations

from typing import Sequence

import numpy as np

# below this many table cells the levels are kept as Python lists,
# which are faster to index than numpy arrays one element at a time
_LIST_CELLS = 1 << 21


class SparseTable:
    """Constant-time argmin or argmax over a fixed key array.

    Indices are 1-based to match the rest of the package: ``query(b, e)``
    returns the position in [b, e] holding the smallest (or largest) key,
    ties going to the leftmost.
    """

    def __init__(self, keys: Sequence[int], maximum: bool = False):
        self.maximum = maximum
        self.size = len(keys)
        arr = np.asarray(keys, dtype=np.int64)
        cmp_keys = -arr if maximum else arr
        levels = [np.arange(self.size, dtype=np.int64)]
        width = 1
        while 2 * width <= self.size:
            prev = levels[-1]
            left, right = prev[: len(prev) - width], prev[width:]
            take_right = cmp_keys[right] < cmp_keys[left]
            levels.append(np.where(take_right, right, left))
            width *= 2
        small = self.size * len(levels) <= _LIST_CELLS
        self._keys = cmp_keys.tolist() if small else cmp_keys
        self._levels = [lv.tolist() for lv in levels] if small else levels

    def query(self, b: int, e: int) -> int:
        if not 1 <= b <= e <= self.size:
            raise IndexError(f"range [{b}, {e}] outside [1, {self.size}]")
        lo, hi = b - 1, e - 1
        k = (hi - lo + 1).bit_length() - 1
        level = self._levels[k]
        x, y = level[lo], level[hi - (1 << k) + 1]
        keys = self._keys
        return int(y if keys[y] < keys[x] else x) + 1
