"""Compressed suffix tree over the lexicographic path decompositions.

Explicit nodes are 5-tuples (b, e, i_min, i_max, depth): [b, e] is the
range of sampled prefixes ending with the node string, i_min/i_max are the
starts of the lex-smallest and lex-largest suffixes below it.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import NamedTuple, Sequence

from .core import PermutationKind, Text, TextArrays
from .lpf import CorruptStructureError, build_pda, colex_key
from .oracle import TextOracle, colex_range
from .phi import SA, PhiStructure, build_phi
from .rmq import SparseTable


class NodeRep(NamedTuple):
    b: int
    e: int
    i_min: int
    i_max: int
    depth: int


NULL = NodeRep(0, 0, 0, 0, 0)


def sample_positions(text: Text, arrays: TextArrays) -> list[int]:
    """{p - 1 : p in PDA_LEX or PDA_LEX_DUAL or p = n + 1}, colex-sorted."""
    n = arrays.n
    ends = set(build_pda(text, PermutationKind.LEX, arrays).positions)
    ends.update(build_pda(text, PermutationKind.LEX_DUAL, arrays).positions)
    ends.add(n + 1)
    return sorted((p - 1 for p in ends), key=colex_key(arrays))


class StLexTree:
    def __init__(self, text: Text, stlex: list[int], ranks: list[int],
                 last_suffix: int, phi: PhiStructure, seed: int = 0):
        """Assemble from stored parts.

        ``ranks[k]`` is ISA[stlex[k] + 1] (n + 1 for the sample equal to n),
        ``last_suffix`` is SA[n] and ``phi`` the SA-variant successor map.
        """
        self.text = text
        self.n = n = len(text)
        self.sigma = text.sigma
        self.stlex = stlex
        self.ranks = ranks
        self.last_suffix = last_suffix
        self.phi = phi
        self.oracle = TextOracle(text, seed)
        s = text.symbols
        hash_ = self.sigma
        self.L = [hash_ if j == n else s[j] for j in stlex]
        self.istar = stlex.index(n) + 1
        occ: dict[int, list[int]] = {}
        for k, a in enumerate(self.L, 1):
            occ.setdefault(a, []).append(k)
        self._occ = occ
        self.alphabet = sorted(a for a in occ if a != hash_)
        self._before: dict[int, int] = {}
        fl = [0] * (len(stlex) + 1)
        f_keys = []
        start = 0
        for a in sorted(occ):
            self._before[a] = start
            for t, k in enumerate(occ[a]):
                fl[start + t + 1] = k
                f_keys.append(ranks[k - 1])
            start += len(occ[a])
        self.F = sorted(self.L)
        self._fl = fl
        self._rmq_min = SparseTable(f_keys)
        self._rmq_max = SparseTable(f_keys, maximum=True)

    @classmethod
    def build(cls, text: Text, arrays: TextArrays | None = None, seed: int = 0) -> "StLexTree":
        arrays = arrays if arrays is not None else TextArrays(text)
        n = arrays.n
        stlex = sample_positions(text, arrays)
        isa = arrays.sa.forward
        ranks = [isa[j] if j < n else n + 1 for j in stlex]
        return cls(text, stlex, ranks, arrays.sa.inverse[-1],
                   build_phi(text, SA, arrays), seed)

    def __len__(self) -> int:
        return len(self.stlex)

    # -- rank/select helpers on L ------------------------------------------

    def _count(self, a: int, b: int, e: int) -> int:
        occ = self._occ.get(a)
        if not occ:
            return 0
        return bisect_right(occ, e) - bisect_left(occ, b)

    def _check(self, node: NodeRep) -> None:
        if not 1 <= node.b <= node.e <= len(self.stlex):
            raise ValueError(f"malformed node {node}")

    # -- navigation --------------------------------------------------------

    def root(self) -> NodeRep:
        return NodeRep(1, len(self.stlex), self.n, self.last_suffix, 0)

    def first(self, node: NodeRep) -> int | None:
        self._check(node)
        for a in self.alphabet:
            if self._count(a, node.b, node.e):
                return a
        return None

    def succ(self, node: NodeRep, a: int) -> int | None:
        self._check(node)
        for c in self.alphabet[bisect_right(self.alphabet, a):]:
            if self._count(c, node.b, node.e):
                return c
        return None

    def _last_label(self, node: NodeRep) -> int | None:
        for a in reversed(self.alphabet):
            if self._count(a, node.b, node.e):
                return a
        return None

    def child(self, node: NodeRep, a: int) -> NodeRep:
        self._check(node)
        b, e, i_min, i_max, depth = node
        if a == self.sigma or not self._count(a, b, e):
            return NULL
        occ = self._occ[a]
        k1 = bisect_left(occ, b)
        k2 = bisect_right(occ, e) - 1
        fb = self._before[a] + k1 + 1
        fe = self._before[a] + k2 + 1
        if a == self.first(node):
            new_min = i_min
        else:
            j = self.stlex[self._fl[self._rmq_min.query(fb, fe)] - 1]
            new_min = j - depth + 1
        if a == self._last_label(node):
            new_max = i_max
        else:
            j = self.stlex[self._fl[self._rmq_max.query(fb, fe)] - 1]
            new_max = j - depth + 1
        if new_min == new_max:
            return self._leaf(new_min)
        d = self.oracle.rlce(new_min, new_max)
        rng = colex_range(self.oracle, self.stlex, new_min + d - 1, d)
        if rng is None:
            raise CorruptStructureError(f"no sampled prefix ends with the child string of {node}")
        return NodeRep(rng[0], rng[1], new_min, new_max, d)

    def _leaf(self, i: int) -> NodeRep:
        return NodeRep(self.istar, self.istar, i, i, self.n - i + 1)

    def label(self, parent: NodeRep, node: NodeRep) -> tuple[int, int]:
        """Text interval spelling the edge from ``parent`` down to ``node``."""
        return node.i_min + parent.depth, node.i_min + node.depth - 1

    def leaves(self, node: NodeRep) -> tuple[NodeRep, NodeRep]:
        return self._leaf(node.i_min), self._leaf(node.i_max)

    def next(self, leaf: NodeRep) -> NodeRep | None:
        if not self.isleaf(leaf):
            raise ValueError("next() expects a leaf")
        step = self.phi.phi_next(leaf.i_min)
        if step.wrapped:
            return None
        return self._leaf(step.position)

    @staticmethod
    def sdepth(node: NodeRep) -> int:
        return node.depth

    @staticmethod
    def isleaf(node: NodeRep) -> bool:
        return node.i_min == node.i_max and node != NULL

    def locate_leaf(self, node: NodeRep) -> int:
        if not self.isleaf(node):
            raise ValueError("locate_leaf() expects a leaf")
        return node.i_min

    def ancestor(self, u: NodeRep, v: NodeRep) -> bool:
        """True iff u is an ancestor of v (every node is its own ancestor)."""
        if u.depth > v.depth:
            return False
        if u.depth == 0:
            return True
        return self.oracle.rlce(u.i_min, v.i_min) >= u.depth

    # -- pattern matching --------------------------------------------------

    def locus(self, pattern: Sequence[int]) -> NodeRep:
        """Highest explicit node whose string has ``pattern`` as a prefix, or NULL."""
        p = tuple(pattern)
        if not p:
            raise ValueError("empty pattern")
        m = len(p)
        s = self.oracle.symbols
        node = self.root()
        matched = 0
        while matched < m:
            nxt = self.child(node, p[matched])
            if nxt == NULL:
                return NULL
            i, j = self.label(node, nxt)
            take = min(j - i + 1, m - matched)
            if s[i - 1 : i - 1 + take] != p[matched : matched + take]:
                return NULL
            matched += take
            node = nxt
        return node

    def locate_all(self, pattern: Sequence[int]) -> list[int]:
        """Occurrences of ``pattern``, walking the leaves below its locus."""
        node = self.locus(pattern)
        if node == NULL:
            return []
        leaf, last = self.leaves(node)
        out = [leaf.i_min]
        while leaf.i_min != last.i_min:
            leaf = self.next(leaf)
            out.append(leaf.i_min)
        return out
