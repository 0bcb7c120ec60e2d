"""Text-order decompositions: leftmost/rightmost occurrences, the family of
strings where they are large, and the PPM*-style escape counter that bounds
them from above."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import PermutationKind, Text
from .general import GeneralLocator
from .lpf import build_pda


def leftmost_occurrence(text: Text, pattern: Sequence[int]) -> int | None:
    return GeneralLocator(text, PermutationKind.POS).locate_primary(pattern)


def rightmost_occurrence(text: Text, pattern: Sequence[int]) -> int | None:
    return GeneralLocator(text, PermutationKind.POS_DUAL).locate_primary(pattern)


def stpos_size(seq: Text | Sequence[int], dual: bool = False) -> int:
    """Number of leftmost-path (or rightmost-path when ``dual``) samples."""
    kind = PermutationKind.POS_DUAL if dual else PermutationKind.POS
    return len(build_pda(seq, kind))


@dataclass(frozen=True)
class WorstCaseSpec:
    """Run lengths x_1..x_p: strictly decreasing, or increasing for the dual."""
    xs: tuple[int, ...]
    dual: bool = False
    n: int | None = None

    def __post_init__(self):
        xs = self.xs
        if not xs:
            raise ValueError("need at least one run")
        if any(x < 1 for x in xs):
            raise ValueError("run lengths must be positive")
        if self.n is not None and any(x > self.n for x in xs):
            raise ValueError("run length exceeds n")
        pairs = list(zip(xs, xs[1:]))
        if self.dual and any(a >= b for a, b in pairs):
            raise ValueError("dual run lengths must be strictly increasing")
        if not self.dual and any(a <= b for a, b in pairs):
            raise ValueError("run lengths must be strictly decreasing")


def worst_case_string(spec: WorstCaseSpec | Sequence[int]) -> list[int]:
    """0^x1 1 0^x2 2 ... 0^xp p (no terminator)."""
    if not isinstance(spec, WorstCaseSpec):
        spec = WorstCaseSpec(tuple(spec))
    out: list[int] = []
    for k, x in enumerate(spec.xs, 1):
        out.extend([0] * x)
        out.append(k)
    return out


def _occurs(haystack: str, needle: str) -> bool:
    return needle in haystack


def ppm_escape_count(seq: Text | Sequence[int]) -> int:
    """Escapes emitted by the unbounded-context PPM simulation.

    At step j the context is the longest T[i', j-1] seen in T[1, j-2]
    (smallest i'); the symbol escapes when T[i', j] has not occurred in
    T[1, j-1]. The first symbol always escapes.
    """
    s = seq.symbols if isinstance(seq, Text) else seq
    if len(s) == 0:
        raise ValueError("empty string")
    # map symbols to characters so substring search is str.__contains__
    chars = "".join(chr(c + 1) for c in s)
    escapes = 1
    for j in range(2, len(s) + 1):
        before = chars[: j - 2]
        i2 = 1
        while i2 < j and not _occurs(before, chars[i2 - 1 : j - 1]):
            i2 += 1
        if not _occurs(chars[: j - 1], chars[i2 - 1 : j]):
            escapes += 1
    return escapes
