"""A bundle of all query structures for one text and its binary file format.

Layout (every integer is an unsigned little-endian 64-bit word unless noted)::

    b"STPD1"  version  b"L" (1 byte)  flags  block_words  kmax  seed
    n  sigma  symbol_width  symbols (n * symbol_width bytes)
    r  rbar
    kind_count  { kind_code  length  positions... }
    phi SA: count  keys...  values...  last
    phi PA: count  keys...  values...  last
    stlex: length  positions...  ranks...  last_suffix
"""
from __future__ import annotations

import io
import struct
from typing import BinaryIO

import numpy as np

from .core import PermutationKind, Text, TextArrays, bwt, cobwt, count_runs
from .general import GeneralLocator
from .lpf import build_pda
from .phi import PA, SA, PhiStructure, build_phi
from .stcolex import DEFAULT_BLOCK_WORDS, StColexIndex
from .stlex import StLexTree, sample_positions

MAGIC = b"STPD1"
VERSION = 1
ENDIAN_TAG = b"L"
FLAG_RAW_TERMINATOR = 1

KIND_CODES = {kind: code for code, kind in enumerate(PermutationKind)}
CODE_KINDS = {code: kind for kind, code in KIND_CODES.items()}


class ArchiveError(ValueError):
    """The file is not a readable index archive."""


class StpdIndex:
    """Everything needed to answer queries: the text plus sampled structures.

    Engines are assembled lazily from the stored parts, so a loaded index
    answers queries without re-sorting the text (the general engine is the
    exception and rebuilds its phrase cover on first use).
    """

    def __init__(self, text: Text, pdas: dict[PermutationKind, list[int]],
                 phi_sa: PhiStructure, phi_pa: PhiStructure,
                 stlex: list[int], stlex_ranks: list[int], last_suffix: int,
                 r: int, rbar: int, block_words: int = DEFAULT_BLOCK_WORDS,
                 kmax: int = 0, seed: int = 0, raw_terminator: bool = False):
        self.text = text
        self.pdas = pdas
        self.phi_sa = phi_sa
        self.phi_pa = phi_pa
        self.stlex = stlex
        self.stlex_ranks = stlex_ranks
        self.last_suffix = last_suffix
        self.r = r
        self.rbar = rbar
        self.block_words = block_words
        self.kmax = kmax
        self.seed = seed
        self.raw_terminator = raw_terminator
        self._engines: dict[str, object] = {}

    @classmethod
    def build(cls, text: Text, block_words: int = DEFAULT_BLOCK_WORDS,
              kmax: int | None = None, seed: int = 0,
              raw_terminator: bool = False) -> "StpdIndex":
        arrays = TextArrays(text)
        pdas = {kind: build_pda(text, kind, arrays).positions for kind in PermutationKind}
        phi_sa = build_phi(text, SA, arrays)
        phi_pa = build_phi(text, PA, arrays)
        colex = StColexIndex(text, pdas[PermutationKind.COLEX], phi_pa, block_words,
                             kmax, seed, arrays.pa.forward)
        stlex = sample_positions(text, arrays)
        n = arrays.n
        isa = arrays.sa.forward
        ranks = [isa[j] if j < n else n + 1 for j in stlex]
        index = cls(text, pdas, phi_sa, phi_pa, stlex, ranks, arrays.sa.inverse[-1],
                    count_runs(bwt(text)), count_runs(cobwt(text)),
                    block_words, colex.kmax, seed, raw_terminator)
        index._engines["stcolex"] = colex
        return index

    @property
    def n(self) -> int:
        return len(self.text)

    def measures(self) -> dict[str, int]:
        K = PermutationKind
        return {
            "n": self.n,
            "r": self.r,
            "rbar": self.rbar,
            "stlex-": len(self.pdas[K.LEX]),
            "stcolex-": len(self.pdas[K.COLEX]),
            "stpos-": len(self.pdas[K.POS]),
        }

    def engine(self, name: str):
        """``stcolex``, ``stlex`` or ``general:KIND``."""
        eng = self._engines.get(name)
        if eng is not None:
            return eng
        if name == "stcolex":
            eng = StColexIndex(self.text, self.pdas[PermutationKind.COLEX], self.phi_pa,
                               self.block_words, self.kmax, self.seed)
        elif name == "stlex":
            eng = StLexTree(self.text, self.stlex, self.stlex_ranks, self.last_suffix,
                            self.phi_sa, self.seed)
        elif name.startswith("general:"):
            try:
                kind = PermutationKind[name.split(":", 1)[1].upper()]
            except KeyError:
                raise ValueError(f"unknown permutation kind in {name!r}") from None
            eng = GeneralLocator(self.text, kind, seed=self.seed)
        else:
            raise ValueError(f"unknown engine {name!r}")
        self._engines[name] = eng
        return eng


def _word(out: BinaryIO, value: int) -> None:
    out.write(struct.pack("<Q", value))


def _words(out: BinaryIO, values) -> None:
    out.write(np.asarray(values, dtype="<u8").tobytes())


def _write_phi(out: BinaryIO, phi: PhiStructure) -> None:
    _word(out, len(phi.keys))
    _words(out, phi.keys)
    _words(out, phi.values)
    _word(out, phi.last)


def dumps(index: StpdIndex) -> bytes:
    out = io.BytesIO()
    out.write(MAGIC)
    _word(out, VERSION)
    out.write(ENDIAN_TAG)
    _word(out, FLAG_RAW_TERMINATOR if index.raw_terminator else 0)
    _word(out, index.block_words)
    _word(out, index.kmax)
    _word(out, index.seed)
    text = index.text
    _word(out, len(text))
    _word(out, text.sigma)
    width = 1 if text.sigma <= 256 else 8
    _word(out, width)
    if width == 1:
        out.write(bytes(text.symbols))
    else:
        _words(out, text.symbols)
    _word(out, index.r)
    _word(out, index.rbar)
    _word(out, len(index.pdas))
    for kind, positions in index.pdas.items():
        _word(out, KIND_CODES[kind])
        _word(out, len(positions))
        _words(out, positions)
    _write_phi(out, index.phi_sa)
    _write_phi(out, index.phi_pa)
    _word(out, len(index.stlex))
    _words(out, index.stlex)
    _words(out, index.stlex_ranks)
    _word(out, index.last_suffix)
    return out.getvalue()


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, size: int) -> bytes:
        if self.pos + size > len(self.data):
            raise ArchiveError("archive is truncated")
        chunk = self.data[self.pos : self.pos + size]
        self.pos += size
        return chunk

    def word(self) -> int:
        return struct.unpack("<Q", self.take(8))[0]

    def words(self, count: int) -> list[int]:
        return np.frombuffer(self.take(8 * count), dtype="<u8").astype(np.int64).tolist()

    def phi(self, variant: str, n: int) -> PhiStructure:
        count = self.word()
        keys = self.words(count)
        values = self.words(count)
        return PhiStructure(variant, n, keys, values, self.word())


def loads(data: bytes) -> StpdIndex:
    rd = _Reader(data)
    if rd.take(len(MAGIC)) != MAGIC:
        raise ArchiveError("not an index archive (bad magic)")
    version = rd.word()
    if version != VERSION:
        raise ArchiveError(f"unsupported archive version {version}")
    if rd.take(1) != ENDIAN_TAG:
        raise ArchiveError("unsupported byte order tag")
    flags = rd.word()
    block_words, kmax, seed = rd.word(), rd.word(), rd.word()
    n, sigma, width = rd.word(), rd.word(), rd.word()
    if width == 1:
        symbols = rd.take(n)
    elif width == 8:
        symbols = rd.words(n)
    else:
        raise ArchiveError(f"bad symbol width {width}")
    try:
        text = Text(symbols, sigma)
    except ValueError as exc:
        raise ArchiveError(f"stored text is invalid: {exc}") from None
    r, rbar = rd.word(), rd.word()
    pdas = {}
    for _ in range(rd.word()):
        code = rd.word()
        if code not in CODE_KINDS:
            raise ArchiveError(f"unknown permutation kind code {code}")
        pdas[CODE_KINDS[code]] = rd.words(rd.word())
    phi_sa = rd.phi(SA, n)
    phi_pa = rd.phi(PA, n)
    size = rd.word()
    stlex = rd.words(size)
    ranks = rd.words(size)
    last_suffix = rd.word()
    if rd.pos != len(data):
        raise ArchiveError("trailing bytes after archive")
    return StpdIndex(text, pdas, phi_sa, phi_pa, stlex, ranks, last_suffix, r, rbar,
                     block_words, kmax, seed, bool(flags & FLAG_RAW_TERMINATOR))


def save(index: StpdIndex, path) -> None:
    with open(path, "wb") as fh:
        fh.write(dumps(index))


def load(path) -> StpdIndex:
    with open(path, "rb") as fh:
        return loads(fh.read())
