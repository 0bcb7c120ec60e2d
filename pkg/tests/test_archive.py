import random
import struct

import pytest

from stpd import StpdIndex, Text, load, save
from stpd.archive import MAGIC, ArchiveError, dumps, loads
from stpd.brute import substring_occurrences
from textgen import texts

ENGINES = ["stcolex", "stlex", "general:LEX", "general:COLEX", "general:POS", "general:POS_DUAL"]


def test_round_trip_is_byte_identical(t0):
    data = dumps(StpdIndex.build(t0))
    assert data.startswith(MAGIC)
    assert dumps(loads(data)) == data


def test_round_trip_answers_identically():
    for t in texts(111, 15, 60):
        built = StpdIndex.build(t, block_words=2, seed=7)
        loaded = loads(dumps(built))
        assert loaded.measures() == built.measures()
        assert loaded.phi_sa == built.phi_sa and loaded.phi_pa == built.phi_pa
        for pattern in substring_occurrences(t):
            for name in ENGINES:
                assert sorted(loaded.engine(name).locate_all(pattern)) == \
                    sorted(built.engine(name).locate_all(pattern))


def test_wide_alphabet_round_trip():
    t = Text([300, 5, 300, 299, 1])
    data = dumps(StpdIndex.build(t))
    loaded = loads(data)
    assert loaded.text.symbols == t.symbols
    assert dumps(loaded) == data
    assert loaded.engine("stcolex").locate_all((300,)) == [1, 3]


def test_version_mismatch_rejected(t0):
    data = bytearray(dumps(StpdIndex.build(t0)))
    data[len(MAGIC):len(MAGIC) + 8] = struct.pack("<Q", 2)
    with pytest.raises(ArchiveError, match="version"):
        loads(bytes(data))


def test_malformed_archives_rejected(t0):
    data = dumps(StpdIndex.build(t0))
    with pytest.raises(ArchiveError):
        loads(b"NOPE" + data[4:])
    with pytest.raises(ArchiveError):
        loads(data[:-3])
    with pytest.raises(ArchiveError):
        loads(data + b"\0")


def test_unknown_engine(t0):
    index = StpdIndex.build(t0)
    with pytest.raises(ValueError):
        index.engine("fm")
    with pytest.raises(ValueError):
        index.engine("general:ALPHA")


def test_build_stores_configuration(t0):
    index = loads(dumps(StpdIndex.build(t0, block_words=5, kmax=0, seed=9, raw_terminator=True)))
    assert (index.block_words, index.kmax, index.seed, index.raw_terminator) == (5, 0, 9, True)


def test_megabyte_dna_smoke(tmp_path):
    rng = random.Random(112)
    data = bytes(rng.choice(b"ACGT") for _ in range(1 << 20))
    path = tmp_path / "dna.stpd"
    save(StpdIndex.build(Text.from_bytes(data)), path)
    index = load(path)
    assert index.n == (1 << 20) + 1
    stcolex, stlex = index.engine("stcolex"), index.engine("stlex")
    for _ in range(20):
        start = rng.randrange(len(data) - 32)
        pattern = tuple(data[start:start + rng.randint(6, 24)])
        want = [k + 1 for k in _find_all(data, bytes(pattern))]
        assert sorted(stcolex.locate_all(pattern)) == want
        assert sorted(stlex.locate_all(pattern)) == want
        assert start + 1 in want


def _find_all(data: bytes, needle: bytes):
    k = data.find(needle)
    while k >= 0:
        yield k
        k = data.find(needle, k + 1)
