import math
import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from stpd import StColexIndex, Text, TextArrays
from stpd.brute import substring_occurrences
from stpd.stcolex import MAX_KMER, KmerTable
from textgen import random_symbols, texts


@pytest.fixture
def index(t0):
    return StColexIndex.build(t0, kmax=0)


def test_samples(index):
    assert index.pda == [11, 1, 9, 3, 4]


def test_sufsearch(t0, index):
    assert index.sufsearch(1, 0, ord("A")) == (2, 3)
    assert index.sufsearch(1, 0, 0) == (1, 1)
    assert index.sufsearch(5, 8, ord("A")) == (3, 3)
    assert index.sufsearch(1, 0, ord("T")) is None


def test_locate_primary(t0, index):
    assert index.locate_primary(t0.encode("CGCGAA")) == 5
    assert index.locate_primary(t0.encode("A")) == 1
    assert index.locate_primary(t0.encode("TTT")) is None
    with pytest.raises(ValueError):
        index.locate_primary(())


def test_locate_all(t0, index):
    assert sorted(index.locate_all(t0.encode("A"))) == [1, 2, 9, 10]
    assert sorted(index.locate_all(t0.encode("CG"))) == [3, 5, 7]
    stats = {}
    assert index.locate_all(t0.encode("CGCGAA"), stats) == [5]
    assert stats["phi_next"] <= 1 + 1 + 1


@pytest.mark.parametrize("block_words", [1, 2, 3, 64])
@pytest.mark.parametrize("kmax", [0, 1, 3, None])
def test_locate_matches_naive_scan(block_words, kmax):
    rng = random.Random(71)
    for t in texts(71 + block_words, 25, 64):
        arrays = TextArrays(t)
        ipa = arrays.pa.forward
        index = StColexIndex.build(t, arrays, block_words=block_words, kmax=kmax)
        occurrences = substring_occurrences(t)
        for pattern, starts in occurrences.items():
            stats = {}
            got = index.locate_all(pattern, stats)
            assert len(got) == len(set(got)) and sorted(got) == starts
            assert stats["phi_next"] <= len(starts) + math.ceil(len(pattern) / block_words) + 1
            assert index.locate_primary(pattern) == min(starts, key=lambda i: ipa[i - 1])
        for _ in range(20):
            pattern = tuple(random_symbols(rng, rng.randint(1, 8), t.sigma))
            if pattern not in occurrences:
                assert index.locate_all(pattern) == []
                assert index.locate_primary(pattern) is None


def test_patterns_with_terminator(t0, index):
    assert index.locate_all(t0.encode("AA$")) == [9]
    assert index.locate_all((0,)) == [11]


def test_kmer_table_stores_colex_smallest_end():
    for t in texts(72, 30, 64, sigmas=(4,)):
        arrays = TextArrays(t)
        ipa = arrays.pa.forward
        s = t.symbols
        table = KmerTable(t, 4, ipa)
        for k in range(1, 5):
            ends: dict[tuple[int, ...], int] = {}
            for end in range(k, len(s) + 1):
                kmer = s[end - k:end]
                if kmer not in ends or ipa[end - 1] < ipa[ends[kmer] - 1]:
                    ends[kmer] = end
            for kmer, end in ends.items():
                assert table.lookup(kmer) == end
        assert table.lookup((99,)) is None


def test_kmax_sizing():
    rng = random.Random(73)
    dna = Text([rng.choice(b"ACGT") for _ in range(4000)] + [0])
    auto = StColexIndex.build(dna)
    assert 0 < auto.kmax <= MAX_KMER
    words = len(auto.pda) + 2 * len(auto.phi)
    assert 2 * auto.kmers.entries() <= words // 2
    # fewer than four distinct symbols: no table
    binary = Text([rng.randint(1, 2) for _ in range(500)] + [0])
    assert StColexIndex.build(binary).kmers is None
    assert StColexIndex.build(dna, kmax=2).kmax == 2
    assert KmerTable.max_k(2 ** 40) == 1


def test_invalid_block_size(t0):
    with pytest.raises(ValueError):
        StColexIndex.build(t0, block_words=0)


def test_concurrent_queries_agree():
    t = texts(74, 1, 200)[0]
    index = StColexIndex.build(t)
    patterns = list(substring_occurrences(t))[:400]
    serial = [sorted(index.locate_all(p)) for p in patterns]
    with ThreadPoolExecutor(4) as pool:
        parallel = list(pool.map(lambda p: sorted(index.locate_all(p)), patterns))
    assert parallel == serial
