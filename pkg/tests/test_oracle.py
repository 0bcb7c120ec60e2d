import pytest

from stpd import Text, TextOracle
from stpd.oracle import colex_compare, colex_range
from textgen import texts


def test_access_and_extract(t0):
    o = TextOracle(t0)
    assert o.access(11) == 0
    assert t0.decode(o.extract(3, 6)) == "CGCG"
    assert o.extract(1, 11) == t0.symbols
    assert o.extract(4, 3) == ()
    with pytest.raises(IndexError):
        o.access(12)
    with pytest.raises(IndexError):
        o.extract(5, 3)


def test_longest_common_extensions(t0):
    o = TextOracle(t0)
    assert o.rlce(3, 5) == 4
    assert o.rlce(1, 9) == 2
    assert o.llce(10, 9) == 1
    assert o.rlce(12, 3) == 0
    assert o.llce(0, 7) == 0
    with pytest.raises(IndexError):
        o.rlce(13, 1)
    with pytest.raises(IndexError):
        o.llce(-1, 1)


def test_lce_against_scanning():
    for t in texts(21, 40, 64):
        s = t.symbols
        n = len(s)
        o = TextOracle(t)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                h = 0
                while i + h <= n and j + h <= n and s[i + h - 1] == s[j + h - 1]:
                    h += 1
                assert o.rlce(i, j) == h
                h = 0
                while i - h >= 1 and j - h >= 1 and s[i - h - 1] == s[j - h - 1]:
                    h += 1
                assert o.llce(i, j) == h


def test_fingerprint_examples(t0):
    o = TextOracle(t0)
    assert o.fingerprint(3, 6) == o.fingerprint(5, 8)
    assert o.fingerprint(1, 1) != o.fingerprint(3, 3)
    assert o.fingerprint(1, 11) == o.fingerprint(1, 11)
    with pytest.raises(IndexError):
        o.fingerprint(4, 3)


def test_fingerprint_equal_iff_substrings_equal():
    """Collision check: compare every pair of equal-length substrings directly."""
    for seed, t in enumerate(texts(22, 30, 64)):
        s = t.symbols
        n = len(s)
        o = TextOracle(t, seed=seed)
        for length in range(1, n + 1):
            seen: dict[int, tuple[int, ...]] = {}
            for i in range(1, n - length + 2):
                sub = s[i - 1:i - 1 + length]
                h = o.fingerprint(i, i + length - 1)
                assert seen.setdefault(h, sub) == sub


def test_fingerprint_base_depends_on_seed(t0):
    assert TextOracle(t0, seed=1).base != TextOracle(t0, seed=2).base
    assert TextOracle(t0, seed=3).base == TextOracle(t0, seed=3).base


def test_colex_compare_and_range(t0):
    o = TextOracle(t0)
    samples = [11, 1, 9, 3, 4]
    # T[1,9] ends with 'A' < 'G' = T[8], so it sorts before "CGCG" = T[5,8]
    assert colex_compare(o, 9, 8, 4) == -1
    assert colex_compare(o, 8, 8, 4) == 0
    assert colex_range(o, samples, 0, 0, ord("A")) == (2, 3)
    assert colex_range(o, samples, 0, 0, 0) == (1, 1)
    assert colex_range(o, samples, 8, 4, ord("A")) == (3, 3)
    assert colex_range(o, samples, 0, 0, ord("T")) is None


def test_colex_range_matches_filtering():
    for t in texts(23, 40, 40):
        s = t.symbols
        n = len(s)
        o = TextOracle(t)
        samples = sorted(range(0, n + 1), key=lambda j: s[:j][::-1])
        for end in range(0, n + 1):
            for length in range(0, end + 1):
                for c in sorted(set(s)):
                    want = s[end - length:end] + (c,)
                    hits = [k for k, x in enumerate(samples, 1)
                            if x >= len(want) and s[x - len(want):x] == want]
                    got = colex_range(o, samples, end, length, c)
                    assert got == ((hits[0], hits[-1]) if hits else None)
                    if hits:
                        assert hits == list(range(hits[0], hits[-1] + 1))


def test_oracle_accepts_plain_sequences():
    o = TextOracle([3, 1, 3, 1])
    assert o.rlce(1, 3) == 2
    assert o.n == 4
    assert isinstance(Text([1, 0]).symbols, tuple)
