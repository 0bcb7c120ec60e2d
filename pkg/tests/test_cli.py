import random
import subprocess
import sys

import pytest

from stpd.cli import ENGINES, STATS_COLUMNS, main
from stpd.stpos import worst_case_string
from textgen import T0


@pytest.fixture
def files(tmp_path):
    text = tmp_path / "t0.txt"
    text.write_bytes(T0[:-1].encode())
    archive = tmp_path / "t0.stpd"
    patterns = tmp_path / "patterns.txt"
    patterns.write_bytes(b"CG\nCGCGAA\nZZZ\nA\n")
    return text, archive, patterns


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_build_prints_measures(capsys, files):
    text, archive, _ = files
    code, out, _ = run(capsys, "build", text, "-o", archive)
    assert code == 0
    assert out.strip() == "n=11 r=7 rbar=7 stlex-=5 stcolex-=5 stpos-=5"
    assert archive.read_bytes().startswith(b"STPD1")


def test_locate_all_mode(capsys, files):
    text, archive, patterns = files
    run(capsys, "build", text, "-o", archive)
    for engine in ENGINES:
        code, out, _ = run(capsys, "locate", archive, patterns, "--engine", engine)
        assert code == 0
        assert out.splitlines() == ["1\t3\t3 5 7", "2\t1\t5", "3\t0\t", "4\t4\t1 2 9 10"]


def test_locate_one_mode(capsys, files):
    text, archive, patterns = files
    run(capsys, "build", text, "-o", archive)
    code, out, _ = run(capsys, "locate", archive, patterns, "--mode", "one")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "2\t5" and lines[2] == "3\tNOT_FOUND"
    for engine in ENGINES:
        _, out, _ = run(capsys, "locate", archive, patterns, "--mode", "one", "--engine", engine)
        one = out.splitlines()
        assert one[2] == "3\tNOT_FOUND"
        for line, starts in zip(one, [[3, 5, 7], [5], None, [1, 2, 9, 10]]):
            if starts:
                assert int(line.split("\t")[1]) in starts


def test_bad_pattern_lines_do_not_stop_processing(capsys, files, tmp_path):
    text, archive, _ = files
    run(capsys, "build", text, "-o", archive)
    patterns = tmp_path / "bad.txt"
    patterns.write_bytes(b"C\x00G\n\nCG\n")
    code, out, _ = run(capsys, "locate", archive, patterns)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("1\tERROR") and lines[1].startswith("2\tERROR")
    assert lines[2] == "3\t3\t3 5 7"


def test_engines_agree_and_threads_keep_order(capsys, tmp_path):
    rng = random.Random(121)
    data = bytes(rng.choice(b"ab") for _ in range(300))
    text = tmp_path / "r.txt"
    text.write_bytes(data)
    archive = tmp_path / "r.stpd"
    pats = tmp_path / "p.txt"
    pats.write_bytes(b"\n".join(data[i:i + rng.randint(1, 9)] for i in range(0, 280, 7)) + b"\nc\n")
    run(capsys, "build", text, "-o", archive, "--block-words", "3", "--kmax", "0")
    outputs = {run(capsys, "locate", archive, pats, "--engine", e)[1] for e in ENGINES}
    assert len(outputs) == 1
    _, threaded, _ = run(capsys, "locate", archive, pats, "--threads", "4")
    assert {threaded} == outputs


def test_stats(capsys, tmp_path, files):
    text, _, _ = files
    code, out, _ = run(capsys, "stats", text)
    assert code == 0
    header, row = out.splitlines()
    assert header.split("\t") == STATS_COLUMNS == ["n", "stlex-", "stcolex-", "stpos-", "r", "rbar"]
    values = dict(zip(STATS_COLUMNS, map(int, row.split("\t"))))
    assert values == {"n": 11, "stlex-": 5, "stcolex-": 5, "stpos-": 5, "r": 7, "rbar": 7}

    worst = tmp_path / "worst.bin"
    worst.write_bytes(bytes(c + ord("a") for c in worst_case_string((3, 1))))
    _, out, _ = run(capsys, "stats", worst, "--no-terminator")
    assert dict(zip(STATS_COLUMNS, map(int, out.splitlines()[1].split("\t"))))["stpos-"] == 3

    single = tmp_path / "a.txt"
    single.write_bytes(b"a")
    _, out, _ = run(capsys, "stats", single)
    values = dict(zip(STATS_COLUMNS, map(int, out.splitlines()[1].split("\t"))))
    assert values["n"] == 2 and values["r"] == 2


def test_raw_terminator(capsys, tmp_path):
    text = tmp_path / "raw.bin"
    text.write_bytes(b"ACGCGCGAA\x01")
    _, out, _ = run(capsys, "build", text, "-o", tmp_path / "raw.stpd", "--raw-terminator")
    assert out.startswith("n=10 ")
    zero = tmp_path / "zero.bin"
    zero.write_bytes(b"AC\x00G")
    code, _, err = run(capsys, "build", zero, "-o", tmp_path / "z.stpd")
    assert code == 2 and "byte 0" in err


def test_data_errors_exit_2(capsys, tmp_path, files):
    text, archive, patterns = files
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    assert run(capsys, "build", empty, "-o", archive)[0] == 2
    assert run(capsys, "build", tmp_path / "missing", "-o", archive)[0] == 2
    assert run(capsys, "locate", tmp_path / "missing", patterns)[0] == 2
    junk = tmp_path / "junk.stpd"
    junk.write_bytes(b"STPD1" + b"\x09" * 8)
    code, _, err = run(capsys, "locate", junk, patterns)
    assert code == 2 and "version" in err
    assert run(capsys, "stats", empty)[0] == 2


def test_usage_errors_exit_1(capsys, files):
    text, archive, patterns = files
    assert run(capsys)[0] == 1
    assert run(capsys, "build", text)[0] == 1
    assert run(capsys, "build", text, "-o", archive, "--block-words", "0")[0] == 1
    assert run(capsys, "locate", archive, patterns, "--engine", "fm")[0] == 1
    assert run(capsys, "locate", archive, patterns, "--mode", "some")[0] == 1
    assert run(capsys, "stats", text, "--raw-terminator", "--no-terminator")[0] == 1


def test_console_entry_point(files):
    text, archive, _ = files
    proc = subprocess.run([sys.executable, "-m", "stpd", "build", str(text), "-o", str(archive)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "stcolex-=5" in proc.stdout
