"""Command line front end: ``stpd build``, ``stpd locate`` and ``stpd stats``.

Exit status is 0 on success, 1 on usage errors and 2 on data errors.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .archive import ArchiveError, StpdIndex, load, save
from .core import PermutationKind, Text, bwt, cobwt, count_runs
from .lpf import build_pda
from .stcolex import DEFAULT_BLOCK_WORDS
from .stlex import NULL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

ENGINES = ["stcolex", "stlex"] + [f"general:{k.value}" for k in PermutationKind]


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def _text(path: str, raw_terminator: bool) -> Text:
    try:
        return Text.from_bytes(_read(path), raw_terminator=raw_terminator)
    except ValueError as exc:
        raise DataError(f"{path}: {exc}") from None


def _stats_line(measures: dict[str, int]) -> str:
    keys = ["n", "r", "rbar", "stlex-", "stcolex-", "stpos-"]
    return " ".join(f"{k}={measures[k]}" for k in keys)


def cmd_build(args) -> int:
    text = _text(args.input, args.raw_terminator)
    index = StpdIndex.build(text, block_words=args.block_words, kmax=args.kmax,
                            seed=args.seed, raw_terminator=args.raw_terminator)
    try:
        save(index, args.output)
    except OSError as exc:
        raise DataError(f"cannot write {args.output}: {exc.strerror}") from None
    print(_stats_line(index.measures()))
    return EXIT_OK


def _patterns(data: bytes) -> list[bytes]:
    lines = data.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    return lines


def _answer(index: StpdIndex, engine, name: str, mode: str, pid: int, pattern: bytes) -> str:
    if not pattern:
        return f"{pid}\tERROR\tempty pattern"
    if index.text.terminator in pattern:
        return f"{pid}\tERROR\tpattern contains the terminator byte"
    p = tuple(pattern)
    if mode == "all":
        hits = sorted(set(engine.locate_all(p)))
        return f"{pid}\t{len(hits)}\t" + " ".join(map(str, hits))
    if name == "stlex":
        node = engine.locus(p)
        hit = None if node == NULL else node.i_min
    else:
        hit = engine.locate_primary(p)
    return f"{pid}\t{'NOT_FOUND' if hit is None else hit}"


def cmd_locate(args) -> int:
    try:
        index = load(args.archive)
    except OSError as exc:
        raise DataError(f"cannot read {args.archive}: {exc.strerror}") from None
    except ArchiveError as exc:
        raise DataError(f"{args.archive}: {exc}") from None
    patterns = _patterns(_read(args.patterns))
    engine = index.engine(args.engine)

    def run(item):
        pid, pattern = item
        return _answer(index, engine, args.engine, args.mode, pid, pattern)

    items = list(enumerate(patterns, 1))
    if args.threads > 1:
        with ThreadPoolExecutor(args.threads) as pool:
            lines = list(pool.map(run, items))
    else:
        lines = [run(item) for item in items]
    out = sys.stdout
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK


STATS_COLUMNS = ["n", "stlex-", "stcolex-", "stpos-", "r", "rbar"]


def measure_sequence(symbols) -> dict[str, int]:
    """Table columns for a Text or a bare symbol sequence."""
    K = PermutationKind
    return {
        "n": len(symbols),
        "stlex-": len(build_pda(symbols, K.LEX)),
        "stcolex-": len(build_pda(symbols, K.COLEX)),
        "stpos-": len(build_pda(symbols, K.POS)),
        "r": count_runs(bwt(symbols)),
        "rbar": count_runs(cobwt(symbols)),
    }


def cmd_stats(args) -> int:
    if args.no_terminator:
        data = _read(args.input)
        if not data:
            raise DataError(f"{args.input}: empty input")
        symbols = tuple(data)
    else:
        symbols = _text(args.input, args.raw_terminator)
    row = measure_sequence(symbols)
    print("\t".join(STATS_COLUMNS))
    print("\t".join(str(row[c]) for c in STATS_COLUMNS))
    return EXIT_OK


def _positive(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonnegative(value: str) -> int:
    try:
        v = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stpd", description="Suffix-tree path decomposition indexes.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("build", help="index a text file")
    b.add_argument("input")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--raw-terminator", action="store_true",
                   help="input already ends with its unique smallest byte")
    b.add_argument("--block-words", type=_positive, default=DEFAULT_BLOCK_WORDS,
                   help="words per block for locate-all (default %(default)s)")
    b.add_argument("--kmax", type=_nonnegative, default=None,
                   help="k-mer table length (0 disables; default: sized automatically)")
    b.add_argument("--seed", type=_nonnegative, default=0, help="fingerprint base seed")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("locate", help="answer patterns, one per line")
    q.add_argument("archive")
    q.add_argument("patterns")
    q.add_argument("--mode", choices=["one", "all"], default="all")
    q.add_argument("--engine", choices=ENGINES, default="stcolex")
    q.add_argument("--threads", type=_positive, default=1)
    q.set_defaults(func=cmd_locate)

    s = sub.add_parser("stats", help="print repetitiveness measures as TSV")
    s.add_argument("input")
    group = s.add_mutually_exclusive_group()
    group.add_argument("--raw-terminator", action="store_true")
    group.add_argument("--no-terminator", action="store_true",
                       help="measure the bytes as a bare string, without a terminator")
    s.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"stpd: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"stpd: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
