"""Command line front end.

Subcommands
-----------
find      runs of one period vector in a text (streaming engine by default)
all-runs  runs for every block length at once (offline table engine)
compare   cross-check two engines on files or generated corpora
gen       emit a reproducible pseudo-random word
bench     measure the streaming engine, delimited records plus optional figure

Record formats
--------------
find      one run per line, tab separated: b h t e
all-runs  one run per line, tab separated: p b h t e
With --json each line is instead a JSON object with those fields.
Intervals are inclusive character offsets into the input text.

Period vectors are written sym:count[,sym:count...], e.g. a:2,b:1.
Input "-" reads standard input.  A single trailing newline is stripped
unless --raw is given.

Exit codes: 0 ok, 1 engines disagreed, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .gen import generate_word
from .offline import OfflineRun, WorkCounter, build_square_table, extend_head_tail, offline_all_runs
from .online import OnlineRunScanner, RunOccurrence, abelian_runs, state_footprint_bytes
from .oracle import oracle_all_repetitions, oracle_runs
from .parikh import ParikhVector, Word, intern_word

__all__ = ["main", "run"]

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


def _parse_period(text: str) -> list[tuple[str, int]]:
    """Parse sym:count[,sym:count...] into ordered (symbol, count) pairs."""
    pairs: list[tuple[str, int]] = []
    seen: set[str] = set()
    for part in text.split(","):
        sym, sep, num = part.partition(":")
        if not sep or len(sym) != 1:
            raise UsageError(f"bad period component {part!r}, expected sym:count")
        try:
            count = int(num)
        except ValueError:
            raise UsageError(f"bad count in period component {part!r}") from None
        if count < 0:
            raise UsageError(f"negative count in period component {part!r}")
        if sym in seen:
            raise UsageError(f"symbol {sym!r} repeated in period")
        seen.add(sym)
        pairs.append((sym, count))
    if sum(c for _, c in pairs) < 1:
        raise UsageError("period vector norm must be at least 1")
    return pairs


def _read_text(path: str, raw: bool) -> str:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fobj:
            data = fobj.read()
    text = data.decode("latin-1")
    if not raw and text.endswith("\n"):
        text = text[:-1]
    return text


def _iter_chars_stream(path: str, raw: bool):
    """Yield input one character at a time, dropping one trailing newline.

    One character of lookahead is enough to know whether the current
    character is final, so the stream never needs to be buffered.
    """
    fobj = sys.stdin.buffer if path == "-" else open(path, "rb")
    try:
        prev: str | None = None
        while True:
            chunk = fobj.read(1)
            if not chunk:
                break
            ch = chunk.decode("latin-1")
            if prev is not None:
                yield prev
            prev = ch
        if prev is not None and (raw or prev != "\n"):
            yield prev
    finally:
        if path != "-":
            fobj.close()


def _bucket_alphabet(pairs: list[tuple[str, int]]):
    """Alphabet of the period's own symbols plus one bucket for the rest.

    Symbols outside the period can never appear in a block, a contained
    head, or a contained tail unless their target count is zero, which
    the shared bucket's zero count expresses exactly, so folding them
    together changes no answer while keeping sigma at len(period) + 1.
    """
    index_of = {sym: k for k, (sym, _) in enumerate(pairs)}
    other = len(pairs)
    period = ParikhVector(tuple(c for _, c in pairs) + (0,))
    return index_of, other, period


def _encode(text: str, index_of: dict, other: int) -> list[int]:
    return [index_of.get(ch, other) for ch in text]


def _emit_find(rec: RunOccurrence, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps({"b": rec.b, "h": rec.h, "t": rec.t, "e": rec.e}) + "\n")
    else:
        out.write(f"{rec.b}\t{rec.h}\t{rec.t}\t{rec.e}\n")


def _emit_all(rec: OfflineRun, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(
            {"p": rec.p, "b": rec.b, "h": rec.h, "t": rec.t, "e": rec.e}) + "\n")
    else:
        out.write(f"{rec.p}\t{rec.b}\t{rec.h}\t{rec.t}\t{rec.e}\n")


def _trace_callback(pos: int, rec: RunOccurrence) -> None:
    print(f"# candidate i={pos} b={rec.b} h={rec.h} t={rec.t} e={rec.e}",
          file=sys.stderr)


def _cmd_find(args) -> int:
    pairs = _parse_period(args.period)
    index_of, other, period = _bucket_alphabet(pairs)
    on_candidate = _trace_callback if args.trace else None
    out = sys.stdout

    if args.engine == "oracle":
        text = _read_text(args.file, args.raw)
        word = Word(_encode(text, index_of, other), period.sigma)
        for rec in oracle_runs(period, word):
            _emit_find(rec, args.json, out)
        return EXIT_OK

    if args.stream:
        scanner = OnlineRunScanner(period, on_candidate=on_candidate)
        for ch in _iter_chars_stream(args.file, args.raw):
            rec = scanner.push(index_of.get(ch, other))
            if rec is not None:
                _emit_find(rec, args.json, out)
        rec = scanner.finish()
        if rec is not None:
            _emit_find(rec, args.json, out)
        return EXIT_OK

    text = _read_text(args.file, args.raw)
    for rec in abelian_runs(period, _encode(text, index_of, other),
                            on_candidate=on_candidate):
        _emit_find(rec, args.json, out)
    return EXIT_OK


def _oracle_all_runs(word: Word) -> list[OfflineRun]:
    """All-lengths runs from the definitional repetition oracle."""
    out: set[OfflineRun] = set()
    for rep in oracle_all_repetitions(word):
        out.add(extend_head_tail(word, rep))
    return sorted(out, key=lambda r: (r.p, r.b, r.h, r.t, r.e))


def _cmd_all_runs(args) -> int:
    text = _read_text(args.file, args.raw)
    _, word = intern_word(text)
    out = sys.stdout

    if args.dump_l:
        table = build_square_table(word)
        for row in table.cells:
            out.write("# L " + "".join("1" if v else "0" for v in row) + "\n")

    if args.engine == "oracle":
        runs = _oracle_all_runs(word)
    else:
        runs = offline_all_runs(word)
    for rec in runs:
        _emit_all(rec, args.json, out)
    return EXIT_OK


def _generate_or_usage(sigma: int, length: int, seed: int) -> str:
    try:
        return generate_word(sigma, length, seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _compare_words(args) -> list[tuple[str, str]]:
    """(label, text) pairs for the compare subcommand."""
    if args.random is not None:
        if args.random < 1:
            raise UsageError("--random needs a positive word count")
        return [(f"random[{k}]", _generate_or_usage(args.sigma, args.length, args.seed + k))
                for k in range(args.random)]
    if args.file is None:
        raise UsageError("compare needs an input file or --random")
    return [(args.file, _read_text(args.file, args.raw))]


def _cmd_compare(args) -> int:
    words = _compare_words(args)
    out = sys.stdout
    mismatches = 0
    total = 0

    if args.period:
        pairs = _parse_period(args.period)
        index_of, other, period = _bucket_alphabet(pairs)
        for label, text in words:
            encoded = _encode(text, index_of, other)
            got = {r.astuple() for r in abelian_runs(period, encoded)}
            want = {r.astuple() for r in oracle_runs(period, Word(encoded, period.sigma))}
            total += len(want)
            if got != want:
                mismatches += 1
                print(f"# mismatch {label}", file=sys.stderr)
                for rec in sorted(got - want):
                    out.write("only-online\t" + "\t".join(map(str, rec)) + "\n")
                for rec in sorted(want - got):
                    out.write("only-oracle\t" + "\t".join(map(str, rec)) + "\n")
    else:
        for label, text in words:
            _, word = intern_word(text)
            got = [r.astuple() for r in offline_all_runs(word)]
            want = [r.astuple() for r in _oracle_all_runs(word)]
            total += len(want)
            if got != want:
                mismatches += 1
                print(f"# mismatch {label}", file=sys.stderr)
                for rec in sorted(set(got) - set(want)):
                    out.write("only-offline\t" + "\t".join(map(str, rec)) + "\n")
                for rec in sorted(set(want) - set(got)):
                    out.write("only-oracle\t" + "\t".join(map(str, rec)) + "\n")

    out.write(f"# ok {len(words) - mismatches}/{len(words)} words, {total} runs\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _cmd_gen(args) -> int:
    word = _generate_or_usage(args.sigma, args.length, args.seed)
    if args.output:
        with open(args.output, "w", encoding="latin-1") as fobj:
            fobj.write(word)
    else:
        sys.stdout.write(word)
    return EXIT_OK


def _bench_one(period: ParikhVector, symbols: list[int]) -> dict:
    scanner = OnlineRunScanner(period)
    runs = 0
    start = time.perf_counter()
    for sym in symbols:
        if scanner.push(sym) is not None:
            runs += 1
    if scanner.finish() is not None:
        runs += 1
    wall = time.perf_counter() - start
    return {
        "n": len(symbols),
        "p": period.norm,
        "wall_s": round(wall, 6),
        "window_comparisons": scanner.window.comparisons,
        "suffix_updates": scanner.suffix.updates,
        "flush_iterations": scanner.flush_iterations,
        "head_symbol_reads": scanner.head_symbol_reads,
        "operations": scanner.operation_count,
        "state_bytes": state_footprint_bytes(scanner),
        "runs": runs,
    }


_BENCH_COLUMNS = ["n", "p", "wall_s", "window_comparisons", "flush_iterations",
                  "state_bytes", "operations", "runs"]


def _cmd_bench(args) -> int:
    pairs = _parse_period(args.period)
    index_of, other, period = _bucket_alphabet(pairs)
    out = sys.stdout

    records: list[dict] = []
    if args.file is not None:
        text = _read_text(args.file, args.raw)
        records.append(_bench_one(period, _encode(text, index_of, other)))
    else:
        try:
            sizes = [int(s) for s in args.sizes.split(",") if s]
        except ValueError:
            raise UsageError(f"bad --sizes value {args.sizes!r}") from None
        if not sizes or any(n < 1 for n in sizes):
            raise UsageError("--sizes needs positive comma separated integers")
        for n in sizes:
            text = _generate_or_usage(args.sigma, n, args.seed)
            records.append(_bench_one(period, _encode(text, index_of, other)))

    if args.json:
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    else:
        out.write("# " + "\t".join(_BENCH_COLUMNS) + "\n")
        for rec in records:
            out.write("\t".join(str(rec[c]) for c in _BENCH_COLUMNS) + "\n")

    if args.plot:
        from .plotting import render_bench_figure
        render_bench_figure(records, args.plot)
        print(f"# figure written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelruns",
        description="Detect abelian runs: maximal anagram-periodic regions of a text.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_find = sub.add_parser("find", help="runs of one period vector")
    p_find.add_argument("--period", required=True, help="period vector, e.g. a:2,b:1")
    p_find.add_argument("file", nargs="?", default="-", help="input file or - for stdin")
    p_find.add_argument("--engine", choices=["online", "oracle"], default="online")
    p_find.add_argument("--json", action="store_true", help="JSON lines instead of TSV")
    p_find.add_argument("--raw", action="store_true", help="keep a trailing newline")
    p_find.add_argument("--stream", action="store_true",
                        help="read one byte at a time (online engine only)")
    p_find.add_argument("--trace", action="store_true",
                        help="print candidate lines to stderr as they are found")
    p_find.set_defaults(func=_cmd_find)

    p_all = sub.add_parser("all-runs", help="runs for every block length")
    p_all.add_argument("file", nargs="?", default="-", help="input file or - for stdin")
    p_all.add_argument("--engine", choices=["offline", "oracle"], default="offline")
    p_all.add_argument("--json", action="store_true", help="JSON lines instead of TSV")
    p_all.add_argument("--raw", action="store_true", help="keep a trailing newline")
    p_all.add_argument("--dump-L", dest="dump_l", action="store_true",
                       help="print the square-center table rows as comments")
    p_all.set_defaults(func=_cmd_all_runs)

    p_cmp = sub.add_parser("compare", help="cross-check engines")
    p_cmp.add_argument("file", nargs="?", default=None, help="input file or - for stdin")
    p_cmp.add_argument("--period", default=None,
                       help="compare the streaming engine on this period; "
                            "omit to compare the all-lengths engines")
    p_cmp.add_argument("--random", type=int, default=None, metavar="N",
                       help="compare on N generated words instead of a file")
    p_cmp.add_argument("--sigma", type=int, default=2)
    p_cmp.add_argument("--length", type=int, default=64)
    p_cmp.add_argument("--seed", type=int, default=1)
    p_cmp.add_argument("--raw", action="store_true", help="keep a trailing newline")
    p_cmp.set_defaults(func=_cmd_compare)

    p_gen = sub.add_parser("gen", help="emit a reproducible pseudo-random word")
    p_gen.add_argument("--sigma", type=int, default=2)
    p_gen.add_argument("--length", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("-o", "--output", default=None, help="write to a file instead of stdout")
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="measure the streaming engine")
    p_bench.add_argument("--period", required=True, help="period vector, e.g. a:3,b:3")
    p_bench.add_argument("file", nargs="?", default=None,
                         help="input file; omit to generate words of --sizes")
    p_bench.add_argument("--sizes", default="1024,4096,16384,65536",
                         help="comma separated input lengths to generate")
    p_bench.add_argument("--sigma", type=int, default=2)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--json", action="store_true", help="JSON lines instead of TSV")
    p_bench.add_argument("--raw", action="store_true", help="keep a trailing newline")
    p_bench.add_argument("--plot", default=None, metavar="PATH",
                         help="also render a PNG figure of the records")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"abelruns: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO
    except OSError as exc:
        print(f"abelruns: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main(sys.argv[1:]))
