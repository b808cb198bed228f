"""Command line interface: ``dyckzeta <subcommand> ...``.

Exit codes: 0 success, 1 internal invariant violation or failed must-pass
check, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import os
import sys
from typing import Iterable, Iterator, TextIO

from . import dataset, harness
from .dyck import DyckWord, parse_word
from .errors import DyckError, InternalInvariantViolation, SemilengthOutOfRange
from .scaffolding import (
    AFTER_UPDATE,
    BEFORE_UPDATE,
    DECREASING,
    INCREASING,
    POST_STEP,
    PRE_STEP,
    MapVariant,
    scaffolding,
    scaffolding_conjugate,
    trace_json,
)
from .statistics import MODES, area, bounce, dinv, qt_catalan
from .zeta import zeta_area_vector, zeta_sweep

REPORT_DIR_ENV = "DYCKZETA_REPORT_DIR"

ALGORITHMS = {
    "area-vector": zeta_area_vector,
    "sweep": zeta_sweep,
    "scaffolding": scaffolding,
    "scaffolding-conj": scaffolding_conjugate,
}


class UsageError(Exception):
    pass


def _open_out(path: str | None) -> contextlib.AbstractContextManager[TextIO]:
    if path is None or path == "-":
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="\n")


def _parse_line(text: str, lineno: int) -> DyckWord:
    try:
        return parse_word(text)
    except DyckError as exc:
        raise UsageError(f"line {lineno}: {exc}") from None


def _words(args) -> Iterator[DyckWord]:
    """Positional words and files are validated up front; stdin streams."""
    if args.words:
        parsed = [_parse_line(t, i) for i, t in enumerate(args.words, 1)]
        yield from parsed
        return
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            for i, line in enumerate(fh, 1):
                if line.strip():
                    _parse_line(line, i)
        source = open(args.file, encoding="utf-8")
    else:
        source = sys.stdin
    with contextlib.closing(source) if source is not sys.stdin else contextlib.nullcontext(source):
        for i, line in enumerate(source, 1):
            if line.strip():
                yield _parse_line(line, i)


def _emit(lines: Iterable[str], out: TextIO) -> None:
    for line in lines:
        out.write(line)
        out.write("\n")


def cmd_map(args) -> int:
    fn = ALGORITHMS[args.algorithm]
    with _open_out(args.out) as out:
        _emit((str(fn(w)) for w in _words(args)), out)
    return 0


def cmd_stats(args) -> int:
    with _open_out(args.out) as out:
        _emit((f"{w},{area(w)},{bounce(w)},{dinv(w)}" for w in _words(args)), out)
    return 0


def cmd_qtcatalan(args) -> int:
    poly = qt_catalan(args.n, args.mode.replace("-", "_"))
    with _open_out(args.out) as out:
        if args.format == "json":
            json.dump(poly.to_json(), out)
            out.write("\n")
        else:
            out.write(poly.to_text() + "\n")
    return 0


def cmd_trace(args) -> int:
    w = _parse_line(args.word, 1)
    variant = MapVariant(args.level_convention, args.queue_order, not args.no_peak_in_queue, args.spawn_timing)
    doc = trace_json(w, variant)
    with _open_out(args.out) as out:
        if args.format == "json":
            json.dump(doc, out, indent=2)
            out.write("\n")
        else:
            for s in doc["steps"]:
                out.write(
                    f"step {s['step']} level {s['level']}: queue {s['queue']} emit {s['emitted']} "
                    f"agents {s['agents_before']} -> {s['agents_after']} spawned {s['spawned']}\n"
                )
            out.write(f"output {doc['output']}\n")
    return 0


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad semilength range {text!r}; use N or LO..HI") from None


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.range)
    names = "all" if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        specs = harness.build_suite(lo, hi, names, engine=args.engine)
    except ValueError as exc:
        if isinstance(exc, SemilengthOutOfRange):
            raise
        raise UsageError(str(exc)) from None
    result = harness.run_suite(specs, args.workers)
    report_dir = args.report_dir or os.environ.get(REPORT_DIR_ENV, "reports")
    harness.write_reports(result, report_dir)
    for r in result.reports:
        status = "PASS" if r.passed else ("FAIL" if r.spec.must_pass else "INFO")
        line = f"{status} {r.spec.name} n={r.spec.n_lo}..{r.spec.n_hi} words={r.words_checked} mismatches={r.mismatches}"
        if r.first_counterexample:
            ce = r.first_counterexample
            line += f" first={ce['input']} expected={ce['expected']} actual={ce['actual']}"
        print(line)
        for n, table in r.details.items():
            for v in table:
                print(
                    f"  n={n} {v['label']}: valid={v['always_valid']} zeta={v['equals_zeta']} "
                    f"rc-zeta-rc={v['equals_rc_zeta_rc']} zeta_mismatches={v['zeta_mismatches']}"
                )
    print(f"reports written to {report_dir}")
    return result.exit_status


def cmd_dataset(args) -> int:
    with _open_out(args.out) as out:
        _emit(dataset.lines(args.n, args.map, args.format, args.workers), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyckzeta", description="Zeta maps, statistics and verification on Dyck paths.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_input(p):
        p.add_argument("words", nargs="*", help="Dyck words; read from --file or stdin when absent")
        p.add_argument("--file", help="file with one word per line")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("map", help="apply a zeta-map algorithm")
    p.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="sweep")
    word_input(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", help="CSV of word,area,bounce,dinv")
    word_input(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("qtcatalan", help="print C_n(q,t)")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=list(MODES) + [m.replace("_", "-") for m in MODES], default=MODES[0])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_qtcatalan)

    p = sub.add_parser("trace", help="trace the scaffolding map on one word")
    p.add_argument("word")
    p.add_argument("--level-convention", choices=[POST_STEP, PRE_STEP], default=POST_STEP)
    p.add_argument("--queue-order", choices=[DECREASING, INCREASING], default=DECREASING)
    p.add_argument("--no-peak-in-queue", action="store_true")
    p.add_argument("--spawn-timing", choices=[AFTER_UPDATE, BEFORE_UPDATE], default=AFTER_UPDATE)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="exhaustive verification suite")
    p.add_argument("range", help="semilength N or range LO..HI")
    p.add_argument("--checks", default="all", help="comma-separated: " + ", ".join(harness.CHECK_NAMES))
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--report-dir", help=f"report directory (default ${REPORT_DIR_ENV} or ./reports)")
    p.add_argument("--engine", choices=["numpy", "python"], default="numpy")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dataset", help="emit (w, zeta(w)) pairs")
    p.add_argument("n", type=int)
    p.add_argument("--map", choices=["sweep", "scaffolding"], default="sweep")
    p.add_argument("--format", choices=["csv", "tokens"], default="csv")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dataset)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, SemilengthOutOfRange, DyckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
