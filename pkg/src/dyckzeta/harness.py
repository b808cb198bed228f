"""Exhaustive, chunked, parallel verification over Dyck(n).

A check walks every word of every semilength in its range. The enumeration is
split into contiguous chunks (``enumeration.plan_chunks``); each chunk yields
a count, a mismatch count and its smallest failing word, and chunk results
are merged in rank order. Nothing in a report except the timing depends on
how many workers ran.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .dyck import DyckWord, rev_complement
from .enumeration import Chunk, catalan, check_semilength, chunk_words, plan_chunks
from .errors import SemilengthOutOfRange
from .scaffolding import scaffolding, scaffolding_conjugate, scaffolding_grouped, variant_search
from .statistics import AREA_BOUNCE, DINV_AREA, QTPolynomial, area, bounce, dinv, qt_catalan
from .zeta import zeta_area_vector, zeta_sweep, zeta_sweep_forward

log = logging.getLogger(__name__)

MAP_EQUIVALENCE = "map_equivalence"
BIJECTION = "bijection"
STATISTIC_EXCHANGE = "statistic_exchange"
QT_TABLE = "qt_table"
QT_SYMMETRY = "qt_symmetry"
VARIANT_SEARCH = "variant_search"
KINDS = (MAP_EQUIVALENCE, BIJECTION, STATISTIC_EXCHANGE, QT_TABLE, QT_SYMMETRY, VARIANT_SEARCH)

MAX_MAP_SEMILENGTH = 14

MAPS: dict[str, Callable[[DyckWord], DyckWord]] = {
    "area-vector": zeta_area_vector,
    "sweep": zeta_sweep,
    "sweep-forward": zeta_sweep_forward,
    "scaffolding": scaffolding,
    "scaffolding-grouped": scaffolding_grouped,
    "scaffolding-conj": scaffolding_conjugate,
}

# C_n(q, t) for n <= 3 as exponent -> coefficient
QT_TABLE_SMALL = {
    1: {(0, 0): 1},
    2: {(1, 0): 1, (0, 1): 1},
    3: {(3, 0): 1, (2, 1): 1, (1, 1): 1, (1, 2): 1, (0, 3): 1},
}


@dataclass(frozen=True)
class CheckSpec:
    name: str
    kind: str
    n_lo: int
    n_hi: int
    params: dict = field(default_factory=dict)
    must_pass: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown check kind {self.kind!r}")
        hi = {VARIANT_SEARCH: 10}.get(self.kind, MAX_MAP_SEMILENGTH)
        lo = 2 if self.kind == VARIANT_SEARCH else 1
        check_semilength(self.n_lo, hi, lo)
        check_semilength(self.n_hi, hi, lo)
        if self.n_lo > self.n_hi:
            raise ValueError(f"empty range {self.n_lo}..{self.n_hi}")

    @property
    def n_range(self) -> range:
        return range(self.n_lo, self.n_hi + 1)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "n_range": [self.n_lo, self.n_hi],
            "parameters": dict(self.params),
            "must_pass": self.must_pass,
        }


@dataclass
class CheckReport:
    spec: CheckSpec
    words_checked: int
    mismatches: int
    first_counterexample: dict | None
    wall_time: float
    worker_count: int
    per_n: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.mismatches == 0

    def deterministic_dict(self) -> dict:
        """Everything except the scheduling-dependent fields."""
        return {
            "spec": self.spec.to_dict(),
            "words_checked": self.words_checked,
            "mismatches": self.mismatches,
            "first_counterexample": self.first_counterexample,
            "per_n": self.per_n,
            "details": self.details,
        }

    def to_dict(self) -> dict:
        d = self.deterministic_dict()
        d["wall_time"] = round(self.wall_time, 6)
        d["worker_count"] = self.worker_count
        return d


@dataclass
class ChunkResult:
    words: int = 0
    mismatches: int = 0
    first: tuple[int, str, str] | None = None  # (packed input, expected, actual)
    images: np.ndarray | None = None


def _render(v: int, n: int) -> str:
    return format(int(v), f"0{2 * n}b")


def _apply(name: str, words: np.ndarray, n: int, engine: str) -> list[str] | np.ndarray:
    if engine == "numpy" and name in kernels.MAPS:
        return kernels.MAPS[name](words, n)
    fn = MAPS[name]
    out = []
    for v in words.tolist():
        out.append(fn(DyckWord.from_int(v, n)).to_int())
    return np.asarray(out, dtype=np.uint64)


def _first_mismatch(words, expected, actual, fmt) -> ChunkResult:
    bad = np.flatnonzero(np.asarray(expected != actual).reshape(len(words), -1).any(axis=1))
    res = ChunkResult(len(words), int(bad.size))
    if bad.size:
        k = int(bad[0])
        res.first = (int(words[k]), fmt(expected[k]), fmt(actual[k]))
    return res


def _stat_exchange(words: np.ndarray, n: int, form: str, engine: str):
    z = _apply("sweep", words, n, engine)
    if engine == "numpy":
        a, b, d = kernels.area, kernels.bounce, kernels.dinv
        rc = kernels.rev_complement
    else:
        def lift(f):
            return lambda arr, n: np.asarray([f(DyckWord.from_int(v, n)) for v in arr.tolist()], dtype=np.int64)

        a, b, d = lift(area), lift(bounce), lift(dinv)
        rc = lambda arr, n: np.asarray(
            [rev_complement(DyckWord.from_int(v, n)).to_int() for v in arr.tolist()], dtype=np.uint64
        )
    if form == "stated":
        # (area, bounce)(w) = (dinv, area)(zeta w)
        expected = np.stack([a(words, n), b(words, n)], axis=1)
        actual = np.stack([d(z, n), a(z, n)], axis=1)
    elif form == "haglund":
        # (dinv(rc w), area(w)) = (area, bounce)(zeta w)
        expected = np.stack([d(rc(words, n), n), a(words, n)], axis=1)
        actual = np.stack([a(z, n), b(z, n)], axis=1)
    else:
        raise ValueError(f"unknown statistic exchange form {form!r}")
    return expected, actual


def evaluate_chunk(kind: str, params: dict, chunk: Chunk) -> ChunkResult:
    """Per-chunk work unit; module level so worker processes can import it."""
    n = chunk.n
    words = chunk_words(chunk)
    engine = params.get("engine", "numpy")
    fmt = lambda v: _render(v, n)
    if kind == MAP_EQUIVALENCE:
        expected = _apply(params["right"], words, n, engine)
        actual = _apply(params["left"], words, n, engine)
        return _first_mismatch(words, expected, actual, fmt)
    if kind == BIJECTION:
        images = _apply(params.get("map", "sweep"), words, n, engine)
        valid = kernels.is_dyck(images, n)
        res = ChunkResult(len(words), int((~valid).sum()), images=images)
        if res.mismatches:
            k = int(np.flatnonzero(~valid)[0])
            res.first = (int(words[k]), "a Dyck word", fmt(images[k]))
        return res
    if kind == STATISTIC_EXCHANGE:
        expected, actual = _stat_exchange(words, n, params.get("form", "haglund"), engine)
        return _first_mismatch(words, expected, actual, lambda row: ",".join(str(int(x)) for x in row))
    raise ValueError(f"{kind} is not a per-word check")


def _merge(results: Sequence[ChunkResult]) -> ChunkResult:
    total = ChunkResult()
    for r in results:  # chunks arrive in rank order
        total.words += r.words
        total.mismatches += r.mismatches
        if total.first is None and r.first is not None:
            total.first = r.first
    return total


def _bijection_collisions(words: np.ndarray, images: np.ndarray, n: int) -> tuple[int, tuple | None]:
    """Count inputs whose image repeats an earlier (smaller) input's image."""
    order = np.argsort(images, kind="stable")
    srt = images[order]
    dup = np.zeros(len(images), dtype=bool)
    dup[order[1:][srt[1:] == srt[:-1]]] = True
    if not dup.any():
        # inverse table round trip: image -> input -> image
        inverse = dict(zip(images.tolist(), words.tolist()))
        assert all(inverse[i] == w for w, i in zip(words.tolist(), images.tolist()))
        return 0, None
    k = int(np.flatnonzero(dup)[0])
    other = int(words[np.flatnonzero(images == images[k])[0]])
    return int(dup.sum()), (int(words[k]), f"image distinct from that of {_render(other, n)}", _render(images[k], n))


def _per_word(spec: CheckSpec, n: int, workers: int, executor: Executor | None) -> dict:
    chunks = plan_chunks(n, max(1, workers) * 4)
    if executor is not None and len(chunks) > 1:
        results = list(executor.map(evaluate_chunk, [spec.kind] * len(chunks), [spec.params] * len(chunks), chunks))
    else:
        results = [evaluate_chunk(spec.kind, spec.params, c) for c in chunks]
    merged = _merge(results)
    if spec.kind == BIJECTION:
        words = np.concatenate([chunk_words(c) for c in chunks])
        images = np.concatenate([r.images for r in results])
        dups, first = _bijection_collisions(words, images, n)
        merged.mismatches += dups
        candidates = [c for c in (merged.first, first) if c is not None]
        merged.first = min(candidates, key=lambda c: c[0]) if candidates else None
        merged_distinct = int(np.unique(images).size)
    if merged.words != catalan(n):
        raise AssertionError(f"chunking covered {merged.words} words, expected {catalan(n)}")
    row = {
        "n": n,
        "words": merged.words,
        "mismatches": merged.mismatches,
        "first_counterexample": None
        if merged.first is None
        else {"input": _render(merged.first[0], n), "expected": merged.first[1], "actual": merged.first[2]},
    }
    if spec.kind == BIJECTION:
        row["distinct_images"] = merged_distinct
    return row


def _qt(spec: CheckSpec, n: int) -> dict:
    ab = qt_catalan(n, AREA_BOUNCE)
    da = qt_catalan(n, DINV_AREA)
    row = {"n": n, "words": catalan(n), "polynomial": ab.to_text()}
    if spec.kind == QT_TABLE:
        bad = ab.diff(da)
        expected = ab
        if n in QT_TABLE_SMALL:
            expected = QTPolynomial(QT_TABLE_SMALL[n])
            bad = sorted(set(bad) | set(ab.diff(expected)) | set(da.diff(expected)))
        row["mismatches"] = len(bad)
        row["first_counterexample"] = (
            None
            if not bad
            else {"input": f"q^{bad[0][0]}*t^{bad[0][1]}", "expected": expected.to_text(), "actual": da.to_text()}
        )
    else:
        bad = ab.diff(ab.swap())
        if ab.mass() != catalan(n):
            bad.append((-1, -1))
        row["mismatches"] = len(bad)
        row["first_counterexample"] = (
            None if not bad else {"input": f"q^{bad[0][0]}*t^{bad[0][1]}", "expected": "symmetric", "actual": ab.to_text()}
        )
    return row


def _variants(spec: CheckSpec, n: int) -> tuple[dict, list[dict]]:
    results = variant_search(n)
    table = [r.to_dict() for r in results]
    default = next(r for r in results if r.variant.is_default)
    mismatches = default.words - default.matches_conjugated_zeta + default.words - default.valid
    first = default.first_conjugated_mismatch
    row = {
        "n": n,
        "words": default.words,
        "mismatches": mismatches,
        "first_counterexample": None
        if first is None
        else {"input": first[0], "expected": first[1], "actual": first[2]},
    }
    return row, table


def run_check(spec: CheckSpec, workers: int = 1, executor: Executor | None = None) -> CheckReport:
    """Run one check over its semilength range."""
    if workers < 1:
        raise ValueError("workers must be positive")
    started = time.perf_counter()
    own = None
    if executor is None and workers > 1 and spec.kind in (MAP_EQUIVALENCE, BIJECTION, STATISTIC_EXCHANGE):
        executor = own = ProcessPoolExecutor(max_workers=workers)
    rows = []
    details: dict = {}
    try:
        for n in spec.n_range:
            if spec.kind in (QT_TABLE, QT_SYMMETRY):
                rows.append(_qt(spec, n))
            elif spec.kind == VARIANT_SEARCH:
                row, table = _variants(spec, n)
                rows.append(row)
                details[str(n)] = table
            else:
                rows.append(_per_word(spec, n, workers, executor))
            log.debug("%s n=%d: %s", spec.name, n, rows[-1])
    finally:
        if own is not None:
            own.shutdown()
    first = next((r["first_counterexample"] for r in rows if r["first_counterexample"]), None)
    return CheckReport(
        spec=spec,
        words_checked=sum(r["words"] for r in rows),
        mismatches=sum(r["mismatches"] for r in rows),
        first_counterexample=first,
        wall_time=time.perf_counter() - started,
        worker_count=workers,
        per_n=rows,
        details=details,
    )


CHECK_NAMES = (
    "classical-equivalence",
    "bijection",
    "statistic-exchange",
    "statistic-exchange-stated",
    "qt-table",
    "qt-symmetry",
    "scaffolding-grouped",
    "scaffolding-conjugate",
    "scaffolding-direct",
    "variant-search",
)


def build_spec(name: str, n_lo: int, n_hi: int, engine: str = "numpy") -> CheckSpec | None:
    """The named check over ``n_lo..n_hi``; None when its range clips to nothing."""
    if name == "classical-equivalence":
        return CheckSpec(name, MAP_EQUIVALENCE, n_lo, n_hi, {"left": "area-vector", "right": "sweep", "engine": engine})
    if name == "bijection":
        return CheckSpec(name, BIJECTION, n_lo, n_hi, {"map": "sweep", "engine": engine})
    if name == "statistic-exchange":
        return CheckSpec(name, STATISTIC_EXCHANGE, n_lo, n_hi, {"form": "haglund", "engine": engine})
    if name == "statistic-exchange-stated":
        return CheckSpec(name, STATISTIC_EXCHANGE, n_lo, n_hi, {"form": "stated", "engine": engine}, must_pass=False)
    if name == "qt-table":
        return CheckSpec(name, QT_TABLE, n_lo, n_hi)
    if name == "qt-symmetry":
        return CheckSpec(name, QT_SYMMETRY, n_lo, n_hi)
    if name == "scaffolding-grouped":
        return CheckSpec(name, MAP_EQUIVALENCE, n_lo, n_hi, {"left": "scaffolding", "right": "scaffolding-grouped"})
    if name == "scaffolding-conjugate":
        return CheckSpec(name, MAP_EQUIVALENCE, n_lo, n_hi, {"left": "scaffolding-conj", "right": "sweep"})
    if name == "scaffolding-direct":
        return CheckSpec(name, MAP_EQUIVALENCE, n_lo, n_hi, {"left": "scaffolding", "right": "sweep"}, must_pass=False)
    if name == "variant-search":
        lo, hi = max(n_lo, 2), min(n_hi, 10)
        return CheckSpec(name, VARIANT_SEARCH, lo, hi) if lo <= hi else None
    raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}")


def build_suite(n_lo: int, n_hi: int, names: Sequence[str] | str = "all", engine: str = "numpy") -> list[CheckSpec]:
    for n in (n_lo, n_hi):
        check_semilength(n, MAX_MAP_SEMILENGTH)
    if names == "all" or names == ["all"]:
        names = CHECK_NAMES
    specs = [build_spec(name, n_lo, n_hi, engine) for name in names]
    return [s for s in specs if s is not None]


@dataclass
class SuiteResult:
    reports: list[CheckReport]

    @property
    def failed(self) -> list[CheckReport]:
        return [r for r in self.reports if r.spec.must_pass and not r.passed]

    @property
    def exit_status(self) -> int:
        return 1 if self.failed else 0


def run_suite(specs: Sequence[CheckSpec], workers: int = 1) -> SuiteResult:
    if not specs:
        raise ValueError("empty check list")
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        reports = [run_check(s, workers, executor) for s in specs]
    finally:
        if executor is not None:
            executor.shutdown()
    return SuiteResult(reports)


def write_reports(result: SuiteResult, directory: str | os.PathLike) -> Path:
    """One JSON file per check plus ``summary.csv``; returns the directory."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    for report in result.reports:
        with open(out / f"{report.spec.name}.json", "w", encoding="utf-8", newline="\n") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
    with open(out / "summary.csv", "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["name", "n", "words", "mismatches", "first_counterexample", "seconds"])
        for r in result.reports:
            ce = r.first_counterexample
            writer.writerow(
                [
                    r.spec.name,
                    f"{r.spec.n_lo}..{r.spec.n_hi}" if r.spec.n_lo != r.spec.n_hi else r.spec.n_lo,
                    r.words_checked,
                    r.mismatches,
                    "" if ce is None else f"{ce['input']}->{ce['actual']} (expected {ce['expected']})",
                    f"{r.wall_time:.3f}",
                ]
            )
    return out


__all__ = [
    "CheckSpec",
    "CheckReport",
    "SuiteResult",
    "SemilengthOutOfRange",
    "build_spec",
    "build_suite",
    "run_check",
    "run_suite",
    "write_reports",
]
