"""The scaffolding map: agents walking outward from peaks, emitting level by level.

Peaks seed agents; an agent on a down step walks right through its run of
down steps, an agent on an up step walks left through its run of up steps.
Every iteration emits the symbols under the current agents and the peaks of
the current level (largest position first), moves the agents, spawns new
agents beside those peaks and drops one level.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .dyck import DyckWord, PeakSet, levels, render, rev_complement, right_steps
from .enumeration import check_semilength, enumerate_dyck
from .errors import DuplicateAgent, DyckError, InternalInvariantViolation, NonTermination
from .zeta import _as_dyck, zeta_sweep

POST_STEP, PRE_STEP = "post_step", "pre_step"
DECREASING, INCREASING = "decreasing", "increasing"
AFTER_UPDATE, BEFORE_UPDATE = "after_update", "before_update"


@dataclass(frozen=True)
class MapVariant:
    """Knobs covering the readings of the procedure that the description leaves open."""

    level_convention: str = POST_STEP
    queue_order: str = DECREASING
    peak_in_queue: bool = True
    spawn_timing: str = AFTER_UPDATE

    def __post_init__(self):
        if self.level_convention not in (POST_STEP, PRE_STEP):
            raise ValueError(f"level_convention: {self.level_convention!r}")
        if self.queue_order not in (DECREASING, INCREASING):
            raise ValueError(f"queue_order: {self.queue_order!r}")
        if self.spawn_timing not in (AFTER_UPDATE, BEFORE_UPDATE):
            raise ValueError(f"spawn_timing: {self.spawn_timing!r}")

    @property
    def is_default(self) -> bool:
        return self == DEFAULT_VARIANT

    def label(self) -> str:
        return "/".join(
            [self.level_convention, self.queue_order, "peaks" if self.peak_in_queue else "no-peaks", self.spawn_timing]
        )

    def to_dict(self) -> dict:
        return asdict(self)


DEFAULT_VARIANT = MapVariant()


def all_variants() -> list[MapVariant]:
    return [
        MapVariant(lc, qo, pq, st)
        for lc, qo, pq, st in itertools.product(
            (POST_STEP, PRE_STEP), (DECREASING, INCREASING), (True, False), (AFTER_UPDATE, BEFORE_UPDATE)
        )
    ]


@dataclass
class ScaffoldState:
    word: DyckWord
    peaks: PeakSet
    right_steps: frozenset[int]
    current_level: int
    agents: list[int] = field(default_factory=list)
    out: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class TraceRecord:
    step: int
    current_level: int
    queue: tuple[int, ...]
    emitted: str
    agents_before: tuple[int, ...]
    agents_after: tuple[int, ...]
    spawned: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "level": self.current_level,
            "queue": list(self.queue),
            "emitted": self.emitted,
            "agents_before": list(self.agents_before),
            "agents_after": list(self.agents_after),
            "spawned": list(self.spawned),
        }


def _peak_set(w: DyckWord, convention: str) -> PeakSet:
    hts = levels(w)
    shift = 1 if convention == PRE_STEP else 0
    grouped: dict[int, list[int]] = {}
    for i in range(1, len(w)):
        if w.bits[i - 1] == 1 and w.bits[i] == 0:
            grouped.setdefault(hts[i - 1] - shift, []).append(i)
    by_level = {c: tuple(ps) for c, ps in sorted(grouped.items(), reverse=True)}
    return PeakSet(by_level, max(by_level))


def initial_state(w: DyckWord, variant: MapVariant = DEFAULT_VARIANT) -> ScaffoldState:
    pk = _peak_set(w, variant.level_convention)
    return ScaffoldState(w, pk, right_steps(w), pk.max_level)


def _move(agents: list[int], R: frozenset[int], size: int) -> list[int]:
    # moves are computed from the snapshot, removals fall out by omission
    moved = []
    for i in agents:
        if i in R:
            if i + 1 <= size and i + 1 in R:
                moved.append(i + 1)
        elif i - 1 >= 1 and i - 1 not in R:
            moved.append(i - 1)
    return moved


def _insert(agents: list[int], new: Iterable[int], step: int) -> list[int]:
    seen = set(agents)
    out = list(agents)
    for p in new:
        if p in seen:
            raise DuplicateAgent(p, step)
        seen.add(p)
        out.append(p)
    return sorted(out)


def _spawn(peak_positions: Iterable[int], R: frozenset[int], size: int) -> list[int]:
    out = []
    for j in peak_positions:
        if j + 1 <= size and j + 1 in R:
            out.append(j + 1)
        if j - 1 >= 1 and j - 1 not in R:
            out.append(j - 1)
    return out


def advance(state: ScaffoldState, variant: MapVariant, step: int) -> TraceRecord:
    """Run one iteration in place and describe it."""
    size = len(state.word)
    R = state.right_steps
    here = state.peaks.at(state.current_level)
    before = tuple(state.agents)

    queue = list(state.agents)
    if variant.peak_in_queue:
        queue = _insert(queue, here, step)
    queue.sort(reverse=variant.queue_order == DECREASING)
    emitted = [state.word[i] for i in queue]
    state.out.extend(emitted)

    spawned = _spawn(here, R, size)
    if variant.spawn_timing == BEFORE_UPDATE:
        state.agents = sorted(_move(_insert(state.agents, spawned, step), R, size))
    else:
        state.agents = _insert(_move(state.agents, R, size), spawned, step)
    record = TraceRecord(
        step, state.current_level, tuple(queue), render(emitted), before, tuple(state.agents), tuple(spawned)
    )
    state.current_level -= 1
    return record


def run(w: DyckWord, variant: MapVariant = DEFAULT_VARIANT) -> tuple[tuple[int, ...], list[TraceRecord]]:
    """Raw output (unvalidated) and the per-iteration trace."""
    state = initial_state(w, variant)
    limit = len(w) + 1
    records = []
    while len(state.out) < len(w):
        if len(records) == limit:
            raise NonTermination(limit)
        records.append(advance(state, variant, len(records) + 1))
    return tuple(state.out), records


def scaffolding(w: DyckWord, variant: MapVariant = DEFAULT_VARIANT) -> DyckWord:
    return _as_dyck(run(w, variant)[0], "scaffolding")


def trace_scaffolding(w: DyckWord, variant: MapVariant = DEFAULT_VARIANT) -> list[TraceRecord]:
    out, records = run(w, variant)
    _as_dyck(out, "scaffolding")
    return records


def trace_json(w: DyckWord, variant: MapVariant = DEFAULT_VARIANT) -> dict:
    records = trace_scaffolding(w, variant)
    return {
        "input": str(w),
        "variant": variant.to_dict(),
        "steps": [r.to_dict() for r in records],
        "output": "".join(r.emitted for r in records),
    }


def scaffolding_grouped(w: DyckWord) -> DyckWord:
    """Closed form: symbols grouped by post-step height, top level first, each group right to left."""
    hts = levels(w)
    order = sorted(range(len(w)), key=lambda j: (-hts[j], -j))
    return _as_dyck([w.bits[j] for j in order], "scaffolding_grouped")


def scaffolding_conjugate(w: DyckWord) -> DyckWord:
    """``rc . scaffolding . rc``, which coincides with the sweep zeta map."""
    return rev_complement(scaffolding(rev_complement(w)))


@dataclass
class VariantResult:
    variant: MapVariant
    words: int = 0
    valid: int = 0
    errors: int = 0
    matches_zeta: int = 0
    matches_conjugated_zeta: int = 0
    first_invalid: tuple[str, str] | None = None
    first_zeta_mismatch: tuple[str, str, str] | None = None
    first_conjugated_mismatch: tuple[str, str, str] | None = None

    @property
    def always_valid(self) -> bool:
        return self.valid == self.words

    @property
    def equals_zeta(self) -> bool:
        return self.matches_zeta == self.words

    @property
    def equals_conjugated_zeta(self) -> bool:
        return self.matches_conjugated_zeta == self.words

    def to_dict(self) -> dict:
        return {
            "variant": self.variant.to_dict(),
            "label": self.variant.label(),
            "words": self.words,
            "always_valid": self.always_valid,
            "equals_zeta": self.equals_zeta,
            "equals_rc_zeta_rc": self.equals_conjugated_zeta,
            "invalid_or_error": self.words - self.valid,
            "zeta_mismatches": self.words - self.matches_zeta,
            "rc_zeta_rc_mismatches": self.words - self.matches_conjugated_zeta,
            "first_invalid": self.first_invalid,
            "first_zeta_mismatch": self.first_zeta_mismatch,
            "first_rc_zeta_rc_mismatch": self.first_conjugated_mismatch,
        }


def variant_search(n: int, variants: Iterable[MapVariant] | None = None) -> list[VariantResult]:
    """Run every variant over Dyck(n) and compare against zeta and rc . zeta . rc."""
    check_semilength(n, 10, lo=2)
    words = list(enumerate_dyck(n))
    zetas = [zeta_sweep(w) for w in words]
    conj = [rev_complement(zeta_sweep(rev_complement(w))) for w in words]
    results = []
    for variant in variants if variants is not None else all_variants():
        res = VariantResult(variant)
        for w, z, c in zip(words, zetas, conj):
            res.words += 1
            try:
                raw, _ = run(w, variant)
                out = DyckWord(raw)
            except (InternalInvariantViolation, DyckError) as exc:
                res.errors += not isinstance(exc, DyckError)
                if res.first_invalid is None:
                    res.first_invalid = (str(w), f"{type(exc).__name__}: {exc}")
                got = f"<{type(exc).__name__}>"
            else:
                res.valid += 1
                got = str(out)
            if got == str(z):
                res.matches_zeta += 1
            elif res.first_zeta_mismatch is None:
                res.first_zeta_mismatch = (str(w), str(z), got)
            if got == str(c):
                res.matches_conjugated_zeta += 1
            elif res.first_conjugated_mismatch is None:
                res.first_conjugated_mismatch = (str(w), str(c), got)
        results.append(res)
    return results
