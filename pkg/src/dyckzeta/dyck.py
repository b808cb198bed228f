"""Dyck words and the structures derived from them.

Conventions used throughout the package:

* step ``1`` is a north (up) step and ``0`` is an east (down) step;
* positions are 1-based at every public interface;
* ``levels(w)[i - 1]`` is the height *after* step ``i`` (the height before
  step 1 is the implicit 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BelowDiagonal, DyckError, NonBinaryAlphabet, NotBalanced

_ALIASES = {"1": 1, "0": 0, "N": 1, "E": 0, "U": 1, "D": 0}


def _check_bits(bits: Sequence[int]) -> None:
    if not bits:
        raise DyckError("empty word")
    height = 0
    for offset, b in enumerate(bits, start=1):
        height += 1 if b else -1
        if height < 0:
            raise BelowDiagonal(offset)
    if height != 0:
        ups = sum(bits)
        raise NotBalanced(ups, len(bits) - ups)


@dataclass(frozen=True, slots=True)
class DyckWord:
    """A validated balanced word over {0, 1} with nonnegative prefix sums."""

    bits: tuple[int, ...]
    semilength: int = field(init=False, compare=False)

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            bad = next(i for i, b in enumerate(bits, 1) if b not in (0, 1))
            raise NonBinaryAlphabet(str(bits[bad - 1]), bad)
        _check_bits(bits)
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "semilength", len(bits) // 2)

    @classmethod
    def from_int(cls, value: int, n: int) -> DyckWord:
        """Decode a ``2n``-bit integer whose most significant bit is step 1."""
        size = 2 * n
        return cls(tuple((value >> (size - 1 - k)) & 1 for k in range(size)))

    def to_int(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, position: int) -> int:
        """1-based access, ``w[i]`` is ``w_i``."""
        if not 1 <= position <= len(self.bits):
            raise IndexError(position)
        return self.bits[position - 1]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def __repr__(self) -> str:
        return f"DyckWord('{self}')"

    def __lt__(self, other: DyckWord) -> bool:
        return self.bits < other.bits


def parse_word(text: str) -> DyckWord:
    """Parse ``text`` into a DyckWord.

    Accepts ``1``/``0`` plus the aliases ``N``/``E`` and ``U``/``D`` in either
    case. Offsets in the raised errors are 1-based character positions.
    """
    bits = []
    for offset, ch in enumerate(text.strip(), start=1):
        try:
            bits.append(_ALIASES[ch.upper()])
        except KeyError:
            raise NonBinaryAlphabet(ch, offset) from None
    return DyckWord(tuple(bits))


def render(bits: Iterable[int]) -> str:
    return "".join("1" if b else "0" for b in bits)


def levels_raw(bits: Iterable[int]) -> tuple[int, ...]:
    """Running height after each step of an arbitrary binary sequence."""
    out = []
    h = 0
    for b in bits:
        h += 1 if b else -1
        out.append(h)
    return tuple(out)


def levels(w: DyckWord) -> tuple[int, ...]:
    return levels_raw(w.bits)


def area_sequence(w: DyckWord) -> tuple[int, ...]:
    """Row lengths ``a_1..a_n`` counted from the bottom row.

    ``a_i`` is the number of whole cells between the path and the diagonal in
    row ``i``, which equals the height just before the ``i``-th up step.
    """
    rows = []
    h = 0
    for b in w.bits:
        if b:
            rows.append(h)
            h += 1
        else:
            h -= 1
    return tuple(rows)


@dataclass(frozen=True)
class PeakSet:
    by_level: dict[int, tuple[int, ...]]
    max_level: int

    def at(self, level: int) -> tuple[int, ...]:
        return self.by_level.get(level, ())

    def positions(self) -> list[int]:
        return sorted(p for ps in self.by_level.values() for p in ps)


def peaks(w: DyckWord) -> PeakSet:
    """Group the peak positions ``i`` (``w_i w_{i+1} = 10``) by their height."""
    bits = w.bits
    hts = levels(w)
    grouped: dict[int, list[int]] = {}
    for i in range(1, len(bits)):
        if bits[i - 1] == 1 and bits[i] == 0:
            grouped.setdefault(hts[i - 1], []).append(i)
    by_level = {c: tuple(ps) for c, ps in sorted(grouped.items(), reverse=True)}
    return PeakSet(by_level, max(by_level))


def right_steps(w: DyckWord) -> frozenset[int]:
    return frozenset(i for i, b in enumerate(w.bits, start=1) if b == 0)


def reverse(w: DyckWord) -> tuple[int, ...]:
    """The reversed step sequence; not a Dyck word in general."""
    return w.bits[::-1]


def rev_complement(w: DyckWord) -> DyckWord:
    """Reflect the path end to end: ``rc(w)_i = 1 - w_{2n+1-i}``."""
    return DyckWord(tuple(1 - b for b in reversed(w.bits)))
