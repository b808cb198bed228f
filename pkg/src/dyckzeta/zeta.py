"""The classical zeta map: area-vector scan, sweep, and a table inverse."""

from __future__ import annotations

from typing import Sequence

from .dyck import DyckWord, area_sequence, levels, levels_raw, reverse, rev_complement
from .enumeration import catalan, check_semilength, enumerate_dyck
from .errors import DyckError, InternalInvariantViolation, NotInjective


def _as_dyck(bits: Sequence[int], source: str) -> DyckWord:
    try:
        return DyckWord(tuple(bits))
    except DyckError as exc:
        raise InternalInvariantViolation(f"{source} produced a non-Dyck word: {exc}") from exc


def area_scan(rows: Sequence[int]) -> tuple[int, ...]:
    """Scan an area sequence once per ``k = -1, 0, ..., max``.

    Pass ``k`` writes 0 for every entry equal to ``k`` and 1 for every entry
    equal to ``k + 1``, left to right.
    """
    out = []
    for k in range(-1, max(rows) + 1):
        for a in rows:
            if a == k:
                out.append(0)
            elif a == k + 1:
                out.append(1)
    return tuple(out)


def zeta_area_vector(w: DyckWord) -> DyckWord:
    """Zeta via the area-sequence scan.

    The rows are read off the end-to-end reflection ``rev_complement(w)``:
    this is the orientation in which the scan agrees with the sweep map
    (e.g. it sends 1110101100011000 to 1011010111001000).
    """
    return _as_dyck(area_scan(area_sequence(rev_complement(w))), "zeta_area_vector")


def sweep_with_levels(w: DyckWord) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sweep the reversed word; return the output and the level of each output symbol."""
    r = reverse(w)
    m = levels_raw(r)
    order = sorted(range(len(r)), key=lambda i: (-m[i], i))
    return tuple(r[i] for i in order), tuple(m[i] for i in order)


def zeta_sweep(w: DyckWord) -> DyckWord:
    """Reverse ``w``, then collect its symbols at levels 0, -1, -2, ... left to right."""
    return _as_dyck(sweep_with_levels(w)[0], "zeta_sweep")


def zeta_sweep_forward(w: DyckWord) -> DyckWord:
    """Same map read on ``w`` itself.

    Symbols are grouped by their pre-step height ``0, 1, 2, ...`` and each group
    is read right to left.
    """
    pre = (0,) + levels(w)[:-1]
    order = sorted(range(len(w)), key=lambda j: (pre[j], -j))
    return _as_dyck([w.bits[j] for j in order], "zeta_sweep_forward")


def inverse_zeta(n: int) -> dict[DyckWord, DyckWord]:
    """Table ``{zeta(w): w}`` over Dyck(n)."""
    check_semilength(n, 14)
    table: dict[DyckWord, DyckWord] = {}
    for w in enumerate_dyck(n):
        z = zeta_sweep(w)
        if z in table:
            raise NotInjective(table[z], w, z)
        table[z] = w
    if len(table) != catalan(n):
        raise InternalInvariantViolation(f"inverse table has {len(table)} entries, expected {catalan(n)}")
    return table
