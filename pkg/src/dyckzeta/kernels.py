"""Vectorized versions of the maps and statistics over packed word arrays.

Each function takes a 1-d array of packed words (see ``enumeration``) of a
single semilength ``n`` and works row-wise on a ``(words, 2n)`` bit matrix.
They mirror the scalar functions one for one and are checked against them.
"""

from __future__ import annotations

import numpy as np

from .statistics import AREA_BOUNCE, QTPolynomial


def unpack(words: np.ndarray, n: int) -> np.ndarray:
    shifts = np.arange(2 * n - 1, -1, -1, dtype=np.uint64)
    return ((words.astype(np.uint64)[:, None] >> shifts) & np.uint64(1)).astype(np.int8)


def pack(bits: np.ndarray) -> np.ndarray:
    size = bits.shape[1]
    weights = np.uint64(1) << np.arange(size - 1, -1, -1, dtype=np.uint64)
    return (bits.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)


def post_levels(bits: np.ndarray) -> np.ndarray:
    return np.cumsum(2 * bits.astype(np.int16) - 1, axis=1, dtype=np.int16)


def pre_levels(bits: np.ndarray) -> np.ndarray:
    post = post_levels(bits)
    return post - (2 * bits.astype(np.int16) - 1)


def _gather(bits: np.ndarray, key: np.ndarray) -> np.ndarray:
    order = np.argsort(key, axis=1, kind="stable")
    return np.take_along_axis(bits, order, axis=1)


def is_dyck(words: np.ndarray, n: int) -> np.ndarray:
    lv = post_levels(unpack(words, n))
    return (lv.min(axis=1) >= 0) & (lv[:, -1] == 0)


def rev_complement(words: np.ndarray, n: int) -> np.ndarray:
    return pack(1 - unpack(words, n)[:, ::-1])


def area_rows(bits: np.ndarray) -> np.ndarray:
    """Area sequences, shape ``(words, n)``: pre-step height at each up step."""
    m, size = bits.shape
    return pre_levels(bits)[bits == 1].reshape(m, size // 2)


def area_scan(rows: np.ndarray) -> np.ndarray:
    """Batch form of ``zeta.area_scan``.

    Row ``r`` with value ``a`` emits a 1 in pass ``a - 1`` and a 0 in pass
    ``a``; output is the emissions ordered by (pass, row).
    """
    m, n = rows.shape
    r = np.arange(n, dtype=np.int32)
    a = rows.astype(np.int32)
    keys = np.concatenate([a * n + r, (a + 1) * n + r], axis=1)
    syms = np.concatenate([np.ones((m, n), np.int8), np.zeros((m, n), np.int8)], axis=1)
    return _gather(syms, keys)


def zeta_area_vector(words: np.ndarray, n: int) -> np.ndarray:
    rc_bits = 1 - unpack(words, n)[:, ::-1]
    return pack(area_scan(area_rows(rc_bits)))


def zeta_sweep(words: np.ndarray, n: int) -> np.ndarray:
    bits = unpack(words, n)
    size = 2 * n
    # read on the original word: pre-step height ascending, position descending
    key = pre_levels(bits).astype(np.int32) * size + np.arange(size - 1, -1, -1, dtype=np.int32)
    return pack(_gather(bits, key))


def scaffolding_grouped(words: np.ndarray, n: int) -> np.ndarray:
    bits = unpack(words, n)
    size = 2 * n
    key = -post_levels(bits).astype(np.int32) * size + np.arange(size - 1, -1, -1, dtype=np.int32)
    return pack(_gather(bits, key))


def scaffolding_grouped_conjugate(words: np.ndarray, n: int) -> np.ndarray:
    return rev_complement(scaffolding_grouped(rev_complement(words, n), n), n)


def area(words: np.ndarray, n: int) -> np.ndarray:
    return area_rows(unpack(words, n)).sum(axis=1, dtype=np.int64)


def bounce(words: np.ndarray, n: int) -> np.ndarray:
    bits = unpack(words, n)
    m = bits.shape[0]
    ones = np.cumsum(bits, axis=1, dtype=np.int16)
    # number of up steps before each down step, shape (words, n)
    heights = ones[bits == 0].reshape(m, n).astype(np.int64)
    rows = np.arange(m)
    total = np.zeros(m, dtype=np.int64)
    j = heights[:, 0].copy()
    for _ in range(n):
        live = j < n
        if not live.any():
            break
        total += np.where(live, n - j, 0)
        j = np.where(live, heights[rows, np.minimum(j, n - 1)], j)
    return total


def dinv(words: np.ndarray, n: int) -> np.ndarray:
    a = area_rows(unpack(words, n)).astype(np.int16)
    d = a[:, :, None] - a[:, None, :]
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    return (((d == 0) | (d == 1)) & upper).sum(axis=(1, 2), dtype=np.int64)


STATISTICS = {"area": area, "bounce": bounce, "dinv": dinv}


def qt_partial(words: np.ndarray, n: int, mode: str) -> QTPolynomial:
    if mode == AREA_BOUNCE:
        qs, ts = area(words, n), bounce(words, n)
    else:
        qs, ts = dinv(words, n), area(words, n)
    pairs, counts = np.unique(np.stack([qs, ts], axis=1), axis=0, return_counts=True)
    return QTPolynomial([((int(i), int(j)), int(c)) for (i, j), c in zip(pairs, counts)])


MAPS = {
    "area-vector": zeta_area_vector,
    "sweep": zeta_sweep,
    "scaffolding-grouped": scaffolding_grouped,
    "scaffolding-grouped-conj": scaffolding_grouped_conjugate,
}
