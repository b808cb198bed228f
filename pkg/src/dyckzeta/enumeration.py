"""Lexicographic enumeration of Dyck(n) and its partition into contiguous chunks.

Words are packed into integers with step 1 in the most significant of ``2n``
bits, so lexicographic order on the bit string ('0' < '1') is numeric order.
A chunk is a run of consecutive prefixes of a fixed length; the completions
of consecutive prefixes are consecutive in the global order, which is what
makes per-chunk results mergeable in a scheduling-independent way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .dyck import DyckWord
from .errors import SemilengthOutOfRange

MAX_SEMILENGTH = 16


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.comb(2 * n, n) // (n + 1)


def check_semilength(n, hi: int = MAX_SEMILENGTH, lo: int = 1) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not lo <= n <= hi:
        raise SemilengthOutOfRange(n, lo, hi)
    return n


@lru_cache(maxsize=None)
def completions(length: int, height: int) -> int:
    """Number of +-1 walks of ``length`` steps from ``height`` to 0 staying >= 0."""
    if height < 0 or height > length or (length - height) % 2:
        return 0
    downs = (length + height) // 2
    return math.comb(length, downs) - math.comb(length, downs + 1)


@dataclass(frozen=True)
class Chunk:
    n: int
    index: int
    start: int  # global rank of the first word (0-based)
    stop: int
    prefix_len: int
    prefixes: tuple[int, ...]

    def __len__(self) -> int:
        return self.stop - self.start


def _prefixes(n: int, length: int) -> list[tuple[int, int]]:
    """All Dyck prefixes of ``length`` steps as ``(value, height)``, lex order."""
    out = [(0, 0)]
    for k in range(length):
        rest = 2 * n - k - 1
        nxt = []
        for v, h in out:
            if h > 0:
                nxt.append((v << 1, h - 1))
            if h + 1 <= rest:
                nxt.append(((v << 1) | 1, h + 1))
        out = nxt
    return out


def plan_chunks(n: int, pieces: int) -> list[Chunk]:
    """Split Dyck(n) into at most ``pieces`` contiguous, nearly equal chunks."""
    check_semilength(n)
    pieces = max(1, pieces)
    total = catalan(n)
    length = 0
    prefixes = _prefixes(n, 0)
    while length < 2 * n and len(prefixes) < 4 * pieces:
        length += 1
        prefixes = _prefixes(n, length)
    sizes = [completions(2 * n - length, h) for _, h in prefixes]
    target = total / pieces
    chunks = []
    group: list[int] = []
    start = acc = 0
    for (v, _), size in zip(prefixes, sizes):
        group.append(v)
        acc += size
        if acc - start >= target * 0.999 and len(chunks) < pieces - 1:
            chunks.append(Chunk(n, len(chunks), start, acc, length, tuple(group)))
            group, start = [], acc
    if group:
        chunks.append(Chunk(n, len(chunks), start, acc, length, tuple(group)))
    return chunks


def chunk_words(chunk: Chunk) -> np.ndarray:
    """Packed words of a chunk, ascending, as ``uint64``."""
    n, p = chunk.n, chunk.prefix_len
    vals = np.asarray(chunk.prefixes, dtype=np.uint64)
    hts = np.array([bin(v).count("1") * 2 - p for v in chunk.prefixes], dtype=np.int64)
    for k in range(p, 2 * n):
        rest = 2 * n - k - 1
        down = hts > 0
        up = hts + 1 <= rest
        vals = np.concatenate([vals[down] << np.uint64(1), (vals[up] << np.uint64(1)) | np.uint64(1)])
        hts = np.concatenate([hts[down] - 1, hts[up] + 1])
    vals.sort()
    return vals


def word_array(n: int) -> np.ndarray:
    """All of Dyck(n) packed, in lexicographic order."""
    return chunk_words(plan_chunks(n, 1)[0])


def enumerate_dyck(n: int, max_n: int = MAX_SEMILENGTH) -> Iterator[DyckWord]:
    """Yield every Dyck word of semilength ``n`` once, lexicographically."""
    check_semilength(n, max_n)
    for chunk in plan_chunks(n, max(1, catalan(n) // 50_000)):
        for v in chunk_words(chunk).tolist():
            yield DyckWord.from_int(v, n)


def unrank(n: int, rank: int) -> DyckWord:
    """The word at 0-based position ``rank`` of the lexicographic order."""
    check_semilength(n)
    if not 0 <= rank < catalan(n):
        raise IndexError(rank)
    bits = []
    h = 0
    for k in range(2 * n):
        rest = 2 * n - k - 1
        below = completions(rest, h - 1) if h > 0 else 0
        if rank < below:
            bits.append(0)
            h -= 1
        else:
            rank -= below
            bits.append(1)
            h += 1
    return DyckWord(tuple(bits))
