"""(w, zeta(w)) pairs for sequence-to-sequence training data."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

import numpy as np

from . import kernels
from .dyck import DyckWord
from .enumeration import Chunk, catalan, check_semilength, chunk_words, plan_chunks
from .scaffolding import scaffolding_conjugate

VOCABULARY = ("0", "1", "bos", "eos")
DATASET_MAX_SEMILENGTH = 14


def to_tokens(word: str) -> str:
    return " ".join(["bos", *word, "eos"])


def from_tokens(text: str) -> DyckWord:
    tokens = text.split()
    if len(tokens) < 2 or tokens[0] != "bos" or tokens[-1] != "eos":
        raise ValueError(f"token sequence must be framed by bos/eos: {text!r}")
    body = tokens[1:-1]
    unknown = [t for t in body if t not in ("0", "1")]
    if unknown:
        raise ValueError(f"unexpected tokens {unknown}")
    return DyckWord(tuple(int(t) for t in body))


def parse_token_pair(line: str) -> tuple[DyckWord, DyckWord]:
    source, sep, target = line.rstrip("\n").partition("\t")
    if not sep:
        raise ValueError("expected a tab between source and target")
    return from_tokens(source), from_tokens(target)


def _chunk_pairs(chunk: Chunk, map_name: str) -> list[tuple[str, str]]:
    n = chunk.n
    words = chunk_words(chunk)
    if map_name == "sweep":
        images = kernels.zeta_sweep(words, n)
    elif map_name == "scaffolding":
        images = np.asarray(
            [scaffolding_conjugate(DyckWord.from_int(v, n)).to_int() for v in words.tolist()], dtype=np.uint64
        )
    else:
        raise ValueError(f"unknown map {map_name!r}")
    fmt = f"0{2 * n}b"
    return [(format(w, fmt), format(z, fmt)) for w, z in zip(words.tolist(), images.tolist())]


def pairs(n: int, map_name: str = "sweep", workers: int = 1) -> Iterator[tuple[str, str]]:
    """``(w, zeta(w))`` as strings, in enumeration order."""
    check_semilength(n, DATASET_MAX_SEMILENGTH)
    chunks = plan_chunks(n, max(workers * 4, catalan(n) // 100_000, 1))
    if workers > 1 and n >= 12:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(_chunk_pairs, chunks, [map_name] * len(chunks)):
                yield from batch
    else:
        for chunk in chunks:
            yield from _chunk_pairs(chunk, map_name)


def lines(n: int, map_name: str = "sweep", fmt: str = "csv", workers: int = 1) -> Iterator[str]:
    for w, z in pairs(n, map_name, workers):
        if fmt == "csv":
            yield f"{w},{z}"
        elif fmt == "tokens":
            yield f"{to_tokens(w)}\t{to_tokens(z)}"
        else:
            raise ValueError(f"unknown format {fmt!r}")
