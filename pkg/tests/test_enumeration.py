import numpy as np
import pytest

from dyckzeta import SemilengthOutOfRange, catalan, enumerate_dyck, unrank
from dyckzeta.enumeration import chunk_words, plan_chunks, word_array

from oracles import brute_force_dyck

FOOTNOTE_SIZES = {11: 58786, 12: 208012, 13: 742900, 14: 2674440, 15: 9694845, 16: 35357670}


@pytest.mark.parametrize("n,value", [(0, 1), (1, 1), (3, 5), (11, 58786), (16, 35357670)])
def test_catalan(n, value):
    assert catalan(n) == value


def test_catalan_matches_footnote():
    for n, size in FOOTNOTE_SIZES.items():
        assert catalan(n) == size


def test_order_matches_brute_force():
    for n in range(1, 7):
        assert [str(w) for w in enumerate_dyck(n)] == brute_force_dyck(n)


def test_small_cases():
    assert [str(w) for w in enumerate_dyck(1)] == ["10"]
    assert len(list(enumerate_dyck(3))) == 5


def test_counts_up_to_11():
    for n in range(1, 12):
        words = [str(w) for w in enumerate_dyck(n)]
        assert len(words) == len(set(words)) == catalan(n)


def test_counts_12_13_packed():
    for n in (12, 13):
        arr = word_array(n)
        assert len(arr) == len(np.unique(arr)) == catalan(n)
        assert np.all(arr[1:] > arr[:-1])


@pytest.mark.parametrize("n", [0, 17, -1])
def test_out_of_range(n):
    with pytest.raises(SemilengthOutOfRange):
        next(enumerate_dyck(n))


@pytest.mark.parametrize("n,pieces", [(1, 4), (5, 3), (9, 8), (11, 2), (12, 32)])
def test_chunks_are_complete_and_contiguous(n, pieces):
    chunks = plan_chunks(n, pieces)
    assert len(chunks) <= pieces
    assert chunks[0].start == 0 and chunks[-1].stop == catalan(n)
    assert all(a.stop == b.start for a, b in zip(chunks, chunks[1:]))
    parts = [chunk_words(c) for c in chunks]
    assert sum(len(p) for p in parts) == catalan(n)
    assert all(len(p) == len(c) for p, c in zip(parts, chunks))
    assert np.array_equal(np.concatenate(parts), word_array(n))


def test_chunks_do_not_overlap_by_hash():
    seen = set()
    for c in plan_chunks(10, 8):
        digests = {hash(int(v)) for v in chunk_words(c)[::37]}
        assert not digests & seen
        seen |= digests


def test_unrank_matches_enumeration():
    for n in range(1, 8):
        words = list(enumerate_dyck(n))
        assert [unrank(n, r) for r in range(len(words))] == words
