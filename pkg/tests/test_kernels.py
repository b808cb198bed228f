import numpy as np
import pytest
from hypothesis import given, settings

from dyckzeta import area, bounce, dinv, rev_complement, scaffolding_conjugate, scaffolding_grouped, zeta_area_vector, zeta_sweep
from dyckzeta import kernels
from dyckzeta.enumeration import word_array

from test_dyck import dyck_words

SCALAR_MAPS = {
    "area-vector": zeta_area_vector,
    "sweep": zeta_sweep,
    "scaffolding-grouped": scaffolding_grouped,
    "scaffolding-grouped-conj": scaffolding_conjugate,
}
SCALAR_STATS = {"area": area, "bounce": bounce, "dinv": dinv}


@pytest.mark.parametrize("name", sorted(kernels.MAPS))
def test_maps_match_scalar(name, dyck_upto_10):
    for n in range(1, 9):
        got = kernels.MAPS[name](word_array(n), n).tolist()
        assert got == [SCALAR_MAPS[name](w).to_int() for w in dyck_upto_10[n]]


@pytest.mark.parametrize("name", sorted(kernels.STATISTICS))
def test_statistics_match_scalar(name, dyck_upto_10):
    for n in range(1, 9):
        got = kernels.STATISTICS[name](word_array(n), n).tolist()
        assert got == [SCALAR_STATS[name](w) for w in dyck_upto_10[n]]


def test_pack_unpack():
    arr = word_array(6)
    assert np.array_equal(kernels.pack(kernels.unpack(arr, 6)), arr)


def test_rev_complement(dyck_upto_10):
    arr = word_array(7)
    assert kernels.rev_complement(arr, 7).tolist() == [rev_complement(w).to_int() for w in dyck_upto_10[7]]


def test_is_dyck():
    arr = np.array([0b1100, 0b1010, 0b1001, 0b0110, 0b1110], dtype=np.uint64)
    assert kernels.is_dyck(arr, 2).tolist() == [True, True, False, False, False]


@settings(max_examples=200, deadline=None)
@given(dyck_words())
def test_random_large_words(w):
    n = w.semilength
    arr = np.array([w.to_int()], dtype=np.uint64)
    for name, fn in kernels.MAPS.items():
        assert int(fn(arr, n)[0]) == SCALAR_MAPS[name](w).to_int()
    for name, fn in kernels.STATISTICS.items():
        assert int(fn(arr, n)[0]) == SCALAR_STATS[name](w)
