import pytest

from dyckzeta import (
    NotInjective,
    area,
    area_sequence,
    bounce,
    catalan,
    dinv,
    inverse_zeta,
    parse_word,
    rev_complement,
    zeta_area_vector,
    zeta_sweep,
)
from dyckzeta.zeta import area_scan, sweep_with_levels, zeta_sweep_forward

from oracles import sweep_by_hand

from conftest import EXAMPLE_WORD, EXAMPLE_ZETA

CLASSICAL = [zeta_area_vector, zeta_sweep, zeta_sweep_forward]


@pytest.mark.parametrize("fn", CLASSICAL)
@pytest.mark.parametrize(
    "word,image",
    [("10", "10"), ("110100", "101100"), (EXAMPLE_WORD, EXAMPLE_ZETA), ("1010", "1100"), ("1100", "1010")],
)
def test_examples(fn, word, image):
    assert str(fn(parse_word(word))) == image


def test_sweep_levels_row():
    out, lv = sweep_with_levels(parse_word(EXAMPLE_WORD))
    assert "".join(map(str, out)) == EXAMPLE_ZETA
    assert lv == (0, -1, -1, -1, -2, -2, -2, -2, -2, -2, -3, -3, -3, -3, -3, -4)


def test_area_scan_passes():
    # passes (-1,0): "1", (0,1): "011", (1,2): "00"
    assert area_scan((0, 1, 1)) == (1, 0, 1, 1, 0, 0)


def test_area_scan_orientation(dyck_upto_10):
    # the scan applied to the rows of w itself computes zeta on rc(w)
    w = parse_word(EXAMPLE_WORD)
    assert "".join(map(str, area_scan(area_sequence(w)))) != EXAMPLE_ZETA
    for words in dyck_upto_10.values():
        for w in words:
            assert area_scan(area_sequence(w)) == zeta_sweep(rev_complement(w)).bits


def test_sweep_matches_literal_oracle(dyck_upto_10):
    for n in range(1, 10):
        for w in dyck_upto_10[n]:
            assert str(zeta_sweep(w)) == sweep_by_hand(str(w))


def test_classical_maps_agree(dyck_upto_10):
    for words in dyck_upto_10.values():
        for w in words:
            z = zeta_sweep(w)
            assert zeta_area_vector(w) == z
            assert zeta_sweep_forward(w) == z


def test_bijective(dyck_upto_10):
    for n, words in dyck_upto_10.items():
        assert len({zeta_sweep(w) for w in words}) == catalan(n)


def test_haglund_statistic_exchange(dyck_upto_10):
    for n in range(1, 10):
        for w in dyck_upto_10[n]:
            z = zeta_sweep(w)
            assert (area(z), bounce(z)) == (dinv(rev_complement(w)), area(w))


def test_inverse_tables():
    assert {str(k): str(v) for k, v in inverse_zeta(1).items()} == {"10": "10"}
    assert {str(k): str(v) for k, v in inverse_zeta(2).items()} == {"1100": "1010", "1010": "1100"}
    assert str(inverse_zeta(8)[parse_word(EXAMPLE_ZETA)]) == EXAMPLE_WORD


def test_inverse_round_trip():
    for n in range(1, 9):
        table = inverse_zeta(n)
        assert len(table) == catalan(n)
        assert all(zeta_sweep(w) == z for z, w in table.items())


def test_not_injective_error_carries_pair():
    a, b = parse_word("1010"), parse_word("1100")
    err = NotInjective(a, b, a)
    assert err.pair == (a, b)
