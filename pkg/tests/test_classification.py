from fractions import Fraction as Fr

import pytest

from n2vx.affine_sl2 import NotAdmissible, RationalLevel, is_admissible
from n2vx.classification import (DNotDefined, LevelExcluded, casimir_scalar, central_charge,
                                 classify, enumerate_W, enumerate_W_jk, membership_D,
                                 membership_D_all)


@pytest.mark.parametrize("m,c", [(1, 1), (0, 0), (Fr(1, 2), Fr(3, 5)), (Fr(-1, 2), -1)])
def test_central_charge(m, c):
    assert central_charge(m) == c


def test_central_charge_excluded_level():
    with pytest.raises(LevelExcluded):
        central_charge(-2)


def test_W_at_level_one():
    assert {(e.h, e.q) for e in enumerate_W(1)} == {(0, 0), (Fr(1, 6), Fr(-1, 3)), (Fr(1, 6), Fr(1, 3))}


@pytest.mark.parametrize("m,count", [(1, 3), (2, 6), (3, 10), (4, 15), (Fr(1, 2), 10), (0, 1)])
def test_W_counts(m, count):
    W = enumerate_W(m)
    assert len(W) == count
    assert len({(e.h, e.q) for e in W}) == count


def test_W_entries_are_consistent():
    for m in (1, 2, Fr(1, 2), Fr(-1, 2), Fr(2, 3)):
        m = Fr(m)
        for e in enumerate_W(m):
            assert e.j == e.i + Fr(1, 2) and e.k == e.r + Fr(1, 2) - e.i
            assert e.h == (e.j * e.k - Fr(1, 4)) / (m + 2)
            assert e.q == (e.j - e.k) / (m + 2)
            assert e.q ** 2 + 4 * e.h / (m + 2) == Fr(e.r * (e.r + 2)) / (m + 2) ** 2
            assert casimir_scalar(e.h, e.q, m) == Fr(e.r * (e.r + 2), 2)


def test_W_two_parametrizations_agree():
    for m in (1, Fr(1, 2), Fr(-4, 3), Fr(7, 3)):
        assert {(e.h, e.q) for e in enumerate_W(m)} == enumerate_W_jk(m)


def test_W_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        enumerate_W(-1)


def test_D_examples():
    assert membership_D(Fr(1, 8), 0, Fr(1, 2)) == Fr(1, 2)
    assert membership_D(Fr(-3, 40), 0, Fr(1, 2)) == Fr(-1, 2)
    assert membership_D(1, 0, Fr(1, 2)) is None
    # r and -2-r both lie in S^{1/2}
    assert membership_D_all(Fr(1, 8), 0, Fr(1, 2)) == [Fr(-5, 2), Fr(1, 2)]


def test_D_curve_points_off_the_axis():
    m = Fr(1, 2)
    r = Fr(-3, 2)
    q = Fr(2, 7)
    h = (r * (r + 2) / (m + 2) ** 2 - q * q) * (m + 2) / 4
    assert r in membership_D_all(h, q, m)


def test_D_undefined_at_nonnegative_integers():
    with pytest.raises(DNotDefined):
        membership_D(0, 0, 1)
    with pytest.raises(NotAdmissible):
        membership_D(0, 0, -1)


@pytest.mark.parametrize("h,q,m,tag", [
    (0, 0, 1, "InW"), (Fr(1, 6), Fr(1, 3), 1, "InW"), (1, 0, 1, "NotModule"),
    (Fr(1, 8), 0, Fr(1, 2), "InD"), (0, 0, -2, "NotAdmissible"), (1, 0, Fr(1, 2), "NotModule"),
])
def test_classify(h, q, m, tag):
    assert classify(h, q, m).tag == tag


def test_classify_witnesses():
    v = classify(Fr(1, 6), Fr(1, 3), 1)
    assert (v.witness.i, v.witness.r) == (1, 1)
    assert v.witness_dict() == {"r": 1, "i": 1, "j": "3/2", "k": "1/2"}
    d = classify(Fr(1, 8), 0, Fr(1, 2))
    assert d.witness_dict() == {"r": "1/2"}
    assert d.as_dict()["curve_roots"] == ["-5/2", "1/2"]
    assert classify(0, 0, 1).witness_dict() == {"r": 0, "i": 0, "j": "1/2", "k": "1/2"}


def test_W_prefers_lookup_over_curve():
    # W points at m = 1/2 also lie on curves with integral r; the verdict is InW
    for e in enumerate_W(Fr(1, 2)):
        assert classify(e.h, e.q, Fr(1, 2)).tag == "InW"


def test_classify_every_admissible_small_level():
    for t in range(-7, 8):
        for u in (1, 2, 3):
            m = Fr(t, u)
            if m.denominator != u or not is_admissible(m):
                continue
            for e in enumerate_W(m):
                assert classify(e.h, e.q, m).tag == "InW"
            assert RationalLevel(m).N >= 0
