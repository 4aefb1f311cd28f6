from fractions import Fraction as Fr

import pytest

from n2vx.n2_algebra import Family, Gm, Gp, L, T, all_modes
from n2vx.checks import representation_failures
from n2vx.verma_n2 import (HighestWeightN2, VermaVector, act, gram_matrix, quotient_truncation,
                           singular_vectors, vacuum_module, verma_module, weight_space_basis)


def verma_dims(max_twice):
    """Coefficients of prod (1+q^{n-1/2})^2 / (1-q^n)^2 in powers of q^{1/2}."""
    coeffs = [0] * (max_twice + 1)
    coeffs[0] = 1
    for n in range(1, max_twice + 1):
        if n % 2:
            for _ in range(2):
                coeffs = [c + (coeffs[i - n] if i >= n else 0) for i, c in enumerate(coeffs)]
        else:
            for _ in range(2):
                for i in range(n, max_twice + 1):
                    coeffs[i] += coeffs[i - n]
    return coeffs


def total_dim(module, lv):
    M = getattr(module, "parent", module)
    return sum(len(module.weight_space_basis(lv, ch)) for ch in M.charges_at(lv))


def test_verma_weight_spaces_match_character():
    M = verma_module(HighestWeightN2(Fr(1, 3), Fr(-1, 2), 2))
    want = verma_dims(12)
    assert [total_dim(M, Fr(t, 2)) for t in range(13)] == want
    assert want == [1, 2, 3, 6, 11, 18, 28, 44, 69, 104, 152, 222, 323]


def test_weight_space_basis_charge_split():
    hw = HighestWeightN2(0, 0, 1)
    assert weight_space_basis(hw, Fr(1, 2), 1) == [(Gp(Fr(-1, 2)),)]
    assert weight_space_basis(hw, 1, 0) == [(L(-1),), (T(-1),), (Gp(Fr(-1, 2)), Gm(Fr(-1, 2)))]


@pytest.mark.parametrize("h,q,c", [(1, 0, 1), (Fr(1, 6), Fr(1, 3), 1), (Fr(2, 5), Fr(-3, 7), Fr(9, 4))])
def test_gram_level_half(h, q, c):
    # <G+_{-1/2}v, G+_{-1/2}v> = 2h - q, <G-_{-1/2}v, G-_{-1/2}v> = 2h + q
    hw = HighestWeightN2(h, q, c)
    assert gram_matrix(hw, Fr(1, 2), 1).to_lists() == [[2 * Fr(h) - Fr(q)]]
    assert gram_matrix(hw, Fr(1, 2), -1).to_lists() == [[2 * Fr(h) + Fr(q)]]


def test_gram_level_one_charge_zero():
    h, q, c = Fr(1, 2), Fr(1, 3), Fr(3, 2)
    G = gram_matrix(HighestWeightN2(h, q, c), 1, 0).to_lists()
    # basis L_{-1}v, T_{-1}v, G+_{-1/2}G-_{-1/2}v
    assert G[0][0] == 2 * h
    assert G[0][1] == q and G[1][0] == q
    assert G[1][1] == c / 3
    assert G == [list(r) for r in zip(*G)]


def test_gram_is_symmetric_at_higher_levels():
    hw = HighestWeightN2(Fr(3, 4), Fr(1, 5), Fr(-2, 3))
    for lv in (Fr(3, 2), Fr(2)):
        for ch in (-1, 0, 1):
            assert gram_matrix(hw, lv, ch).is_symmetric()


@pytest.mark.parametrize("c", [1, Fr(3, 5), -3, Fr(9, 4)])
def test_vacuum_singular_vectors(c):
    hw = HighestWeightN2(0, 0, c)
    plus = singular_vectors(hw, Fr(1, 2), 1)
    minus = singular_vectors(hw, Fr(1, 2), -1)
    assert [v.terms for v in plus] == [{(Gp(Fr(-1, 2)),): 1}]
    assert [v.terms for v in minus] == [{(Gm(Fr(-1, 2)),): 1}]


def test_generic_weight_has_no_low_singular_vectors():
    hw = HighestWeightN2(1, Fr(1, 7), 5)
    for lv, ch in [(Fr(1, 2), 1), (Fr(1, 2), -1), (1, 0)]:
        assert singular_vectors(hw, lv, ch) == []


def test_chiral_weight_singular_vector():
    # 2h = q makes G+_{-1/2}v null and singular
    hw = HighestWeightN2(Fr(1, 6), Fr(1, 3), 1)
    assert [v.terms for v in singular_vectors(hw, Fr(1, 2), 1)] == [{(Gp(Fr(-1, 2)),): 1}]


def test_act_on_verma_vector():
    hw = HighestWeightN2(Fr(1, 2), Fr(1, 4), 1)
    v = VermaVector(hw, {(): Fr(1)})
    w = act(Gp(Fr(-1, 2)), v)
    back = act(Gm(Fr(1, 2)), w)
    # G-_{1/2} G+_{-1/2} v = (2h - q) v
    assert back.terms == {(): Fr(3, 4)}


def test_vacuum_module_dimensions():
    V = vacuum_module(Fr(1))
    dims = [total_dim(V, Fr(t, 2)) for t in range(13)]
    assert dims == [1, 0, 1, 2, 3, 4, 6, 10, 15, 20, 28, 42, 59]
    assert V.dimension(1, 0) == 1


def test_radical_quotient_unitary_minimal():
    # c = 1, (h, q) = (1/6, 1/3): the level-1/2 charge +1 vector is null
    tq = quotient_truncation(HighestWeightN2(Fr(1, 6), Fr(1, 3), 1), 1)
    assert tq.dimension(Fr(1, 2), 1) == 0
    assert tq.dimension(Fr(1, 2), -1) == 1


def test_singular_generated_quotient_matches_vacuum_module():
    hw = HighestWeightN2(0, 0, 1)
    gens = singular_vectors(hw, Fr(1, 2), 1) + singular_vectors(hw, Fr(1, 2), -1)
    tq = quotient_truncation(hw, 2, gens)
    V = vacuum_module(Fr(1))
    for (lv, ch), basis in tq.spaces.items():
        assert basis == V.weight_space_basis(lv, ch)


def test_representation_property_small():
    M = verma_module(HighestWeightN2(Fr(-2, 3), Fr(5, 4), Fr(7, 2)))
    labels = [m for t in range(5) for ch in M.charges_at(Fr(t, 2))
              for m in M.weight_space_basis(Fr(t, 2), ch)]
    modes = [x for x in all_modes(Fr(3, 2)) if x.family != Family.C]
    n, bad = representation_failures(M, modes, labels)
    assert n > 0 and bad == []
