from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from n2vx.exact_linalg import (EchelonSubspace, SparseRationalMatrix, format_rational,
                               kernel_basis, parse_rational, rank)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_dim=6):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.one_of(st.just(Fraction(0)), small),
                                        min_size=c, max_size=c),
                               min_size=r, max_size=r)))


@pytest.mark.parametrize("text,value", [
    ("3/2", Fraction(3, 2)), ("-7", Fraction(-7)), ("+4/6", Fraction(2, 3)), ("0", Fraction(0)),
    ("-10/5", Fraction(-2)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", " 1/2", "1 /2", "1/0", "", "a/b", "1//2", "--1"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_rejects_float():
    with pytest.raises(ValueError):
        parse_rational(0.5)


@pytest.mark.parametrize("value,text", [
    (Fraction(3, 2), "3/2"), (Fraction(-4, 2), "-2"), (Fraction(0), "0"), (Fraction(-1, 3), "-1/3"),
])
def test_format_rational(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_and_kernel_match_sympy(rows):
    M = SparseRationalMatrix.from_rows(rows)
    S = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    assert rank(M) == S.rank()
    ker = kernel_basis(M)
    assert len(ker) == M.ncols - S.rank()
    for v in ker:
        assert M.apply(v) == {}
    # the kernel vectors are independent
    if ker:
        K = SparseRationalMatrix.from_rows(
            [[v.get(j, Fraction(0)) for j in range(M.ncols)] for v in ker])
        assert rank(K) == len(ker)


def test_no_stored_zeros_and_equality():
    A = SparseRationalMatrix.from_rows([[0, 1], [Fraction(1, 2), 0]])
    assert A.nnz() == 2
    assert A[0, 0] == 0 and A[1, 0] == Fraction(1, 2)
    assert A.transpose().transpose() == A
    assert not A.is_symmetric()
    assert SparseRationalMatrix.identity(3).is_symmetric()


def test_kernel_of_known_matrix():
    A = SparseRationalMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    ker = kernel_basis(A)
    assert len(ker) == 2
    assert rank(A) == 1


def test_echelon_subspace_reduce_and_contains():
    order = {"a": 0, "b": 1, "c": 2}
    sp = EchelonSubspace(order)
    assert sp.add({"a": Fraction(1), "b": Fraction(1)})
    assert not sp.add({"a": Fraction(2), "b": Fraction(2)})
    assert sp.contains({"a": Fraction(-3), "b": Fraction(-3)})
    assert not sp.contains({"c": Fraction(1)})
    red = sp.reduce({"a": Fraction(1)})
    assert len(red) == 1 and not (set(red) & sp.pivots)
    assert len(sp) == 1
