"""The N=2 superconformal Lie superalgebra as a table of structure constants.

Basis elements are :class:`N2Mode` tuples ``(family, twice_index)``; the
index is stored doubled so that half-odd G-modes stay integral.  The
central element is an ordinary mode (family ``C``), so a bracket result is
just a sparse dict ``{N2Mode: Fraction}``.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "Family", "N2Mode", "L", "T", "Gp", "Gm", "CENTRAL",
    "parity", "super_bracket", "adjoint", "all_modes",
]


class Family(IntEnum):
    L = 0
    T = 1
    GP = 2
    GM = 3
    C = 4


class N2Mode(NamedTuple):
    family: Family
    twice: int  # 2 * mode index

    @property
    def index(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __repr__(self):
        if self.family == Family.C:
            return "C"
        name = {Family.L: "L", Family.T: "T", Family.GP: "G+", Family.GM: "G-"}[self.family]
        i = self.index
        return f"{name}({i.numerator}/{i.denominator})" if i.denominator != 1 else f"{name}({i})"


def _twice(x, odd: bool) -> int:
    t = Fraction(x) * 2
    if t.denominator != 1 or (t.numerator % 2 == 1) != odd:
        kind = "half-odd" if odd else "integral"
        raise ValueError(f"mode index {x} is not {kind}")
    return t.numerator


def L(n) -> N2Mode:
    return N2Mode(Family.L, _twice(n, False))


def T(n) -> N2Mode:
    return N2Mode(Family.T, _twice(n, False))


def Gp(r) -> N2Mode:
    return N2Mode(Family.GP, _twice(r, True))


def Gm(r) -> N2Mode:
    return N2Mode(Family.GM, _twice(r, True))


CENTRAL = N2Mode(Family.C, 0)

_ODD = (Family.GP, Family.GM)


def parity(a: N2Mode) -> int:
    """0 for even (L, T, C), 1 for odd (G+, G-)."""
    return 1 if a.family in _ODD else 0


def _add(out: dict, mode: N2Mode, coeff: Fraction):
    if coeff:
        out[mode] = out.get(mode, 0) + coeff


def _ordered_bracket(a: N2Mode, b: N2Mode) -> dict | None:
    """Bracket for pairs listed in the defining relations; None otherwise."""
    fa, fb = a.family, b.family
    out: dict = {}
    if fa == Family.C or fb == Family.C:
        return out
    m2, n2 = a.twice, b.twice
    m, n = Fraction(m2, 2), Fraction(n2, 2)
    if fa == Family.L and fb == Family.L:
        _add(out, N2Mode(Family.L, m2 + n2), m - n)
        if m2 + n2 == 0:
            _add(out, CENTRAL, (m ** 3 - m) / 12)
        return out
    if fa == Family.L and fb in _ODD:
        _add(out, N2Mode(fb, m2 + n2), m / 2 - n)
        return out
    if fa == Family.L and fb == Family.T:
        _add(out, N2Mode(Family.T, m2 + n2), -n)
        return out
    if fa == Family.T and fb == Family.T:
        if m2 + n2 == 0:
            _add(out, CENTRAL, m / 3)
        return out
    if fa == Family.T and fb in _ODD:
        _add(out, N2Mode(fb, m2 + n2), Fraction(1) if fb == Family.GP else Fraction(-1))
        return out
    if fa == Family.GP and fb == Family.GM:
        r, s = m, n
        _add(out, N2Mode(Family.L, m2 + n2), Fraction(2))
        _add(out, N2Mode(Family.T, m2 + n2), r - s)
        if m2 + n2 == 0:
            _add(out, CENTRAL, (r * r - Fraction(1, 4)) / 3)
        return out
    if fa in _ODD and fa == fb:
        return out
    return None


def super_bracket(a: N2Mode, b: N2Mode) -> dict[N2Mode, Fraction]:
    """[a, b], an anticommutator when both are odd, as a sparse combination."""
    res = _ordered_bracket(a, b)
    if res is not None:
        return {k: v for k, v in res.items() if v}
    res = _ordered_bracket(b, a)
    sign = 1 if parity(a) and parity(b) else -1
    return {k: sign * v for k, v in res.items() if v}


def adjoint(a: N2Mode) -> N2Mode:
    """Contravariant anti-involution L_n -> L_-n, T_n -> T_-n, G+_r <-> G-_-r."""
    f = a.family
    if f == Family.C:
        return a
    if f == Family.GP:
        return N2Mode(Family.GM, -a.twice)
    if f == Family.GM:
        return N2Mode(Family.GP, -a.twice)
    return N2Mode(f, -a.twice)


def all_modes(bound) -> list[N2Mode]:
    """Every mode with |index| <= bound, plus the central element."""
    b2 = int(Fraction(bound) * 2)
    out = []
    for t in range(-b2, b2 + 1):
        if t % 2 == 0:
            out += [N2Mode(Family.L, t), N2Mode(Family.T, t)]
        else:
            out += [N2Mode(Family.GP, t), N2Mode(Family.GM, t)]
    out.append(CENTRAL)
    return out
