"""Affine sl2 at level m: admissible levels, the sets S^m, P^m, T^m, the
sl2 top levels (finite V(r w1) and dense E_{r,s}) with their Casimir, and the
generalized Verma module M(m, 0) with its contravariant form.

sl2 is normalized with [e, f] = h, [h, e] = 2e, [h, f] = -2f and invariant
form (e|f) = 1, (h|h) = 2; this is the normalization under which the dense
action e.E_i = -(s+i) E_{i-1}, h.E_i = (r-2s-2i) E_i, f.E_i = (s+i-r) E_{i+1}
is a representation and Omega = ef + fe + h^2/2 acts by r(r+2)/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact_linalg import vec_axpy
from .pbw import HighestWeightModule, QuotientModule, radical_submodule

__all__ = [
    "NotAdmissible", "WindowExceeded", "RationalLevel", "is_admissible",
    "enumerate_S", "enumerate_P", "membership_T", "AdmissibleWeight",
    "DenseTopLevel", "FiniteTopLevel", "dense_act", "casimir_apply",
    "AffineMode", "E", "H", "F", "K", "affine_bracket", "affine_adjoint",
    "GeneralizedVerma", "generalized_verma", "affine_truncation",
]


class NotAdmissible(ValueError):
    pass


class WindowExceeded(IndexError):
    pass


@dataclass(frozen=True)
class RationalLevel:
    m: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))

    @property
    def t(self) -> int:
        return self.m.numerator

    @property
    def u(self) -> int:
        return self.m.denominator

    @property
    def N(self) -> int:
        return 2 * self.u + self.t - 2


def is_admissible(m) -> bool:
    """m = t/u in lowest terms with u >= 1 and 2u + t - 2 >= 0."""
    return RationalLevel(m).N >= 0


def _require_admissible(m) -> RationalLevel:
    lv = RationalLevel(m)
    if lv.N < 0:
        raise NotAdmissible(f"level {m} is not admissible")
    return lv


def enumerate_S(m) -> list[Fraction]:
    """S^m = { n - k(m+2) : 0 <= n <= 2u+t-2, 0 <= k <= u-1 }, sorted."""
    lv = _require_admissible(m)
    return sorted({n - k * (lv.m + 2) for n in range(lv.N + 1) for k in range(lv.u)})


class AdmissibleWeight(NamedTuple):
    k: int
    n: int
    lambda0: Fraction  # coefficient on Lambda_0
    lambda1: Fraction  # coefficient on Lambda_1


def enumerate_P(m) -> list[AdmissibleWeight]:
    lv = _require_admissible(m)
    m = lv.m
    return [AdmissibleWeight(k, n, m - n + k * (m + 2), n - k * (m + 2))
            for k in range(lv.u) for n in range(lv.N + 1)]


def membership_T(m, r, s) -> bool:
    """(r, s) in T^m: r in S^m minus Z, s not in Z, r - s not in Z."""
    S = enumerate_S(m)
    r, s = Fraction(r), Fraction(s)
    return (r in S and r.denominator != 1 and s.denominator != 1
            and (r - s).denominator != 1)


# -- sl2 top levels -----------------------------------------------------------

@dataclass(frozen=True)
class DenseTopLevel:
    """E_{r,s} on the basis E_i, restricted to the window lo <= i <= hi."""
    r: Fraction
    s: Fraction
    lo: int = -50
    hi: int = 50

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "s", Fraction(self.s))

    def labels(self):
        return range(self.lo, self.hi + 1)

    def act(self, x: str, i: int) -> dict:
        return dense_act(x, i, self)


def dense_act(x: str, i: int, top: DenseTopLevel) -> dict:
    if not top.lo <= i <= top.hi:
        raise WindowExceeded(f"E_{i} outside window [{top.lo}, {top.hi}]")
    r, s = top.r, top.s
    if x == "e":
        j, c = i - 1, -(s + i)
    elif x == "h":
        j, c = i, r - 2 * s - 2 * i
    elif x == "f":
        j, c = i + 1, s + i - r
    else:
        raise ValueError(f"unknown sl2 generator {x!r}")
    if not c:
        return {}
    if not top.lo <= j <= top.hi:
        raise WindowExceeded(f"result E_{j} outside window [{top.lo}, {top.hi}]")
    return {j: c}


@dataclass(frozen=True)
class FiniteTopLevel:
    """V(r w1) on w_0..w_r with f.w_i = w_{i+1}, e.w_i = i(r-i+1) w_{i-1}."""
    r: int

    def labels(self):
        return range(self.r + 1)

    def act(self, x: str, i: int) -> dict:
        r = self.r
        if not 0 <= i <= r:
            raise WindowExceeded(i)
        if x == "e":
            c = i * (r - i + 1)
            return {i - 1: Fraction(c)} if c else {}
        if x == "h":
            c = r - 2 * i
            return {i: Fraction(c)} if c else {}
        if x == "f":
            return {i + 1: Fraction(1)} if i < r else {}
        raise ValueError(f"unknown sl2 generator {x!r}")


def _act_vec(top, x: str, v: dict) -> dict:
    out: dict = {}
    for i, c in v.items():
        vec_axpy(out, c, top.act(x, i))
    return out


def casimir_apply(top, v: dict) -> dict:
    """Omega = ef + fe + h^2/2 applied to a vector on either top-level type."""
    out: dict = {}
    vec_axpy(out, 1, _act_vec(top, "e", _act_vec(top, "f", v)))
    vec_axpy(out, 1, _act_vec(top, "f", _act_vec(top, "e", v)))
    vec_axpy(out, Fraction(1, 2), _act_vec(top, "h", _act_vec(top, "h", v)))
    return out


# -- the affine algebra -------------------------------------------------------

class AffineMode(NamedTuple):
    root: int  # 0 = e, 1 = h, 2 = f, 3 = central k
    n: int

    def __repr__(self):
        return "k" if self.root == 3 else f"{'ehf'[self.root]}({self.n})"


def E(n) -> AffineMode:
    return AffineMode(0, n)


def H(n) -> AffineMode:
    return AffineMode(1, n)


def F(n) -> AffineMode:
    return AffineMode(2, n)


K = AffineMode(3, 0)

# [x, y] in sl2 as {root: coeff}, and the invariant form
_SL2 = {
    (0, 2): {1: 1}, (2, 0): {1: -1},
    (1, 0): {0: 2}, (0, 1): {0: -2},
    (1, 2): {2: -2}, (2, 1): {2: 2},
}
_FORM = {(0, 2): 1, (2, 0): 1, (1, 1): 2}


def affine_bracket(a: AffineMode, b: AffineMode) -> dict:
    """[x(a), y(b)] = [x, y](a+b) + a (x|y) delta_{a+b,0} k."""
    if a.root == 3 or b.root == 3:
        return {}
    out = {AffineMode(r, a.n + b.n): Fraction(c) for r, c in _SL2.get((a.root, b.root), {}).items()}
    if a.n + b.n == 0:
        w = _FORM.get((a.root, b.root), 0) * a.n
        if w:
            out[K] = Fraction(w)
    return out


def affine_adjoint(a: AffineMode) -> AffineMode:
    """e(n) <-> f(-n), h(n) -> h(-n), k -> k."""
    if a.root == 3:
        return a
    return AffineMode(2 - a.root, -a.n)


@lru_cache(maxsize=None)
def _affine_creation(level: Fraction) -> tuple:
    top = int(level)
    return tuple(sorted(AffineMode(r, -n) for r in range(3) for n in range(1, top + 1)))


class GeneralizedVerma(HighestWeightModule):
    """M(m, 0): induced from the trivial sl2-module, k acting by m."""

    def __init__(self, m):
        self.m = Fraction(m)
        super().__init__(
            bracket=affine_bracket,
            parity=lambda x: 0,
            is_creation=lambda x: x.root != 3 and x.n < 0,
            key=lambda x: x,
            vacuum_value=lambda x: 0,
            central_value=lambda x: self.m if x.root == 3 else None,
            level=lambda x: Fraction(-x.n),
            charge=lambda x: (2, 0, -2)[x.root],
            creation_modes=_affine_creation,
        )

    def gram(self, level, charge):
        return self.gram_matrix(affine_adjoint, level, charge)

    def __repr__(self):
        return f"GeneralizedVerma(m={self.m})"


@lru_cache(maxsize=32)
def generalized_verma(m) -> GeneralizedVerma:
    return GeneralizedVerma(Fraction(m))


@lru_cache(maxsize=32)
def simple_affine(m) -> QuotientModule:
    """L(m, 0) realized as M(m, 0) modulo the radical of its contravariant form."""
    M = generalized_verma(Fraction(m))
    return QuotientModule(M, radical_submodule(M, affine_adjoint))


def affine_truncation(m, max_level: int) -> dict:
    """Per (level, h(0)-charge): PBW basis, Gram matrix and the basis of the
    radical quotient L(m, 0), up to ``max_level``."""
    m = Fraction(m)
    if m == -2:
        raise ValueError("level -2 is excluded")
    M = generalized_verma(m)
    Lq = simple_affine(m)
    out = {}
    for lv in range(max_level + 1):
        for ch in M.charges_at(lv):
            out[(lv, ch)] = {
                "basis": M.weight_space_basis(lv, ch),
                "gram": M.gram(lv, ch),
                "quotient_basis": Lq.weight_space_basis(lv, ch),
            }
    return out
