"""Verma modules M_{h,q,c} of the N=2 algebra and their quotients.

PBW monomials list creation modes in the order L < T < G+ < G-, each family
by ascending index (most negative first).  Weight spaces are labelled by
``(level, charge)`` with level = -(sum of indices) and charge = #G+ - #G-.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

from .exact_linalg import SparseRationalMatrix, kernel_basis, vec_axpy
from .n2_algebra import (CENTRAL, Family, Gm, Gp, N2Mode, adjoint, all_modes,
                         parity, super_bracket)
from .pbw import (HighestWeightModule, QuotientModule, annihilator_matrix,
                  generated_submodule, radical_submodule)

__all__ = [
    "HighestWeightN2", "VermaVector", "VermaN2", "verma_module",
    "weight_space_basis", "act", "gram_matrix", "singular_vectors",
    "quotient_truncation", "TruncatedQuotient", "vacuum_module",
    "positive_modes",
]


@dataclass(frozen=True)
class HighestWeightN2:
    h: Fraction
    q: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("h", "q", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


def _level(u: N2Mode) -> Fraction:
    return Fraction(-u.twice, 2)


def _charge(u: N2Mode) -> int:
    if u.family == Family.GP:
        return 1
    if u.family == Family.GM:
        return -1
    return 0


@lru_cache(maxsize=None)
def _creation_modes(level: Fraction) -> tuple[N2Mode, ...]:
    top = int(level * 2)
    out = []
    for fam in (Family.L, Family.T, Family.GP, Family.GM):
        odd = fam in (Family.GP, Family.GM)
        for t in range(-top, 0):
            if (t % 2 == 1) == odd:
                out.append(N2Mode(fam, t))
    return tuple(sorted(out))


class VermaN2(HighestWeightModule):
    def __init__(self, hw: HighestWeightN2):
        self.hw = hw

        def vacuum_value(x: N2Mode):
            if x.twice == 0:
                if x.family == Family.L:
                    return hw.h
                if x.family == Family.T:
                    return hw.q
            return 0

        super().__init__(
            bracket=super_bracket,
            parity=parity,
            is_creation=lambda x: x.twice < 0 and x.family != Family.C,
            key=lambda x: x,
            vacuum_value=vacuum_value,
            central_value=lambda x: hw.c if x.family == Family.C else None,
            level=_level,
            charge=_charge,
            creation_modes=_creation_modes,
        )

    def gram(self, level, charge) -> SparseRationalMatrix:
        return self.gram_matrix(adjoint, level, charge)

    def __repr__(self):
        return f"VermaN2(h={self.hw.h}, q={self.hw.q}, c={self.hw.c})"


@lru_cache(maxsize=64)
def verma_module(hw: HighestWeightN2) -> VermaN2:
    return VermaN2(hw)


@dataclass(frozen=True)
class VermaVector:
    hw: HighestWeightN2
    terms: Mapping[tuple, Fraction] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.terms)


def _as_hw(hw) -> HighestWeightN2:
    return hw if isinstance(hw, HighestWeightN2) else HighestWeightN2(*hw)


def weight_space_basis(hw, level, charge) -> list[tuple]:
    return verma_module(_as_hw(hw)).weight_space_basis(level, charge)


def act(mode: N2Mode, v: VermaVector) -> VermaVector:
    M = verma_module(v.hw)
    return VermaVector(v.hw, M.act_vec(mode, v.terms))


def gram_matrix(hw, level, charge) -> SparseRationalMatrix:
    return verma_module(_as_hw(hw)).gram(level, charge)


def positive_modes(level) -> list[N2Mode]:
    """Annihilation modes that can act nontrivially at or below ``level``."""
    return [x for x in all_modes(level) if x.family != Family.C and x.twice > 0]


def singular_vectors(hw, level, charge) -> list[VermaVector]:
    """Basis of the weight vectors at (level, charge) killed by every positive mode."""
    hw = _as_hw(hw)
    M = verma_module(hw)
    A, basis = annihilator_matrix(M, level, charge, positive_modes(level))
    return [VermaVector(hw, {basis[i]: c for i, c in v.items()}) for v in kernel_basis(A)]


class TruncatedQuotient:
    """A graded quotient of M_{h,q,c} truncated at ``max_level``.

    ``spaces[(level, charge)]`` is the list of standard monomials spanning
    the quotient weight space; ``action(mode, level, charge)`` returns the
    matrix of a generator between quotient weight spaces.
    """

    def __init__(self, hw: HighestWeightN2, max_level, module: QuotientModule):
        self.hw = hw
        self.max_level = Fraction(max_level)
        self.module = module
        self.spaces: dict = {}
        lv = Fraction(0)
        while lv <= self.max_level:
            for ch in module.parent.charges_at(lv):
                self.spaces[(lv, ch)] = module.weight_space_basis(lv, ch)
            lv += Fraction(1, 2)

    def dimension(self, level, charge) -> int:
        return len(self.spaces.get((Fraction(level), charge), []))

    def action(self, mode: N2Mode, level, charge):
        return self.module.action_matrix(mode, level, charge)

    def actions(self):
        """Every generator action with |index| <= max_level between the stored spaces."""
        out = {}
        for (lv, ch) in self.spaces:
            for x in all_modes(self.max_level):
                if x.family == Family.C:
                    continue
                tgt = lv - Fraction(x.twice, 2)
                if 0 <= tgt <= self.max_level:
                    out[(x, lv, ch)] = self.module.action_matrix(x, lv, ch)[0]
        return out


def quotient_truncation(hw, max_level, generators: Union[str, Sequence[VermaVector]] = "radical"
                        ) -> TruncatedQuotient:
    """Quotient of M_{h,q,c} by the submodule generated by singular vectors,
    or by the radical of the contravariant form when ``generators == "radical"``."""
    hw = _as_hw(hw)
    M = verma_module(hw)
    if isinstance(generators, str):
        if generators != "radical":
            raise ValueError(f"unknown generator set {generators!r}")
        span = radical_submodule(M, adjoint)
    else:
        span = generated_submodule(M, [g.terms for g in generators])
    return TruncatedQuotient(hw, max_level, QuotientModule(M, span))


@lru_cache(maxsize=16)
def vacuum_module(c) -> QuotientModule:
    """V_c: M_{0,0,c} modulo the submodule generated by G+-(-1/2)|0>."""
    M = verma_module(HighestWeightN2(0, 0, Fraction(c)))
    gens = [{(Gp(Fraction(-1, 2)),): Fraction(1)}, {(Gm(Fraction(-1, 2)),): Fraction(1)}]
    return QuotientModule(M, generated_submodule(M, gens))
