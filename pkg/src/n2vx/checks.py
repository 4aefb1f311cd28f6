"""Structural checks: super-Jacobi for a bracket table, and the
representation property of a module action."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .affine_sl2 import AffineMode, K, affine_bracket
from .exact_linalg import vec_axpy
from .n2_algebra import all_modes, parity as n2_parity, super_bracket

__all__ = ["bracket_vec", "super_jacobi_failures", "jacobi_n2", "jacobi_affine",
           "representation_failures"]


def bracket_vec(bracket: Callable, a, v: dict) -> dict:
    """[a, v] for v a sparse combination of basis elements."""
    out: dict = {}
    for b, c in v.items():
        vec_axpy(out, c, bracket(a, b))
    return out


def super_jacobi_failures(bracket: Callable, parity: Callable, basis: Sequence,
                          limit: int = 1) -> tuple[int, list]:
    """Check [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]] on all triples.

    Returns (number of triples, up to ``limit`` failing triples).
    """
    bad = []
    count = 0
    for a, b, c in itertools.product(basis, repeat=3):
        count += 1
        lhs = bracket_vec(bracket, a, bracket(b, c))
        rhs: dict = {}
        for z, k in bracket(a, b).items():
            vec_axpy(rhs, k, bracket(z, c))
        sgn = -1 if (parity(a) and parity(b)) else 1
        vec_axpy(rhs, sgn, bracket_vec(bracket, b, bracket(a, c)))
        if lhs != rhs:
            bad.append((a, b, c))
            if len(bad) >= limit:
                break
    return count, bad


def jacobi_n2(bound=3, limit: int = 1) -> tuple[int, list]:
    return super_jacobi_failures(super_bracket, n2_parity, all_modes(bound), limit)


def jacobi_affine(bound: int = 3, limit: int = 1) -> tuple[int, list]:
    basis = [AffineMode(r, n) for r in range(3) for n in range(-bound, bound + 1)] + [K]
    return super_jacobi_failures(affine_bracket, lambda x: 0, basis, limit)


def representation_failures(module, modes: Iterable, labels: Iterable,
                            limit: int = 1) -> tuple[int, list]:
    """x(y v) - (-1)^{|x||y|} y(x v) = [x, y] v for all modes x, y and labels v."""
    modes = list(modes)
    bad = []
    count = 0
    for v in labels:
        vec = {v: Fraction(1)}
        for x, y in itertools.product(modes, repeat=2):
            count += 1
            lhs = module.act_vec(x, module.act(y, v))
            sgn = -1 if (module.parity_of(x) and module.parity_of(y)) else 1
            vec_axpy(lhs, -sgn, module.act_vec(y, module.act(x, v)))
            rhs: dict = {}
            for z, c in module.bracket(x, y).items():
                vec_axpy(rhs, c, module.act_vec(z, vec))
            if lhs != rhs:
                bad.append((x, y, v))
                if len(bad) >= limit:
                    return count, bad
    return count, bad
