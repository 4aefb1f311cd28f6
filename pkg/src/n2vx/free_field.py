"""Free-field vertex superalgebras: two charged fermions F and the rank-one
lattice vertex superalgebra V_L with <alpha, alpha> = nu (F_{-1} when nu = -1).

Fermion states are pairs of ascending tuples of doubled (negative, odd)
indices, read as psi+_{p1} ... psi+_{pk} psi-_{m1} ... psi-_{ml} |0>.
The fields are Psi^±(z) = sum psi^±_i z^{-i-1/2} with {psi+_i, psi-_j} = delta_{i+j,0}.

Lattice states are ``(n, heis)`` with n the lattice exponent (the state
iota(a^n)) and ``heis`` an ascending tuple of positive integers, one entry k
per factor alpha(-k).  Heisenberg monomials double as polynomials in
x_1, x_2, ... (x_k <-> alpha(-k)), which is also how Schur polynomials are
stored.  The cocycle is trivial: iota(a^k) iota(a^l) = iota(a^{k+l}).
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact_linalg import vec_axpy

__all__ = [
    "FermionFock", "fermion_act", "schur_poly", "LatticeSpace", "F_MINUS_ONE",
    "heisenberg_act", "lattice_vertex_mode", "L0_weight",
    "verify_prop_fminus", "WindowExceeded",
]


class WindowExceeded(IndexError):
    pass


# -- charged fermions ---------------------------------------------------------

def _twice_half_odd(i) -> int:
    t = Fraction(i) * 2
    if t.denominator != 1 or t.numerator % 2 == 0:
        raise ValueError(f"fermion index {i} is not half-odd")
    return t.numerator


def fermion_act(species: int, i, st: tuple) -> dict:
    """psi^{species}_i applied to a Fock state; species is +1 or -1.

    ``i`` is the true (half-odd) index; states use doubled indices.
    """
    t = _twice_half_odd(i)
    return _fermion_act2(species, t, st)


@lru_cache(maxsize=None)
def _fermion_act2(species: int, t: int, st: tuple) -> dict:
    plus, minus = st
    k = len(plus)
    if t < 0:
        if species > 0:
            if t in plus:
                return {}
            pos = bisect_left(plus, t)
            new = (plus[:pos] + (t,) + plus[pos:], minus)
            return {new: Fraction((-1) ** pos)}
        if t in minus:
            return {}
        pos = bisect_left(minus, t)
        new = (plus, minus[:pos] + (t,) + minus[pos:])
        return {new: Fraction((-1) ** (k + pos))}
    # annihilator: remove the partner of opposite species and index -t
    if species > 0:
        if -t not in minus:
            return {}
        pos = minus.index(-t)
        return {(plus, minus[:pos] + minus[pos + 1:]): Fraction((-1) ** (k + pos))}
    if -t not in plus:
        return {}
    pos = plus.index(-t)
    return {(plus[:pos] + plus[pos + 1:], minus): Fraction((-1) ** pos)}


class FermionFock:
    """The charged-fermion SVOA F as a graded space with mode actions."""

    vacuum = ((), ())

    @staticmethod
    def weight(st) -> Fraction:
        return Fraction(-sum(st[0]) - sum(st[1]), 2)

    @staticmethod
    def parity(st) -> int:
        return (len(st[0]) + len(st[1])) % 2

    @staticmethod
    def charge(st) -> int:
        return len(st[0]) - len(st[1])

    @staticmethod
    def act(species: int, t: int, st) -> dict:
        """Mode with doubled index t."""
        return _fermion_act2(species, t, st)

    @staticmethod
    def basis(max_weight) -> list:
        """All Fock states of weight <= max_weight."""
        top = int(Fraction(max_weight) * 2)
        idx = [t for t in range(-top, 0) if t % 2]

        def subsets(budget, start):
            yield ()
            for j in range(start, len(idx)):
                w = -idx[j]
                if w <= budget:
                    for rest in subsets(budget - w, j + 1):
                        yield (idx[j],) + rest

        out = []
        for p in subsets(top, 0):
            for m in subsets(top + sum(p), 0):
                out.append((tuple(sorted(p)), tuple(sorted(m))))
        out.sort(key=lambda s: (FermionFock.weight(s), s))
        return out


# -- Schur polynomials --------------------------------------------------------

@lru_cache(maxsize=None)
def schur_poly(r: int) -> dict:
    """p_r with exp(sum_n x_n y^n / n) = sum_r p_r y^r.

    Returned as {ascending tuple of variable indices: coeff}; () is the
    constant monomial.  Uses r p_r = sum_{n=1}^r x_n p_{r-n}.
    """
    if r < 0:
        return {}
    if r == 0:
        return {(): Fraction(1)}
    out: dict = {}
    for n in range(1, r + 1):
        for mon, c in schur_poly(r - n).items():
            key = tuple(sorted(mon + (n,)))
            out[key] = out.get(key, 0) + c / r
    return {k: v for k, v in out.items() if v}


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            key = tuple(sorted(ma + mb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


# -- lattice vertex superalgebra ----------------------------------------------

@dataclass(frozen=True)
class LatticeSpace:
    """V_L for L = Z alpha with <alpha, alpha> = nu (nu odd)."""
    nu: int = -1
    max_exponent: int = 6
    max_depth: int = 12

    vacuum = (0, ())

    def parity(self, st) -> int:
        return (st[0] * self.nu) % 2

    def weight(self, st) -> Fraction:
        return L0_weight(st, self.nu)

    def depth(self, st) -> int:
        return sum(st[1])

    def _check(self, st):
        if abs(st[0]) > self.max_exponent or sum(st[1]) > self.max_depth:
            raise WindowExceeded(f"lattice state {st} outside working window")
        return st

    def heisenberg(self, n: int, st) -> dict:
        return heisenberg_act(n, st, self.nu, self)

    def vertex_mode(self, k: int, i: int, st) -> dict:
        return lattice_vertex_mode(k, i, st, self.nu, self)

    def max_vertex_mode(self, k: int, st) -> int:
        """Largest i with iota(a^k)_i st possibly nonzero."""
        return sum(st[1]) - k * st[0] * self.nu - 1

    def basis(self, exponents, max_depth: int) -> list:
        """States with the given lattice exponents and Heisenberg depth <= max_depth."""
        out = []
        for n in exponents:
            for d in range(max_depth + 1):
                for part in _partitions(d):
                    out.append((n, part))
        return out


F_MINUS_ONE = LatticeSpace(-1)


@lru_cache(maxsize=None)
def _partitions(d: int, largest: int | None = None) -> tuple:
    if largest is None:
        largest = d
    if d == 0:
        return ((),)
    out = []
    for k in range(min(d, largest), 0, -1):
        for rest in _partitions(d - k, k):
            out.append(tuple(sorted(rest + (k,))))
    return tuple(out)


def L0_weight(st, nu: int = -1) -> Fraction:
    """n^2 nu / 2 plus the total Heisenberg degree."""
    n, heis = st
    return Fraction(n * n * nu, 2) + sum(heis)


def heisenberg_act(n: int, st, nu: int = -1, space: LatticeSpace | None = None) -> dict:
    """alpha(n) on a lattice state: [alpha(a), alpha(b)] = a nu delta_{a+b,0}."""
    e, heis = st
    if n < 0:
        new = (e, tuple(sorted(heis + (-n,))))
        if space is not None:
            space._check(new)
        return {new: Fraction(1)}
    if n == 0:
        return {st: Fraction(e * nu)} if e else {}
    mult = heis.count(n)
    if not mult:
        return {}
    pos = heis.index(n)
    return {(e, heis[:pos] + heis[pos + 1:]): Fraction(n * nu * mult)}


def _shift_expand(heis: tuple, shift: Fraction) -> dict:
    """P(x_p - shift * z^{-p}) for the monomial P = prod x_p.

    Returns {(d, monomial): coeff}, d being the power of z^{-1}.
    """
    out = {(0, ()): Fraction(1)}
    for p, a in Counter(heis).items():
        step = {}
        for j in range(a + 1):
            c = comb(a, j) * (-shift) ** j
            step[(p * j, (p,) * (a - j))] = Fraction(c)
        new: dict = {}
        for (d1, m1), c1 in out.items():
            for (d2, m2), c2 in step.items():
                key = (d1 + d2, tuple(sorted(m1 + m2)))
                new[key] = new.get(key, 0) + c1 * c2
        out = {k: v for k, v in new.items() if v}
    return out


@lru_cache(maxsize=None)
def _scaled_schur(r: int, k: int) -> dict:
    return {mon: c * Fraction(k) ** len(mon) for mon, c in schur_poly(r).items()}


@lru_cache(maxsize=None)
def _vertex_mode(k: int, i: int, st, nu: int) -> dict:
    l, heis = st
    # Y(iota(a^k), z) = z^{k l nu} exp(sum k x_p z^p / p) P(x_p - k nu z^{-p}) iota(a^{k+l})
    target = -i - 1 - k * l * nu
    out: dict = {}
    for (d, mon), c in _shift_expand(heis, Fraction(k * nu)).items():
        r = target + d
        if r < 0:
            continue
        for smon, sc in _scaled_schur(r, k).items():
            key = (k + l, tuple(sorted(mon + smon)))
            out[key] = out.get(key, 0) + c * sc
    return {s: v for s, v in out.items() if v}


def lattice_vertex_mode(k: int, i: int, st, nu: int = -1,
                        space: LatticeSpace | None = None) -> dict:
    """The i-th mode (z^{-i-1} coefficient) of Y(iota(a^k), z) applied to st."""
    res = _vertex_mode(k, i, st, nu)
    if space is not None:
        for s in res:
            space._check(s)
    return dict(res)


def verify_prop_fminus(low: int = -1, high: int = 6) -> list[tuple[str, str, bool]]:
    """Check every relation among e = iota(a), f = iota(a^-1) and k = alpha(-1)1
    in F_{-1}; returns (clause, statement, passed) rows."""
    L = LatticeSpace(-1)
    e, f, one = (1, ()), (-1, ()), (0, ())
    kvec = {(0, (1,)): Fraction(1)}
    rows = []

    def check(clause, text, got, want):
        rows.append((clause, text, got == want))

    def ymode(kk, i, st):
        return L.vertex_mode(kk, i, st)

    check("a", f"e_i f = 0 for {low} <= i <= {high}",
          [ymode(1, i, f) for i in range(low, high + 1)], [{}] * (high - low + 1))
    check("a", "e_{-2} f = 1", ymode(1, -2, f), {one: 1})
    check("a", "e_{-3} f = k", ymode(1, -3, f), kvec)
    check("b", f"f_i e = 0 for {low} <= i <= {high}",
          [ymode(-1, i, e) for i in range(low, high + 1)], [{}] * (high - low + 1))
    check("b", "f_{-2} e = 1", ymode(-1, -2, e), {one: 1})
    check("b", "f_{-3} e = -k", ymode(-1, -3, e), {s: -c for s, c in kvec.items()})
    check("c", f"e_i e = 0 for 1 <= i <= {high}",
          [ymode(1, i, e) for i in range(1, high + 1)], [{}] * high)
    check("c", "e_0 e = e^2", ymode(1, 0, e), {(2, ()): 1})
    check("d", f"f_i f = 0 for 1 <= i <= {high}",
          [ymode(-1, i, f) for i in range(1, high + 1)], [{}] * high)
    check("d", "f_0 f = f^2", ymode(-1, 0, f), {(-2, ()): 1})
    # Y(k, z) = alpha(z), so k_i = alpha(i)
    check("e", f"k_i e = 0 for 1 <= i <= {high}",
          [L.heisenberg(i, e) for i in range(1, high + 1)], [{}] * high)
    check("e", "k_0 e = -e", L.heisenberg(0, e), {e: -1})
    check("f", f"k_i f = 0 for 1 <= i <= {high}",
          [L.heisenberg(i, f) for i in range(1, high + 1)], [{}] * high)
    check("f", "k_0 f = f", L.heisenberg(0, f), {f: 1})
    return rows
