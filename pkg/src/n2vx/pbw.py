"""Induced highest-weight modules over a graded Lie superalgebra.

A :class:`HighestWeightModule` is U(g) acting on U(g_-) |vac>, realized on
ordered PBW monomials (tuples of creation modes).  Applying a mode means
commuting it rightward with the super-bracket until it either slots into
order or hits the vacuum.  The algebra is passed in as plain callables so
the same straightening serves the N=2 algebra and affine sl2.

:class:`QuotientModule` divides such a module by a graded submodule that is
stored one weight space at a time in reduced echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .exact_linalg import (EchelonSubspace, SparseRationalMatrix, kernel_basis,
                           vec_axpy)

Monomial = tuple
Vector = dict


class HighestWeightModule:
    """U(g_-) |vac> with vacuum data supplied by ``vacuum_value``.

    Parameters
    ----------
    bracket : (a, b) -> {mode: coeff}
    parity : mode -> 0 | 1
    is_creation : mode -> bool
    key : mode -> sortable; PBW monomials list creation modes in key order
    vacuum_value : mode -> Fraction; eigenvalue of a non-creation,
        non-central mode on the vacuum (0 for annihilators)
    central_value : mode -> Fraction | None; scalar for central modes
    level, charge : mode -> Fraction / int; grading shifts of a creation mode
    """

    def __init__(self, *, bracket, parity, is_creation, key, vacuum_value,
                 central_value, level, charge, creation_modes):
        self.bracket = bracket
        self.parity_of = parity
        self.is_creation = is_creation
        self.key = key
        self.vacuum_value = vacuum_value
        self.central_value = central_value
        self.mode_level = level
        self.mode_charge = charge
        # callable: max level -> creation modes with level <= that, in key order
        self._creation_modes = creation_modes
        self._cache: dict = {}
        self._basis_cache: dict = {}

    # -- labels ---------------------------------------------------------
    vacuum: Monomial = ()

    def level(self, mon: Monomial) -> Fraction:
        return sum((self.mode_level(u) for u in mon), Fraction(0))

    def charge(self, mon: Monomial) -> int:
        return sum((self.mode_charge(u) for u in mon), 0)

    def parity(self, mon: Monomial) -> int:
        return sum(self.parity_of(u) for u in mon) % 2

    weight = level

    # -- action ---------------------------------------------------------
    def act(self, mode, mon: Monomial) -> Vector:
        """The mode applied to a PBW monomial, in PBW normal form."""
        ck = (mode, mon)
        hit = self._cache.get(ck)
        if hit is None:
            hit = self._act(mode, mon)
            self._cache[ck] = hit
        return hit

    def act_vec(self, mode, vec: Mapping) -> Vector:
        out: Vector = {}
        for mon, c in vec.items():
            vec_axpy(out, c, self.act(mode, mon))
        return out

    def _act_bracket_on(self, br: Mapping, mon: Monomial) -> Vector:
        out: Vector = {}
        for y, c in br.items():
            z = self.central_value(y)
            if z is not None:
                if z:
                    vec_axpy(out, c * z, {mon: 1})
            else:
                vec_axpy(out, c, self.act(y, mon))
        return out

    def _act(self, x, mon: Monomial) -> Vector:
        z = self.central_value(x)
        if z is not None:
            return {mon: Fraction(z)} if z else {}
        creation = self.is_creation(x)
        if not mon:
            if creation:
                return {(x,): Fraction(1)}
            ev = self.vacuum_value(x)
            return {mon: Fraction(ev)} if ev else {}
        u, rest = mon[0], mon[1:]
        if creation:
            kx, ku = self.key(x), self.key(u)
            if kx < ku or (kx == ku and not self.parity_of(x)):
                return {(x,) + mon: Fraction(1)}
            if kx == ku:
                # x odd and equal to u: x x = (1/2)[x, x]
                return {k: v / 2 for k, v in
                        self._act_bracket_on(self.bracket(x, x), rest).items()}
        # x u rest = sign * u (x rest) + [x, u] rest
        sign = -1 if (self.parity_of(x) and self.parity_of(u)) else 1
        out: Vector = {}
        inner = self.act(x, rest)
        for m2, c in inner.items():
            vec_axpy(out, sign * c, self.act(u, m2))
        vec_axpy(out, 1, self._act_bracket_on(self.bracket(x, u), rest))
        return out

    def apply_word(self, word: Sequence, vec: Mapping) -> Vector:
        """Apply modes right-to-left: word = (a1, ..., ak) gives a1...ak vec."""
        out = dict(vec)
        for x in reversed(word):
            out = self.act_vec(x, out)
        return out

    # -- weight spaces --------------------------------------------------
    def weight_space_basis(self, level, charge) -> list[Monomial]:
        level = Fraction(level)
        ck = (level, charge)
        if ck in self._basis_cache:
            return self._basis_cache[ck]
        modes = self._creation_modes(level)
        out: list[Monomial] = []

        def rec(start: int, remaining: Fraction, ch, acc: list):
            if remaining == 0:
                if ch == charge:
                    out.append(tuple(acc))
                return
            for i in range(start, len(modes)):
                u = modes[i]
                lv = self.mode_level(u)
                if lv > remaining:
                    continue
                nxt = i + 1 if self.parity_of(u) else i
                acc.append(u)
                rec(nxt, remaining - lv, ch + self.mode_charge(u), acc)
                acc.pop()

        rec(0, level, 0, [])
        out.sort(key=lambda mon: tuple(self.key(u) for u in mon))
        self._basis_cache[ck] = out
        return out

    def charges_at(self, level) -> list[int]:
        """Charges with a nonempty weight space at this level."""
        level = Fraction(level)
        modes = self._creation_modes(level)
        found = set()

        def rec(start, remaining, ch):
            if remaining == 0:
                found.add(ch)
                return
            for i in range(start, len(modes)):
                u = modes[i]
                lv = self.mode_level(u)
                if lv <= remaining:
                    rec(i + 1 if self.parity_of(u) else i, remaining - lv,
                        ch + self.mode_charge(u))

        rec(0, level, 0)
        return sorted(found)

    # -- contravariant form ---------------------------------------------
    def pairing(self, adjoint: Callable, left: Monomial, right: Monomial) -> Fraction:
        """<left vac, right vac> with <vac, vac> = 1."""
        vec = {right: Fraction(1)}
        for u in left:
            vec = self.act_vec(adjoint(u), vec)
            if not vec:
                return Fraction(0)
        return vec.get((), Fraction(0))

    def gram_matrix(self, adjoint: Callable, level, charge) -> SparseRationalMatrix:
        basis = self.weight_space_basis(level, charge)
        n = len(basis)
        entries = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                x = self.pairing(adjoint, a, b)
                if x:
                    entries[(i, j)] = x
        return SparseRationalMatrix(n, n, entries)


def annihilator_matrix(module, level, charge, modes: Iterable) -> tuple[SparseRationalMatrix, list]:
    """Stacked matrix of the given modes acting on one weight space.

    Rows are indexed by (mode, target monomial); columns by the weight-space
    basis.  Its kernel is the joint kernel of the modes.
    """
    basis = module.weight_space_basis(level, charge)
    rows: dict = {}
    entries = {}
    for j, mon in enumerate(basis):
        for x in modes:
            for tgt, c in module.act(x, mon).items():
                i = rows.setdefault((x, tgt), len(rows))
                entries[(i, j)] = c
    return SparseRationalMatrix(len(rows), len(basis), entries), basis


class QuotientModule:
    """A module divided by a graded submodule, one weight space at a time.

    ``spanning(level, charge)`` must return vectors of the parent that span
    the submodule's weight space.  Quotient vectors are parent vectors in
    normal form: their support avoids the pivot monomials of the submodule.
    """

    def __init__(self, parent: HighestWeightModule,
                 spanning: Callable[[Fraction, int], Iterable[Mapping]]):
        self.parent = parent
        self._spanning = spanning
        self._spaces: dict = {}
        self._cache: dict = {}
        self.vacuum = parent.vacuum

    def subspace(self, level, charge) -> EchelonSubspace:
        key = (Fraction(level), charge)
        sp = self._spaces.get(key)
        if sp is None:
            basis = self.parent.weight_space_basis(*key)
            order = {mon: i for i, mon in enumerate(reversed(basis))}
            sp = EchelonSubspace(order)
            for v in self._spanning(*key):
                if len(sp) == len(basis):
                    break
                sp.add(v)
            self._spaces[key] = sp
        return sp

    def reduce(self, vec: Mapping) -> Vector:
        by_weight: dict = {}
        for mon, c in vec.items():
            by_weight.setdefault((self.parent.level(mon), self.parent.charge(mon)), {})[mon] = c
        out: Vector = {}
        for (lv, ch), part in by_weight.items():
            out.update(self.subspace(lv, ch).reduce(part))
        return out

    def weight_space_basis(self, level, charge) -> list[Monomial]:
        pivots = self.subspace(level, charge).pivots
        return [m for m in self.parent.weight_space_basis(level, charge) if m not in pivots]

    def dimension(self, level, charge) -> int:
        return len(self.weight_space_basis(level, charge))

    def level(self, mon):
        return self.parent.level(mon)

    weight = level

    def charge(self, mon):
        return self.parent.charge(mon)

    def parity(self, mon):
        return self.parent.parity(mon)

    def act(self, mode, mon: Monomial) -> Vector:
        ck = (mode, mon)
        hit = self._cache.get(ck)
        if hit is None:
            hit = self.reduce(self.parent.act(mode, mon))
            self._cache[ck] = hit
        return hit

    def act_vec(self, mode, vec: Mapping) -> Vector:
        out: Vector = {}
        for mon, c in vec.items():
            vec_axpy(out, c, self.act(mode, mon))
        return out

    def apply_word(self, word, vec):
        out = self.reduce(vec)
        for x in reversed(word):
            out = self.act_vec(x, out)
        return out

    def action_matrix(self, mode, level, charge) -> tuple[SparseRationalMatrix, list, list]:
        """Matrix of a mode from one quotient weight space to its target."""
        src = self.weight_space_basis(level, charge)
        cols: dict = {}
        tgt_basis = None
        entries = {}
        for j, mon in enumerate(src):
            for tgt, c in self.act(mode, mon).items():
                if tgt_basis is None:
                    tgt_basis = self.weight_space_basis(self.level(tgt), self.charge(tgt))
                    cols = {m: i for i, m in enumerate(tgt_basis)}
                entries[(cols[tgt], j)] = c
        tgt_basis = tgt_basis or []
        return SparseRationalMatrix(len(tgt_basis), len(src), entries), src, tgt_basis


def generated_submodule(module: HighestWeightModule, generators: Sequence[Mapping]):
    """Spanning function for U(g_-)·{generators}; generators must be singular
    weight vectors so that U(g) s = U(g_-) s."""
    gens = []
    for s in generators:
        mon = next(iter(s))
        gens.append((dict(s), module.level(mon), module.charge(mon)))

    def spanning(level, charge):
        for s, ls, cs in gens:
            dl = level - ls
            if dl < 0:
                continue
            for word in module.weight_space_basis(dl, charge - cs):
                v = module.apply_word(word, s)
                if v:
                    yield v
    return spanning


def radical_submodule(module: HighestWeightModule, adjoint: Callable):
    """Spanning function for the radical of the contravariant form."""
    def spanning(level, charge):
        if level == 0:
            return []
        basis = module.weight_space_basis(level, charge)
        G = module.gram_matrix(adjoint, level, charge)
        return [{basis[i]: c for i, c in v.items()} for v in kernel_basis(G)]
    return spanning
