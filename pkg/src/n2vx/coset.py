"""Kazama-Suzuki and anti-Kazama-Suzuki embeddings as checkable mode computations.

KS direction: N=2 generators tau+-, j, nu inside F (x) M(m, 0), verified
against the N=2 bracket with central charge 3m/(m+2).

Anti-KS direction: x, y, h inside V_c (x) F_{-1} (or M_{h,q,c} (x) F_{-1}),
verified against the affine sl2 bracket at level m, plus the vacuum-level
product identities and the Casimir transport formula.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .affine_sl2 import (E, F, H, K, AffineMode, affine_bracket,
                         generalized_verma, simple_affine)
from .exact_linalg import format_rational, vec_axpy
from .fields import (Combination, Derivative, Field, HeisenbergField,
                     IdentityField, LatticeVertexField, ModuleField,
                     NormalOrdered, TensorField, TensorSpace)
from .free_field import FermionFock, LatticeSpace
from .n2_algebra import (CENTRAL, Family, N2Mode, parity as n2_parity,
                         super_bracket)
from .verma_n2 import HighestWeightN2, vacuum_module, verma_module

__all__ = [
    "KS_ASSIGNMENTS", "KS_DEFAULT", "KS_NU_CONVENTIONS", "ANTIKS_CONVENTIONS", "CosetGenerators", "RelationReport",
    "central_charge_of", "build_ks", "verify_ks", "resolve_ks_assignment",
    "build_antiks", "verify_antiks", "ks_highest_weight",
    "casimir_identity_check", "tensor_mode_act", "UnsupportedShape",
]


class UnsupportedShape(ValueError):
    pass


def central_charge_of(m) -> Fraction:
    m = Fraction(m)
    if m == -2:
        raise ValueError("level -2 is excluded")
    return 3 * m / (m + 2)


# -- spaces ---------------------------------------------------------------

class _FermionSpace:
    vacuum = FermionFock.vacuum
    weight = staticmethod(FermionFock.weight)
    parity = staticmethod(FermionFock.parity)

    @staticmethod
    def act(md, st):
        return FermionFock.act(md[0], md[1], st)


FERMIONS = _FermionSpace()


def fermion_field(species: int) -> ModuleField:
    """Psi^{species}(z) = sum psi_{n+1/2} z^{-n-1}, the field of psi_{-1/2}|0>."""
    return ModuleField(FERMIONS, lambda n: (species, 2 * n + 1), 1, Fraction(1, 2))


def current_field(module, root: int) -> ModuleField:
    return ModuleField(module, lambda n: AffineMode(root, n), 0, 1)


def n2_field(module, family: Family) -> ModuleField:
    """Generator field of an N=2 module: G+-(z), T(z) or L(z)."""
    if family in (Family.GP, Family.GM):
        return ModuleField(module, lambda n: N2Mode(family, 2 * n - 1), 1, Fraction(3, 2))
    if family == Family.T:
        return ModuleField(module, lambda n: N2Mode(Family.T, 2 * n), 0, 1)
    if family == Family.L:
        return ModuleField(module, lambda n: N2Mode(Family.L, 2 * n - 2), 0, 2)
    raise ValueError(family)


# -- generators -----------------------------------------------------------

@dataclass
class CosetGenerators:
    """Generator fields together with their states.

    ``fields`` maps a name (``tau+``, ``tau-``, ``j``, ``nu`` or ``x``, ``y``,
    ``h``) to a Field on ``space``; ``states`` holds u = u_{-1}|0>.
    """
    kind: str
    m: Fraction
    space: TensorSpace
    fields: dict
    states: dict
    assignment: str = ""
    meta: dict = field(default_factory=dict)


# name "tau+ factors/tau- factors" -> (tau+ species, tau+ root, tau- species,
# tau- root); root 0 = e, 2 = f.
KS_ASSIGNMENTS = {
    "psi-e/psi-f": (-1, 0, -1, 2),
    "psi+e/psi-f": (+1, 0, -1, 2),
    "psi-e/psi+f": (-1, 0, +1, 2),
    "psi+f/psi-e": (+1, 2, -1, 0),
}
KS_DEFAULT = "psi+f/psi-e"


# "literal" nu is the N=2 Virasoro vector twisted by -(1/2) dj; "untwisted"
# adds back (1/2) j_{-2} 1, which is what {G+, G-} forces
KS_NU_CONVENTIONS = ("untwisted", "literal")


def build_ks(m, species_assignment: str = KS_DEFAULT, *, nu_convention: str = "untwisted",
             affine=None) -> CosetGenerators:
    """tau+-, j, nu in F (x) M(m, 0) with coefficients 1, 2/(m+2), m/(m+2), 1/(m+2).

    ``affine`` may replace M(m, 0) by another module for the affine algebra
    (for instance the radical quotient L(m, 0)).
    """
    if nu_convention not in KS_NU_CONVENTIONS:
        raise ValueError(f"unknown nu convention {nu_convention!r}")
    m = Fraction(m)
    if m == -2:
        raise ValueError("level -2 is excluded")
    try:
        sp_p, root_p, sp_m, root_m = KS_ASSIGNMENTS[species_assignment]
    except KeyError:
        raise ValueError(f"unknown species assignment {species_assignment!r}") from None
    A = affine if affine is not None else generalized_verma(m)
    space = TensorSpace(FERMIONS, A)
    one_f, one_a = IdentityField(), IdentityField()
    psi = {+1: fermion_field(+1), -1: fermion_field(-1)}
    cur = {r: current_field(A, r) for r in range(3)}
    psipsi = NormalOrdered(psi[+1], psi[-1], FERMIONS)          # psi+_{-1/2} psi-_{-1/2} 1
    psidpsi = NormalOrdered(psi[+1], Derivative(psi[-1]), FERMIONS)  # psi+_{-1/2} psi-_{-3/2} 1
    ef = NormalOrdered(cur[0], cur[2], A)                        # e(-1) f(-1) 1

    def T(a, b):
        return TensorField(a, b, FERMIONS)

    k = m + 2
    j = Combination([(m / k, T(psipsi, one_a)), (-1 / k, T(one_f, cur[1]))])
    nu_terms = [(1 / k, T(one_f, ef)), (-m / k, T(psidpsi, one_a)),
                (-1 / k, T(psipsi, cur[1]))]
    if nu_convention == "untwisted":
        nu_terms.append((Fraction(1, 2), Derivative(j)))
    fields = {
        "tau+": T(psi[sp_p], cur[root_p]),
        "tau-": Combination([(2 / k, T(psi[sp_m], cur[root_m]))]),
        "j": j,
        "nu": Combination(nu_terms),
    }
    states = {name: f.mode(-1, space.vacuum) for name, f in fields.items()}
    return CosetGenerators("ks", m, space, fields, states, species_assignment,
                           {"nu_convention": nu_convention})


def _ks_operator(gens: CosetGenerators, c: Fraction):
    f = gens.fields

    def op(x: N2Mode, vec):
        fam = x.family
        if fam == Family.C:
            return {k: c * v for k, v in vec.items()}
        if fam == Family.L:
            return f["nu"].mode_vec(x.twice // 2 + 1, vec)
        if fam == Family.T:
            return f["j"].mode_vec(x.twice // 2, vec)
        name = "tau+" if fam == Family.GP else "tau-"
        return f[name].mode_vec((x.twice + 1) // 2, vec)
    return op


# anti-KS sign conventions for y: +(m+2)/2 ("literal") and the sign the Koszul
# rule requires
ANTIKS_CONVENTIONS = {"literal": 1, "koszul": -1}


def build_antiks(m, convention: str = "koszul", *, left=None,
                 lattice: LatticeSpace | None = None) -> CosetGenerators:
    """x = G+_{-3/2}1 (x) f, y = +-(m+2)/2 G-_{-3/2}1 (x) e,
    h = -m 1 (x) alpha(-1)1 + (m+2) T_{-1}1 (x) 1, in N2-module (x) F_{-1}.

    ``left`` defaults to V_c with c = 3m/(m+2).
    """
    m = Fraction(m)
    c = central_charge_of(m)
    sign = ANTIKS_CONVENTIONS[convention]
    Lft = left if left is not None else vacuum_module(c)
    Lat = lattice or LatticeSpace(-1)
    space = TensorSpace(Lft, Lat)
    one_l, one_r = IdentityField(), IdentityField()

    def T(a, b):
        return TensorField(a, b, Lft)

    Gp_, Gm_, Tf = (n2_field(Lft, Family.GP), n2_field(Lft, Family.GM), n2_field(Lft, Family.T))
    fields = {
        "x": T(Gp_, LatticeVertexField(Lat, -1)),
        "y": Combination([(sign * (m + 2) / 2, T(Gm_, LatticeVertexField(Lat, 1)))]),
        "h": Combination([(-m, T(one_l, HeisenbergField(Lat))), (m + 2, T(Tf, one_r))]),
    }
    states = {}
    if hasattr(Lft, "vacuum"):
        states = {name: f.mode(-1, space.vacuum) for name, f in fields.items()}
    return CosetGenerators("antiks", m, space, fields, states, convention, {"c": c})


def _antiks_operator(gens: CosetGenerators):
    f = gens.fields
    name = {0: "x", 1: "h", 2: "y"}
    m = gens.m

    def op(x: AffineMode, vec):
        if x.root == 3:
            return {k: m * v for k, v in vec.items()}
        return f[name[x.root]].mode_vec(x.n, vec)
    return op


def tensor_mode_act(gens: CosetGenerators, name: str, n: int, state: Mapping) -> dict:
    """n-th mode of a named generator field applied to a tensor-space vector."""
    try:
        fld = gens.fields[name]
    except KeyError:
        raise UnsupportedShape(f"no generator field {name!r} in {gens.kind} catalog") from None
    return fld.mode_vec(n, state)


# -- relation sweeps --------------------------------------------------------

@dataclass
class RelationReport:
    name: str
    passed: bool
    checks: int = 0
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"suite": self.name, "passed": self.passed, "checks": self.checks}
        out.update(self.details)
        if self.counterexample:
            out["counterexample"] = self.counterexample
        return out


def _sweep(name, op, bracket, parity, modes, states, space_parity, stop_at_first=True):
    checks = 0
    for a, b in itertools.product(modes, modes):
        br = bracket(a, b)
        sgn = -1 if (parity(a) and parity(b)) else 1
        for st in states:
            v = {st: Fraction(1)}
            lhs = op(a, op(b, v))
            vec_axpy(lhs, -sgn, op(b, op(a, v)))
            rhs: dict = {}
            for z, c in br.items():
                vec_axpy(rhs, c, op(z, v))
            checks += 1
            if lhs != rhs:
                return checks, {"modes": [repr(a), repr(b)], "state": repr(st),
                                "lhs": _fmt_vec(lhs), "rhs": _fmt_vec(rhs)}
    return checks, None


def _fmt_vec(v):
    return {repr(k): format_rational(c) for k, c in v.items()}


def _n2_modes(depth) -> list[N2Mode]:
    d2 = int(Fraction(depth) * 2)
    out = []
    for t in range(-d2, d2 + 1):
        if t % 2 == 0:
            out += [N2Mode(Family.L, t), N2Mode(Family.T, t)]
        else:
            out += [N2Mode(Family.GP, t), N2Mode(Family.GM, t)]
    return out


def _ks_states(gens: CosetGenerators, depth) -> list:
    A = gens.space.right
    depth = Fraction(depth)
    out = []
    for fs in FermionFock.basis(depth):
        rest = depth - FermionFock.weight(fs)
        lv = 0
        while lv <= rest:
            for ch in A.parent.charges_at(lv) if hasattr(A, "parent") else A.charges_at(lv):
                for mon in A.weight_space_basis(lv, ch):
                    out.append((fs, mon))
            lv += 1
    return out


def verify_ks(m, depth=2, species_assignment: str = KS_DEFAULT, *,
              nu_convention: str = "untwisted", affine=None) -> RelationReport:
    """Every N=2 relation between generator modes with |index| <= depth, as
    operators on all F (x) M(m, 0) states of weight <= depth."""
    gens = build_ks(m, species_assignment, nu_convention=nu_convention, affine=affine)
    c = central_charge_of(m)
    op = _ks_operator(gens, c)
    states = _ks_states(gens, depth)
    checks, ce = _sweep("ks", op, super_bracket, n2_parity, _n2_modes(depth), states,
                        gens.space.parity)
    return RelationReport("ks", ce is None, checks, ce,
                          {"m": format_rational(gens.m), "c": format_rational(c),
                           "depth": format_rational(Fraction(depth)),
                           "species_assignment": species_assignment,
                           "nu_convention": nu_convention,
                           "states": len(states)})


def resolve_ks_assignment(m, depth=1) -> dict[tuple[str, str], bool]:
    """Run the relation sweep for every candidate assignment and nu convention."""
    return {(name, nc): verify_ks(m, depth, name, nu_convention=nc).passed
            for name in KS_ASSIGNMENTS for nc in KS_NU_CONVENTIONS}


def _affine_modes(depth) -> list[AffineMode]:
    d = int(Fraction(depth))
    return [AffineMode(r, n) for n in range(-d, d + 1) for r in range(3)]


def _antiks_states(gens: CosetGenerators, depth) -> list:
    """V_c (x) F_{-1} labels with level + heisenberg depth + n^2/2 <= depth."""
    Lft, Lat = gens.space.left, gens.space.right
    depth = Fraction(depth)
    out = []
    nmax = 0
    while Fraction((nmax + 1) ** 2, 2) <= depth:
        nmax += 1
    for n in range(-nmax, nmax + 1):
        budget = depth - Fraction(n * n, 2)
        for lat in Lat.basis([n], int(budget)):
            rest = budget - sum(lat[1])
            lv = Fraction(0)
            while lv <= rest:
                for ch in Lft.parent.charges_at(lv):
                    for mon in Lft.weight_space_basis(lv, ch):
                        out.append((mon, lat))
                lv += Fraction(1, 2)
    return out


def _vacuum_clauses(gens: CosetGenerators, high: int = 4) -> list[tuple[str, str, bool]]:
    """The product identities among x, y, h on V_c (x) F_{-1}."""
    f, s, m = gens.fields, gens.states, gens.m
    vac = {gens.space.vacuum: Fraction(1)}
    rows = []

    def prod(a, n, b):
        return f[a].mode_vec(n, s[b])

    def row(clause, text, ok):
        rows.append((clause, text, ok))

    row("a", f"x(n) x = 0 for 0 <= n <= {high}", all(not prod("x", n, "x") for n in range(high + 1)))
    row("a", f"y(n) y = 0 for 0 <= n <= {high}", all(not prod("y", n, "y") for n in range(high + 1)))
    row("b", f"x(n) y = 0 for 2 <= n <= {high}", all(not prod("x", n, "y") for n in range(2, high + 1)))
    row("b", "x(1) y = m 1", prod("x", 1, "y") == {k: m * v for k, v in vac.items()})
    row("b", "x(0) y = h", prod("x", 0, "y") == s["h"])
    row("c", f"h(n) x = 0 for 1 <= n <= {high}", all(not prod("h", n, "x") for n in range(1, high + 1)))
    row("c", "h(0) x = 2 x", prod("h", 0, "x") == {k: 2 * v for k, v in s["x"].items()})
    row("d", f"h(n) y = 0 for 1 <= n <= {high}", all(not prod("h", n, "y") for n in range(1, high + 1)))
    row("d", "h(0) y = -2 y", prod("h", 0, "y") == {k: -2 * v for k, v in s["y"].items()})
    row("e", f"h(n) h = 0 for 2 <= n <= {high}", all(not prod("h", n, "h") for n in range(2, high + 1)))
    row("e", "h(1) h = 2m 1", prod("h", 1, "h") == {k: 2 * m * v for k, v in vac.items()})
    row("e", "h(0) h = 0", not prod("h", 0, "h"))
    row("e", "h(0) y = 0 (literal)", not prod("h", 0, "y"))
    return rows


def verify_antiks(m, depth=2, convention: str = "koszul", *, mode_bound=None) -> RelationReport:
    """Product identities on the vacuum plus the affine sl2 bracket at level m
    as operators on V_c (x) F_{-1} states up to ``depth``."""
    gens = build_antiks(m, convention)
    clauses = _vacuum_clauses(gens)
    # the literal "h(0) y = 0" is reported but not required; h(0) h = 0 is what holds
    required = [r for r in clauses if r[1] != "h(0) y = 0 (literal)"]
    op = _antiks_operator(gens)
    states = _antiks_states(gens, depth)
    mb = depth if mode_bound is None else mode_bound
    checks, ce = _sweep("anti-ks", op, affine_bracket, lambda a: 0, _affine_modes(mb),
                        states, gens.space.parity)
    ok = ce is None and all(r[2] for r in required)
    return RelationReport("anti-ks", ok, checks, ce, {
        "m": format_rational(gens.m), "c": format_rational(gens.meta["c"]),
        "depth": format_rational(Fraction(depth)), "convention": convention,
        "states": len(states),
        "clauses": [{"clause": a, "statement": b, "passed": p} for a, b, p in clauses],
    })


# -- highest-weight transport ---------------------------------------------

def ks_highest_weight(gamma, beta, m) -> tuple[Fraction, Fraction]:
    """(h, q) of U(A)(1 (x) w) for a top-level vector w with Casimir gamma and
    h(0)-eigenvalue beta."""
    gamma, beta, m = Fraction(gamma), Fraction(beta), Fraction(m)
    if m == -2:
        raise ValueError("level -2 is excluded")
    return gamma / (2 * (m + 2)) - beta ** 2 / (4 * (m + 2)), -beta / (m + 2)


def casimir_identity_check(h, q, m, convention: str = "koszul") -> RelationReport:
    """Omega = x(0)y(0) + y(0)x(0) + h(0)^2/2 on v_{h,q,c} (x) 1 inside
    M_{h,q,c} (x) F_{-1}, compared with 2(m+2)h + (m+2)^2 q^2 / 2."""
    h, q, m = Fraction(h), Fraction(q), Fraction(m)
    c = central_charge_of(m)
    M = verma_module(HighestWeightN2(h, q, c))
    gens = build_antiks(m, convention, left=M)
    f = gens.fields
    v = {(M.vacuum, (0, ())): Fraction(1)}
    out: dict = {}
    vec_axpy(out, 1, f["x"].mode_vec(0, f["y"].mode_vec(0, v)))
    vec_axpy(out, 1, f["y"].mode_vec(0, f["x"].mode_vec(0, v)))
    vec_axpy(out, Fraction(1, 2), f["h"].mode_vec(0, f["h"].mode_vec(0, v)))
    expected = 2 * (m + 2) * h + (m + 2) ** 2 * q ** 2 / 2
    scalar = out.get((M.vacuum, (0, ())), Fraction(0))
    ok = out == ({k: expected for k in v} if expected else {})
    h0 = f["h"].mode_vec(0, v)
    return RelationReport("casimir-identity", ok, 1, None if ok else {"got": _fmt_vec(out)}, {
        "h": format_rational(h), "q": format_rational(q), "m": format_rational(m),
        "scalar": format_rational(scalar), "expected": format_rational(expected),
        "h0_eigenvalue": format_rational(h0.get((M.vacuum, (0, ())), Fraction(0))),
    })
