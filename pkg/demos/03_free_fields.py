"""Charged fermions, Schur polynomials and the lattice superalgebra F_{-1}.

Run:  python demos/03_free_fields.py
"""
from fractions import Fraction as Fr

from n2vx.free_field import (F_MINUS_ONE, FermionFock, L0_weight, fermion_act,
                             lattice_vertex_mode, schur_poly, verify_prop_fminus)

vac = FermionFock.vacuum
st = fermion_act(-1, Fr(-1, 2), vac)
print("psi-_{-1/2}|0> =", st)
print("psi+_{1/2} psi-_{-1/2}|0> =", fermion_act(+1, Fr(1, 2), next(iter(st))))
print("states of weight <= 2:", len(FermionFock.basis(2)))

# p_r is stored as {ascending variable indices: coefficient}.
for r in range(4):
    print(f"p_{r} =", schur_poly(r))

# In F_{-1} weights are not bounded below: iota(a) has weight -1/2.
print("\nweight of e = iota(a):", L0_weight((1, ())))
print("e_{-3} f =", lattice_vertex_mode(1, -3, (-1, ())), " (alpha(-1) 1)")
print("f_{-3} e =", lattice_vertex_mode(-1, -3, (1, ())))
print("e_0 e =", F_MINUS_ONE.vertex_mode(1, 0, (1, ())))

print()
for clause, text, ok in verify_prop_fminus():
    print(f"({clause}) {text:32s} {'ok' if ok else 'FAILED'}")
