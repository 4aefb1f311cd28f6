"""Affine sl2 at admissible level m: the sets S^m and P^m, the sl2 top levels
and the generalized Verma module M(m, 0).

Run:  python demos/02_affine_sl2.py
"""
from fractions import Fraction as Fr

from n2vx.affine_sl2 import (DenseTopLevel, FiniteTopLevel, casimir_apply, enumerate_P,
                             enumerate_S, generalized_verma, is_admissible, simple_affine)

for m in (1, Fr(1, 2), Fr(-1, 2), -1):
    print(f"m = {m}: admissible = {is_admissible(m)}")

print("\nS^{1/2} =", [str(r) for r in enumerate_S(Fr(1, 2))])
for w in enumerate_P(Fr(1, 2))[:3]:
    print("P^{1/2} weight:", w)

# Omega = ef + fe + h^2/2 acts by r(r+2)/2 on both kinds of top level.
print("\nOmega on V(2 w1):", casimir_apply(FiniteTopLevel(2), {0: Fr(1)}))
print("Omega on E_{1/2,1/3}:", casimir_apply(DenseTopLevel(Fr(1, 2), Fr(1, 3)), {0: Fr(1)}))

# At m = 1, e(-1)^2 1 is null, which is what cuts M(1, 0) down to L(1, 0).
M = generalized_verma(1)
print("\nGram of e(-1)^2 1 at m = 1:", M.gram(2, 4).to_lists())
L1 = simple_affine(1)
print("L(1,0) level-2 dimensions by h(0)-charge 4..-4:", [L1.dimension(2, ch) for ch in (4, 2, 0, -2, -4)])
