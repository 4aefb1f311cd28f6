"""The N=2 algebra, its Verma modules and the vacuum module V_c.

Run:  python demos/01_n2_verma_modules.py
"""
from fractions import Fraction as Fr

from n2vx.n2_algebra import Gm, Gp, L, T, super_bracket
from n2vx.verma_n2 import HighestWeightN2, gram_matrix, singular_vectors, vacuum_module

# Brackets come back as sparse dicts; C is the central element.
print("{G+_{3/2}, G-_{-3/2}} =", super_bracket(Gp(Fr(3, 2)), Gm(Fr(-3, 2))))
print("[L_2, L_-2]          =", super_bracket(L(2), L(-2)))
print("[T_1, G-_{-3/2}]     =", super_bracket(T(1), Gm(Fr(-3, 2))))

# The contravariant form at level 1/2 is 2h -+ q on G+-_{-1/2} v.
hw = HighestWeightN2(Fr(1, 6), Fr(1, 3), 1)
print("\nGram at level 1/2, charge +1, (h,q,c) = (1/6,1/3,1):", gram_matrix(hw, Fr(1, 2), 1).to_lists())
print("Gram at level 1/2, charge -1:", gram_matrix(hw, Fr(1, 2), -1).to_lists())

# 2h = q, so G+_{-1/2} v is singular.
for v in singular_vectors(hw, Fr(1, 2), 1):
    print("singular vector:", v.terms)

# The vacuum Verma module always has G+-_{-1/2}|0> singular.
for c in (1, Fr(3, 5), -3):
    vecs = singular_vectors(HighestWeightN2(0, 0, c), Fr(1, 2), 1)
    print(f"c = {c}: level-1/2 charge-+1 singular vectors ->", [v.terms for v in vecs])

# V_c is the quotient by those two vectors; dimension by half-level:
V = vacuum_module(Fr(1))
dims = []
for tw in range(11):
    lv = Fr(tw, 2)
    dims.append(sum(V.dimension(lv, ch) for ch in V.parent.charges_at(lv)))
print("\ndim V_1 by level 0, 1/2, 1, ...:", dims)
