"""Which highest weights give modules for the simple algebra L_{c_m}.

Run:  python demos/06_classification.py
"""
from fractions import Fraction as Fr

from n2vx.classification import central_charge, classify, enumerate_W, membership_D_all

for m in (1, 2, Fr(1, 2)):
    W = enumerate_W(m)
    print(f"m = {m}, c = {central_charge(m)}: |W| = {len(W)}")
    for e in W[:4]:
        print("   ", e.as_dict())

# Away from nonnegative integer levels whole curves of weights appear.
print("\n(1/8, 0) at m = 1/2 lies on the curves with r in", [str(r) for r in membership_D_all(Fr(1, 8), 0, Fr(1, 2))])

for h, q, m in [(Fr(1, 6), Fr(1, 3), 1), (1, 0, 1), (Fr(1, 8), 0, Fr(1, 2)), (0, 0, -2)]:
    print(f"classify({h}, {q}, m={m}) ->", classify(h, q, m).as_dict())
