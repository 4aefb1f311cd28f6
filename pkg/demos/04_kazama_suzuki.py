"""N=2 generators inside F (x) M(m, 0).

tau+ and tau- each pair one fermion with one sl2 current.  The sweep tries
every species/root assignment and both forms of the Virasoro vector, and
reports which one satisfies all N=2 relations.

Run:  python demos/04_kazama_suzuki.py
"""
from fractions import Fraction as Fr

from n2vx.coset import build_ks, resolve_ks_assignment, tensor_mode_act, verify_ks

m = Fr(1, 2)
for (assignment, nu_form), ok in resolve_ks_assignment(m, 1).items():
    print(f"{assignment:12s} nu {nu_form:10s} -> {'all relations hold' if ok else 'fails'}")

g = build_ks(m)
print("\ntau+ =", g.states["tau+"])
print("tau- =", g.states["tau-"])
print("G+_{3/2} tau- =", tensor_mode_act(g, "tau+", 2, g.states["tau-"]), "  (2c/3 with c = 3/5)")

rep = verify_ks(m, Fr(3, 2))
print(f"\nweight <= 3/2 sweep at m = {m}: passed={rep.passed}, {rep.checks} checks, c = {rep.details['c']}")
