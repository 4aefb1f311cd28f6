"""Affine sl2 at level m inside V_c (x) F_{-1}, and the Casimir transport.

Run:  python demos/05_anti_kazama_suzuki.py
"""
from fractions import Fraction as Fr

from n2vx.coset import _vacuum_clauses, build_antiks, casimir_identity_check, verify_antiks

m = Fr(1)
for convention in ("koszul", "literal"):
    rows = _vacuum_clauses(build_antiks(m, convention))
    bad = [text for _, text, ok in rows if not ok]
    print(f"y sign convention {convention!r}: failing products -> {bad}")

# "h(0) y = 0" fails under either sign; h(0) y = -2y holds, as does h(0) h = 0.
rep = verify_antiks(m, 1)
print(f"\naffine relations at depth 1: passed={rep.passed}, {rep.checks} checks on {rep.details['states']} states")

# On v_{h,q,c} (x) 1 the Casimir built from x(0), y(0), h(0) is a scalar.
for h, q in [(Fr(1, 6), Fr(1, 3)), (Fr(2, 7), Fr(-5, 3))]:
    r = casimir_identity_check(h, q, m)
    print(f"(h,q) = ({h},{q}): Omega = {r.details['scalar']}, expected {r.details['expected']}")
