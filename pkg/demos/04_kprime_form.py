"""
The Beauville-Bogomolov form of K'
==================================

K' resolves the quotient of K_2(A) by -1.  Its H^2 pairs as t times rational
numbers; integrality and primitivity leave exactly one value of t.
"""

from kumcoh import intlat as il
from kumcoh import kummer4 as k4
from kumcoh import quotientbb as qb

print("admissible t:", qb.scan_t())
sol = qb.solve_fujiki()
print("Fujiki constant c =", sol.c)
for label, row in zip(qb.KPRIME_LABELS, sol.gram):
    print(f"  {label:>10} {row}")
print("odd:", sol.is_odd, " signature:", sol.signature, " discriminant:", il.discr(sol.lattice))

# Only one count of exceptional components keeps the fourth power integral.
print("(e^4 + d E^4)/2 for d = 1, 35, 36:", {d: str(v) for d, v in qb.ddelta_values().items()})

inv = k4.involution_invariants()
print("involution on H^2, H^3, H^4:", inv)
print("balance:", qb.h4_normality_balance(inv))
print("Betti numbers (b2, b3, b4) and Euler characteristic:", qb.kprime_betti(inv))
