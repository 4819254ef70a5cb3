"""
Cohomology of the torus and of its Hilbert square
==================================================

Start with the exterior algebra H*(A) of a complex 2-torus, build the Fock
space on it, and read off the integral basis of H*(A^[2]).
"""

from fractions import Fraction

from kumcoh import fock
from kumcoh import torusring as tr

# The torus ring: 16 monomials in a1..a4, graded-commutative.
print("Betti numbers of A:", tr.betti_numbers())
print("a1 a2 =", tr.a(1) * tr.a(2), "  a2 a1 =", tr.a(2) * tr.a(1))

# Nakajima states are creation words applied to the vacuum.  Two points at
# the class of a point, paired against the unit of A^[2]:
two_points = fock.state((1, tr.X), (1, tr.X))
print("integral of q1(x)^2|0> over A^[2]:", fock.integral(two_points))

# The boundary operator d multiplies by the class of the exceptional divisor.
print("d.1 on A^[2]:", fock.apply_mult_word(fock.MultWord.D(), fock.unit(2)))

# Goettsche's formula and the size of the integral basis.
rows = fock.hilb_basis_a2()
print("Betti numbers of A^[2]:", fock.goettsche_betti(2), "basis size:", len(rows))

# Poincare pairing block by block; every block is unimodular.
for d, info in fock.a2_block_report().items():
    print(f"  degrees {d}/{8 - d}: size {info['size']}, det {info['det']}")

# A pair of odd classes.
a, s = tr.a, tr.astar
print("<q2(a1), q2(a1*)> =", fock.vacuum_pairing(fock.state((2, a(1))), fock.state((2, s(1)))))

# Restricting to the Kummer fourfold K_2(A) inside A^[3].
e4 = fock.integral(fock.apply_mult_word(fock.kummer_word() * fock.MultWord.D() ** 4, fock.unit(3)))
print("e^4 on K_2(A):", e4)
half = Fraction(1, 2)
p = fock.kummer_pairing(fock.state((2, a(1)), (1, tr.ONE), coeff=half), fock.state((2, s(1)), (1, tr.ONE)))
print("an odd pairing on K_2(A):", p)
