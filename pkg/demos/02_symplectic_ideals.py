"""
Plane sums in the group algebra of a symplectic F_q-space
=========================================================

The divisibility of classes supported at 3-torsion points reduces to linear
algebra in k[V], V = F_q^4.  Here are the dimensions for small q.
Pass "5" on the command line to include q = 5 (about half a minute).
"""

import sys

from kumcoh import sympfin as sf

qs = [2, 3] + ([5] if "5" in sys.argv[1:] else [])

for q in qs:
    c = sf.plane_counts(q)
    print(f"q={q}: {c.planes} planes, {c.isotropic} isotropic, {c.nonisotropic} non-isotropic")
    dims = sf.ideal_dims(q)
    print(f"      dim (N) = {dims.dim_N}, dim D = {dims.dim_D}, (M) = (N): {dims.m_equals_n}")
    comb = sf.combined_dims(q)
    print(f"      dim O = {comb.dim_O}, dim U = {comb.dim_U}")

# Over F_2 the planes are triples {x, y, x+y}; the group G_xi splits them.
orbits = sf.gxi_orbits()
print("G_xi orbit sizes on the 35 planes of F_2^4:", [len(o) for o in orbits])
print("the five-element orbit:", sorted(sorted(t) for t in orbits[0]))
