"""
The lattice of icosahedron edge midpoints
=========================================

M is the Z-span of the 30 midpoints; c is the half-turn about the z-axis.
"""

from tracelab.lattice import (ROT_A, ROT_C, coinvariants, free_quotient_action, midpoint_lattice,
                              neighbor_sum_factor, verify_midpoint_lattice)

M = midpoint_lattice()
print("rank", M.rank, "denominator", M.denominator)

# coinvariants M / (1 - c) M
print("H0(C, M) =", coinvariants(M, ROT_C))
print("a on the free quotient:", free_quotient_action(M, ROT_C, ROT_A))

# the eight neighbouring midpoints of an edge add up to a fixed multiple of it
print("neighbour sum factor:", neighbor_sum_factor().pretty())

for name, ok in verify_midpoint_lattice()["checks"].items():
    print(f"  {name:<26} {'ok' if ok else 'FAILS'}")
