"""
How many roots can a polynomial have?
=====================================

Over a product ring a polynomial splits into one polynomial per factor, and
its non-roots follow from the factors' counts. Enumeration over every
polynomial function checks the formula.
"""

import ringforge as rf
from ringforge.roots import (
    achievable_nonroot_counts,
    brute_force_root_counts,
    feasible_root_counts_squarefree,
    nonroot_count,
    nonroot_count_inclusion_exclusion,
)

z6 = rf.ring("Z6")
rep = brute_force_root_counts(z6)
print("Z6 achievable root counts:", sorted(rep.achievable_counts))
print("Z6 unachievable:", sorted(rep.unachievable))
for count, P in rep.per_count_witness.items():
    print(f"   {count} roots: {P}")

# Z6 = Z3 x Z2, so non-roots are 2*a1 + 3*a2 - a1*a2
print("\nformula:", sorted(achievable_nonroot_counts((3, 2), (range(4), range(3)))))
print("closed form vs expansion at (1,1):", nonroot_count((3, 2), (1, 1)), nonroot_count_inclusion_exclusion((3, 2), (1, 1)))

print("\nsquarefree n=30, unachievable:", sorted(feasible_root_counts_squarefree(30).unachievable))

# factors with zero divisors: enumeration gives a subset of what the formula allows
for name in ("Z4", "Z2", "Z4xZ2"):
    r = brute_force_root_counts(rf.ring(name))
    print(f"{name:6} non-root counts {sorted(r.achievable_nonroot_counts)}")
