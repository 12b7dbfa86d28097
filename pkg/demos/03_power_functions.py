"""
When is r -> r^m a lower-degree polynomial?
===========================================

s(R) is the least m for which the power map r -> r^m agrees with some
polynomial of degree below m. Restricting the coefficients to the prime
subring gives a second number, computed here two ways.
"""

import sys

import ringforge as rf
from ringforge.snumber import (
    bound_n,
    check_eq1_identity,
    s_of_ring,
    s_subring,
    z2_quotient_ring,
)

for name in ("Z2", "Z4", "Z6", "GF(4)", "Z2[x]/(x^2)", "Z2xZ3"):
    R = rf.ring(name)
    s = s_of_ring(R)
    print(f"s({name}) = {s.value}, via {s.witness}")

# the rings Z_2[t]/(t^a + t^(a+1))
for a in (3, 4):
    R = z2_quotient_ring(a)
    res = s_of_ring(R, max_m=8)
    print(f"\na = {a}: s = {res.value}, witness {res.witness}")
    for m, examined, found in res.transcript:
        print(f"   m={m}: {examined} coefficient tuples, {'found' if found else 'none'}")
    print("   quartic identity vanishes:", check_eq1_identity(a))

# over prime characteristic the restricted number is a span question mod p
print()
for name in ("GF(4)", "Z2[x]/(x^2)", "GF(8)", "Z2xZ2"):
    R = rf.ring(name)
    lin = s_subring(R, method="linear")
    brute = s_subring(R, method="exhaustive")
    print(f"s(R';{name}) = {lin.value} (linear algebra), {brute.value} (exhaustive)")

# the bound is big enough to trip Python's int-to-str guard
sys.set_int_max_str_digits(0)
n = bound_n(4)
print("\nbound_n(4) = 24^16384 has", len(str(n)), "digits")
