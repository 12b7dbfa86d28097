"""
Vanishing polynomials
=====================

A polynomial vanishes on a ring when it is zero at every element. Three
rings, three ways to tell.
"""

import ringforge as rf
from ringforge.vanishing import (
    field_generator,
    find_nonroot,
    generator_quotient,
    is_vanishing,
    minimal_monic_vanishing_degree,
    zn_vanishing_criterion,
    zp_x2_split,
    zp_x2_criterion,
)

# Over Z_n: rewrite in the falling-factorial basis, then check n | c_k k!
z6 = rf.ring("Z6")
for text in ("x^3+3x^2+2x", "3x^2+3x", "x^2+x"):
    F = rf.poly(text, z6)
    ok, c = zn_vanishing_criterion(F)
    print(f"Z6  {text:12} c={c}  criterion={ok}  exhaustive={is_vanishing(F)}")

# Over a field every vanishing polynomial is a multiple of x^q - x
gf4 = rf.ring("GF(4)")
V = field_generator(gf4)
print("\nGF(4) generator:", V)
G = V * rf.poly("x^2+t", gf4)
print("G =", G, " G / V =", generator_quotient(G))

# Over Z_p[t]/(t^2): split G = J + t*K, then J, K and J' must all vanish
dual = rf.ring("Z2[x]/(x^2)")
for text in ("t*x^2+t*x", "x^4+x^2", "x^2+x"):
    G = rf.poly(text, dual)
    s = zp_x2_split(G)
    print(f"\n{text}: J={s.J}  K={s.K}  J'={s.J.derivative()}  vanishes={zp_x2_criterion(G)}")
    bad = find_nonroot(G)
    if bad:
        print("   nonzero at", bad[0], "value", bad[1])

# the lowest degree of a monic vanishing polynomial
print()
for name in ("Z2", "Z6", "Z8", "GF(4)", "Z2xZ2", "Z2[x]/(x^3+x^4)"):
    m, W = minimal_monic_vanishing_degree(rf.ring(name))
    print(f"{name:16} degree {m}: {W}")
