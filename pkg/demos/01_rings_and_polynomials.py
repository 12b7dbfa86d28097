"""
Rings, elements and polynomials
===============================

Build a few small rings from their text names, do arithmetic, and look at
polynomial functions as tables of values.
"""

import ringforge as rf

# rings are named the same way the command line names them
z6 = rf.ring("Z6")
gf4 = rf.ring("GF(4)")
dual = rf.ring("Z2[x]/(x^2)")
prod = rf.ring("Z3xGF(4)")

for R in (z6, gf4, dual, prod):
    print(R, "order", R.order, "characteristic", R.characteristic)

# GF(4) uses t^2 + t + 1 as its modulus, so t*t = t + 1
t = gf4.generator
print("t*t =", t * t)

# product elements are tuples, arithmetic is componentwise
a = prod((2, (1, 1)))
print(a, "+", a, "=", a + a)

# a polynomial, its values, and its formal derivative
F = rf.poly("x^3+3x^2+2x", z6)
print(F, "->", rf.function_table(F).values)
print("derivative:", F.derivative())

# division by a monic polynomial
x = rf.Polynomial.x(rf.ring("Z2"))
q, r = rf.divrem(x**3, x**2 + x)
print("x^3 = (%s)(x^2+x) + %s" % (q, r))

# zero divisors show up in annihilators
print("Ann(2) in Z6:", [e.value for e in rf.annihilator(z6, 2)])
print("prime subring of GF(4):", [str(e) for e in rf.prime_subring(gf4)])
