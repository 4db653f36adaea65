"""Arithmetic in the Boolean quotient ring with Gaussian rational coefficients.

Every variable squares to itself, so products only ever union monomial
supports, and evaluation on {0,1}^N agrees with the unreduced polynomial.
"""

# %%
from boolcert import GaussianRational, MultilinearPoly, evaluate, parse

n = 3
f = parse("x0 + i*x1 - 1/2", n)
g = parse("x0*x2 - x1", n)
print("f      =", f)
print("g      =", g)
print("f * g  =", f * g)
print("f^2    =", f ** 2)

# %%
# x^k collapses to x while parsing
print(parse("x0^3*x1^2 - x0*x1", n))

# %%
# evaluation commutes with the ring operations on Boolean points
for point in [(0, 0, 0), (1, 0, 1), (1, 1, 1)]:
    lhs = evaluate(f * g, point)
    rhs = evaluate(f, point) * evaluate(g, point)
    print(point, lhs, rhs, lhs == rhs)

# %%
# coefficients stay exact and normalized
z = GaussianRational("1/3", -2) * GaussianRational(0, 1)
print(z, z.re, z.im)
print(MultilinearPoly.variable(n, 2) * z)
