"""A univariate polynomial in the ideal, with cofactors that prove membership.

QUOTIENT mode works modulo the field equations, where p is one of
1, x, x - 1, x(x - 1).  RAW mode works with plain polynomials and a degree
cap, and can produce roots outside {0, 1}.
"""

# %%
from boolcert import eliminate_univariate, MultilinearPoly, parse, PolySystem
from boolcert.saturation import saturate

f_sys = PolySystem.of(2, [parse("x0*x1", 2), parse("x0 - 1", 2)])
sat = saturate(f_sys)
res = eliminate_univariate(sat, var=0)
print("p       =", res.p)
print("roots   =", [str(b) for b in res.beta])
print("h       =", [str(h) for h in res.cofactors])

total = MultilinearPoly.zero(2)
for h, g in zip(res.cofactors, sat.g_polys):
    total = total + h * g
print("sum h*g =", total)

# %%
# the same system read as plain polynomials
raw = eliminate_univariate(sat, var=0, mode="raw")
print("RAW p   =", raw.p, " roots", [str(b) for b in raw.beta])

# %%
# a system whose plain ideal has a non-Boolean root
gap = PolySystem.of(2, [parse("3*x0 - 2*x1", 2), parse("x0*x1 + 2*x1", 2)])
raw = eliminate_univariate(gap, var=0, mode="raw")
print("RAW p   =", raw.p, " roots", [str(b) for b in raw.beta])
quot = eliminate_univariate(gap, var=0)
print("QUOT p  =", quot.p, " roots", [str(b) for b in quot.beta])
