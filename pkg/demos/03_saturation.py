"""Symmetrized products: multiply every moved copy of a polynomial together.

The product vanishes at a point exactly when some moved copy does, and the
number of terms never exceeds n^c for an n-term polynomial.
"""

# %%
from boolcert import build_g, evaluate, parse, PolySystem, stabilizer
from boolcert.saturation import term_bound

f_sys = PolySystem.of(2, [parse("x0*x1", 2), parse("x0 - 1", 2)])
_, destab = stabilizer(f_sys)
sat = build_g(f_sys, destab)
print("destabilizer:", [str(s) for s in destab.members])
for (name, f), g in zip(f_sys.polys, sat.g_polys):
    print(f"{name}: {f}  ->  {g}   terms {g.term_count} <= {term_bound(f.term_count, destab.c)}")

# %%
# pointwise check of the vanishing characterization
import itertools

for b in itertools.product((0, 1), repeat=2):
    for f, g in zip(f_sys.polynomials, sat.g_polys):
        moved = any(not evaluate(f, s.act_on_point(b)) for s in destab.members)
        assert (not evaluate(g, b)) == moved
print("vanishing characterization holds on {0,1}^2")
