"""Which variable permutations leave a system unchanged?

The independent-set encodings of small graphs make this concrete: the
stabilizer of the edge system contains the graph's automorphisms.
"""

# %%
from boolcert import encode_graph, stabilizer

triangle = encode_graph([(0, 1), (1, 2), (0, 2)], 3)
path = encode_graph([(0, 1), (1, 2)], 3)

for label, f_sys in [("triangle", triangle), ("path", path)]:
    stab, destab = stabilizer(f_sys)
    print(f"{label}: |Stab| = {destab.stab_order}, c = {destab.c}")
    print("  stabilizer  ", " ".join(map(str, stab)))
    print("  destabilizer", " ".join(map(str, destab.members)))

# %%
# the variety is closed under the stabilizer
from boolcert import brute_force

points = set(brute_force(path).points)
stab, _ = stabilizer(path)
for sigma in stab:
    print(sigma, sorted(sigma.act_on_point(b) for b in points) == sorted(points))

# %%
# a full scan of Sigma_8 is still quick
import time

from boolcert import parse, PolySystem

big = PolySystem.of(8, [parse("x0*x1 + x2*x3 - x4", 8), parse("x5 + x6*x7 - 1", 8)])
start = time.perf_counter()
_, destab = stabilizer(big)
print(f"Sigma_8: |Stab| = {destab.stab_order}, c = {destab.c}, {time.perf_counter() - start:.2f}s")
