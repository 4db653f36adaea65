"""The full decision pipeline, checked against exhaustive enumeration.

A verdict is either a witness point, a certificate of emptiness, or
INCONCLUSIVE when the root test passes but no zero column turns up.
"""

# %%
from collections import Counter

from boolcert import audit, certify, parse, PolySystem
from boolcert.oracle import audit_random

witness = PolySystem.of(2, [parse("x0*x1", 2), parse("x0 - 1", 2)])
v = certify(witness)
print(v.tag.value, v.witness)
for line in v.evidence:
    print("  ", line)

# %%
contradiction = PolySystem.of(2, [parse("x0 + x1 - 3", 2)])
v = certify(contradiction)
print(v.tag.value)
for line in v.evidence:
    print("  ", line)

# %%
# 500 seeded random systems in each mode
for mode in ("quotient", "raw"):
    tally = Counter(rep.classification.value for rep in audit_random(500, 1, mode))
    print(mode, dict(tally))

# %%
# the RAW reading can certify a satisfiable system as empty
gap = PolySystem.of(2, [parse("3*x0 - 2*x1", 2), parse("x0*x1 + 2*x1", 2)])
rep = audit(gap, "raw")
print(rep.classification.value, "-", rep.detail)
print(audit(gap, "quotient").classification.value)
