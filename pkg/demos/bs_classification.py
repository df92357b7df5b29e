"""Baumslag-Solitar groups as G(A, L) with n = 1.

BS(p, q) is the datum A = (q/p), L = pZ. The isomorphism engine should agree
with the classical criterion {p', q'} = {e p, e q} for e = +1 or -1.
"""

import itertools

from lmg import GroupDatum, abelianization, bs_classify, coarse_class, decide_iso
from lmg.iso import build_generator_map

# A few groups and their coarse invariants
for p, q in [(1, 1), (1, 2), (2, 3), (2, 4), (3, -3)]:
    G = GroupDatum.bs(p, q)
    print(f"BS({p},{q}):", coarse_class(G), " ab =", abelianization(G))

# Sweep a small grid and count how often the engine agrees with the criterion
values = (1, -1, 2, -2, 3)
agree = total = 0
kinds = {}
for p, q, pb, qb in itertools.product(values, repeat=4):
    v = decide_iso(GroupDatum.bs(p, q), GroupDatum.bs(pb, qb))
    total += 1
    agree += v.is_iso == bs_classify(p, q, pb, qb)
    key = v.certificate.kind if v.certificate else f"witness {v.witness.to_json()['condition']}"
    kinds[key] = kinds.get(key, 0) + 1

print(f"\nagreement: {agree}/{total}")
for k, c in sorted(kinds.items()):
    print(f"  {k:15s} {c}")

# An isomorphism witness for BS(2,3) and BS(3,2), and the induced map on generators
G1, G2 = GroupDatum.bs(2, 3), GroupDatum.bs(3, 2)
v = decide_iso(G1, G2)
print("\nBS(2,3) vs BS(3,2):", v.verdict, v.witness.to_json())
m = build_generator_map(G1, G2, v.witness)
print("  x ->", m.x_images[0], "  t ->", m.t_image)
