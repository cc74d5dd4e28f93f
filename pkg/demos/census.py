# Every S-ring over a few groups of order 8, with its schurity verdict.

from schurrings.enumeration import enumerate_srings, schurity_census
from schurrings.groups import cyclic, dihedral, direct_product, quaternion8

for G in (cyclic(8), dihedral(8), quaternion8(), direct_product(cyclic(4), cyclic(2))):
    rep = schurity_census(G)
    print("  ".join(rep.lines()))

print("\nS-rings over Q8 by rank:")
for A in enumerate_srings(quaternion8()):
    print(f"  rank {A.rank}: {A.classes}")
