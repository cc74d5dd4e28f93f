# Looking for a regular copy of Q8 inside permutation groups of degree 8.

from schurrings.automorphisms import automorphism_group
from schurrings.groups import cyclic, dihedral, quaternion8
from schurrings.permgroups import find_regular_subgroup, format_perm, right_regular_rep
from schurrings.srings import trivial_sring

Q = quaternion8()

# Aut of the trivial S-ring over any group of order 8 is Sym(8)
sym8 = automorphism_group(trivial_sring(dihedral(8)))
print("|Sym(8)| =", sym8.order())
phi = find_regular_subgroup(sym8, Q)
print("regular Q8 in Sym(8):")
for h in (1, 4):
    print(f"  {h} -> {format_perm(phi[h])}")

for G in (cyclic(8), dihedral(8), Q):
    found = find_regular_subgroup(right_regular_rep(G), Q) is not None
    print(f"regular Q8 inside the regular representation of {G.label}: {found}")
