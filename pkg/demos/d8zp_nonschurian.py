# A nonschurian S-ring over D8 x Zp, taken apart step by step.
#
# Run with:  python demos/d8zp_nonschurian.py [p]

import sys

from schurrings import constructions as cons
from schurrings.automorphisms import automorphism_group, induced_action, is_schurian
from schurrings.groups import subgroup_generated
from schurrings.srings import a_subgroups, is_tensor, quotient_sring, structure_constant

p = int(sys.argv[1]) if len(sys.argv) > 1 else 5

# -----------------------------------------------------------------------------
# The ring itself
# -----------------------------------------------------------------------------

A = cons.d8zp_sring(p)
G = A.group
sets = cons.d8zp_sets(p)
print(f"group {G.label}, order {G.order}, rank {A.rank}")
for name in ("Z4", "X1", "X3", "Y3", "T1,2"):
    print(f"  {name:5s} size {len(sets[name])}")

x1 = A.class_of_set(sets["X1"])
t12 = A.class_of_set(sets["T1,2"])
print("c(X1, X1 -> T1,2) =", structure_constant(A, x1, x1, t12))
print("A-subgroup orders:", [H.order for H in a_subgroups(A)])

# -----------------------------------------------------------------------------
# The quotient by <a^2> splits as a tensor product and has an extra symmetry
# -----------------------------------------------------------------------------

S = cons.d8zp_quotient_section(G)
Q = quotient_sring(A, S)
Hq = sorted({S.project(h * p) for h in range(8)})
Cq = sorted({S.project(k) for k in range(p)})
print(f"\nquotient rank {Q.rank}, tensor over the two factors: {is_tensor(Q, Hq, Cq)}")

stab = automorphism_group(Q).stabilizer
sigma = cons.sigma_involution(p, S)
print("stabilizer order in the quotient:", stab.order(), " contains sigma:", stab.contains(sigma))

# -----------------------------------------------------------------------------
# ...which no automorphism of A induces
# -----------------------------------------------------------------------------

aut = automorphism_group(A)
N = subgroup_generated(G, [cons.A2 * p])
induced = {induced_action(A, g, N) for g in aut.elements()}
print(f"\n|Aut(A)| = {aut.order()} (just the right translations: {aut.order() == G.order})")
print("sigma induced by some automorphism of A:", sigma in induced)

rep = is_schurian(A, aut)
print("\n".join(rep.lines()))
