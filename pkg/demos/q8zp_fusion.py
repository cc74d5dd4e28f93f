# The Q8 x Zp families and the automorphism groups whose orbits fuse two basic sets.

from schurrings import constructions as cons
from schurrings.automorphisms import cyclotomic, is_schurian

for l, p in [(4, 5), (4, 13), (6, 7), (6, 13)]:
    A = cons.q8zp_l4(p) if l == 4 else cons.q8zp_l6(p)
    sets = cons.q8zp_l4_sets(p) if l == 4 else cons.q8zp_l6_sets(p)
    rep = is_schurian(A)
    print(f"l={l} p={p}: rank {A.rank}, |Aut| = {rep.aut_order}, "
          f"{'schurian' if rep.schurian else 'nonschurian'}")

    # orbits of K on Q8 x Zp: the two sets 7 and 8 merge, everything else stays
    K = cons.k_groups(p, l)
    fused = [s for i, s in enumerate(sets) if i not in (7, 8)] + [sets[7] | sets[8]]
    C = cyclotomic(K, A.group)
    same = C.classes == sorted(tuple(sorted(s)) for s in fused)
    print(f"    |K| = {K.order()}, orbits = fused partition: {same}, "
          f"cyc(K) schurian: {is_schurian(C).schurian}")

# the automorphisms of Q8 used to build K
F = cons.q8_frame()
print("\n|U| =", F.U.order(), " |V| =", F.V.order(), " |U0| =", F.U0.order())
