"""Every acceptance check, run as one batch.

Each check returns ``(passed, detail)``; :func:`run_paper_suite` runs all
of them in order.
"""

from __future__ import annotations

import random
import time
from typing import Callable

from . import constructions as cons
from .automorphisms import automorphism_group, cyclotomic, is_schurian, transitivity_module, translate_property_holds
from .cyclotomy import sweep
from .enumeration import enumerate_srings, schurity_census, wl_closure
from .groups import Group, cyclic, dihedral, direct_product, quaternion8
from .permgroups import PermGroup, find_regular_subgroup, mult, right_regular_rep
from .srings import (
    SRing,
    full_sring,
    is_algebraic_isomorphism,
    is_tensor,
    power_map,
    quotient_sring,
    triangle_identity_holds,
    trivial_sring,
)

Check = Callable[[], tuple[bool, str]]


def random_element(gens, degree: int, rng: random.Random, steps: int = 24):
    g = tuple(range(degree))
    for _ in range(steps):
        g = mult(g, rng.choice(gens))
    return g


def ring_properties(A: SRing, samples: int = 100, seed: int = 0) -> tuple[bool, str]:
    """Triangle identity, translate property, orbit refinement and the transitivity module of ``Aut(A)``."""
    if not triangle_identity_holds(A):
        return False, "triangle identity"
    aut = automorphism_group(A)
    rng = random.Random(seed)
    for _ in range(samples):
        alpha = random_element(aut.generators, A.group.order, rng)
        X = rng.randrange(A.rank)
        y = rng.randrange(A.group.order)
        if not translate_property_holds(A, alpha, X, y):
            return False, f"translate property at X={X} y={y}"
    where = {x: k for k, c in enumerate(A.classes) for x in c}
    for orb in aut.stabilizer.orbits():
        if len({where[x] for x in orb}) != 1:
            return False, "stabilizer orbit crosses basic sets"
    V = transitivity_module(aut, A.group)
    if not is_schurian(V).schurian:
        return False, "transitivity module is not schurian"
    return True, "ok"


def check_d8zp(primes=(5, 7, 11, 13)) -> tuple[bool, str]:
    parts = []
    ok = True
    for p in primes:
        t = time.monotonic()
        A = cons.d8zp_sring(p)
        rep = is_schurian(A)
        good = not rep.schurian and A.rank == 13 + 3 * (p - 3)
        ok &= good
        parts.append(f"p={p}:rank={A.rank}:{'nonschurian' if not rep.schurian else 'SCHURIAN'}:{time.monotonic() - t:.1f}s")
    return ok, " ".join(parts)


def check_quotient_tensor(primes=(5, 7)) -> tuple[bool, str]:
    parts = []
    ok = True
    for p in primes:
        G = cons.d8zp_group(p)
        S = cons.d8zp_quotient_section(G)
        Q = quotient_sring(cons.d8zp_sring(p), S)
        Hq = sorted({S.project(h * p) for h in range(8)})
        Cq = sorted({S.project(k) for k in range(p)})
        tensor = is_tensor(Q, Hq, Cq)
        stab = automorphism_group(Q).stabilizer
        sigma = cons.sigma_involution(p, S)
        good = tensor and stab.order() == 2 and stab.contains(sigma) and sigma != tuple(range(len(sigma)))
        ok &= good
        parts.append(f"p={p}:tensor={tensor}:stabilizer_order={stab.order()}")
    return ok, " ".join(parts)


def check_q8zp(cases=((4, 5), (4, 13), (6, 7), (6, 13))) -> tuple[bool, str]:
    parts = []
    ok = True
    for l, p in cases:
        A = cons.q8zp_l4(p) if l == 4 else cons.q8zp_l6(p)
        rep = is_schurian(A)
        ok &= not rep.schurian
        parts.append(f"l={l}:p={p}:{'nonschurian' if not rep.schurian else 'SCHURIAN'}")
    return ok, " ".join(parts)


def check_fusion(cases=((4, 5), (4, 13), (6, 7), (6, 13))) -> tuple[bool, str]:
    parts = []
    ok = True
    for l, p in cases:
        sets = cons.q8zp_l4_sets(p) if l == 4 else cons.q8zp_l6_sets(p)
        fused = [s for i, s in enumerate(sets) if i not in (7, 8)] + [sets[7] | sets[8]]
        K = cons.k_groups(p, l)
        C = cyclotomic(K, cons.q8zp_group(p))
        same = sorted(tuple(sorted(s)) for s in fused) == C.classes
        sch = is_schurian(C).schurian
        ok &= same and sch
        parts.append(f"l={l}:p={p}:orbits_match={same}:schurian={sch}")
    return ok, " ".join(parts)


def check_cyclotomy(pmax: int = 200) -> tuple[bool, str]:
    failed = [r for l in (4, 6) for r in sweep(l, pmax) if not r.ok]
    if not failed:
        return True, "all primes ok"
    return False, "failed: " + "; ".join(f"l={r.l}:p={r.p}:" + ",".join(k for k, v in r.verdicts.items() if not v) for r in failed)


def check_census() -> tuple[bool, str]:
    parts = []
    ok = True
    for G in (dihedral(8), quaternion8(), cyclic(8)):
        rep = schurity_census(G)
        ok &= rep.nonschurian == 0
        parts.append(f"{G.label}:total={rep.total}:nonschurian={rep.nonschurian}")
    return ok, " ".join(parts)


def abelian_groups(n_max: int = 24) -> list[Group]:
    """One group from each isomorphism class of abelian groups of order <= ``n_max``."""
    invariants = [
        (2, 2), (2, 4), (2, 2, 2), (3, 3), (2, 6), (4, 4), (2, 8), (2, 2, 4), (2, 2, 2, 2),
        (3, 6), (2, 10), (2, 12), (2, 2, 6),
    ]
    out = [cyclic(n) for n in range(1, n_max + 1)]
    for factors in invariants:
        G = cyclic(factors[0])
        for f in factors[1:]:
            G = direct_product(G, cyclic(f))
        if G.order <= n_max:
            out.append(G)
    return out


def sample_rings(G: Group, seed: int = 0, count: int = 4) -> list[SRing]:
    """All S-rings when ``|G| <= 12``; otherwise trivial, full, the rational ring and some random closures."""
    if G.order <= 12:
        return enumerate_srings(G)
    from .groups import automorphism_group as group_aut

    rng = random.Random(seed)
    rings = [trivial_sring(G), full_sring(G), cyclotomic(group_aut(G), G)]
    for _ in range(count):
        label = {0: -1}
        for x in range(1, G.order):
            if x not in label:
                label[x] = label[G.inv[x]] = rng.randrange(3)
        parts: dict[int, list[int]] = {}
        for x, k in label.items():
            parts.setdefault(k, []).append(x)
        rings.append(wl_closure(G, parts.values()))
    return rings


def check_power_maps(n_max: int = 24) -> tuple[bool, str]:
    from math import gcd

    checked = 0
    for G in abelian_groups(n_max):
        for A in sample_rings(G):
            for m in range(1, max(G.order, 2)):
                if gcd(m, G.order) != 1:
                    continue
                if not is_algebraic_isomorphism(power_map(A, m)):
                    return False, f"{A!r} m={m}"
                checked += 1
    return True, f"{checked} power maps"


def criterion_rings() -> list[SRing]:
    """Every ring built or enumerated by the other checks."""
    rings = [cons.d8zp_sring(p) for p in (5, 7, 11, 13)]
    for p in (5, 7):
        A = cons.d8zp_sring(p)
        rings.append(quotient_sring(A, cons.d8zp_quotient_section(A.group)))
    rings += [cons.q8zp_l4(5), cons.q8zp_l4(13), cons.q8zp_l6(7), cons.q8zp_l6(13)]
    for l, p in ((4, 5), (4, 13), (6, 7), (6, 13)):
        rings.append(cyclotomic(cons.k_groups(p, l), cons.q8zp_group(p)))
    for l in (4, 6):
        for p in range(l + 1, 200):
            if cons.is_prime(p) and p % l == 1:
                O = cons.cyc_orbit_system(p, l)
                M = PermGroup(p, [tuple((t * x) % p for x in range(p)) for t in O.M])
                rings.append(cyclotomic(M, cyclic(p)))
    for G in (dihedral(8), quaternion8(), cyclic(8)):
        rings += enumerate_srings(G)
    return rings


def check_properties() -> tuple[bool, str]:
    rings = criterion_rings()
    for A in rings:
        good, why = ring_properties(A)
        if not good:
            return False, f"{A!r}: {why}"
    good, why = check_power_maps()
    return good, f"{len(rings)} rings; {why}"


def check_regular_subgroup() -> tuple[bool, str]:
    Q = quaternion8()
    sym8 = automorphism_group(trivial_sring(dihedral(8)))
    found = find_regular_subgroup(sym8, Q) is not None
    none = find_regular_subgroup(right_regular_rep(cyclic(8)), Q) is None
    return found and none, f"in_sym8={found} absent_in_Z8={none}"


CHECKS: list[tuple[int, str, Check]] = [
    (1, "d8zp_nonschurian", check_d8zp),
    (2, "quotient_tensor_and_sigma", check_quotient_tensor),
    (3, "q8zp_nonschurian", check_q8zp),
    (4, "k_group_fusion", check_fusion),
    (5, "cyclotomy_sweep", check_cyclotomy),
    (6, "census", check_census),
    (7, "property_suites", check_properties),
    (8, "regular_subgroup", check_regular_subgroup),
]


def run_paper_suite() -> list[tuple[int, str, bool, str]]:
    return [(num, name, *fn()) for num, name, fn in CHECKS]
