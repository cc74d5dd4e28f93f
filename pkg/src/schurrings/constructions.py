"""Explicit nonschurian S-ring families over D8 x Zp and Q8 x Zp.

Element layout: ``h * p + k`` stands for ``h c^k`` where ``h`` indexes the
2-group factor (``a^i b^j`` has index ``i + 4j``) and ``c`` is residue 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    Group,
    Section,
    cyclic,
    dihedral,
    direct_product,
    homomorphism_from_images,
    quaternion8,
    quotient,
    subgroup_generated,
)
from .permgroups import Perm, PermGroup
from .srings import SRing, from_partition

# a^i b^j -> i + 4j in both D8 and Q8
E, A, A2, A3, B, AB, A2B, A3B = range(8)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the prime ``p``."""
    if p == 2:
        return 1
    phi = p - 1
    factors = {q for q in range(2, phi + 1) if phi % q == 0 and is_prime(q)}
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


@dataclass(frozen=True)
class CycOrbitSystem:
    """Orbits ``C_1..C_l`` of the index-``l`` subgroup ``M`` of ``Aut(Zp)`` on the nonzero residues.

    ``orbits[i]`` holds ``C_{i+1}``; multiplication by ``g`` sends ``C_i`` to ``C_{i+1}``.
    """

    p: int
    l: int
    m: int
    g: int
    orbits: tuple[tuple[int, ...], ...]

    def C(self, i: int) -> tuple[int, ...]:
        """``C_i`` with 1-based, cyclic index."""
        return self.orbits[(i - 1) % self.l]

    def index_of(self, residue: int) -> int:
        """1-based index ``i`` with ``residue`` in ``C_i``."""
        residue %= self.p
        for i, c in enumerate(self.orbits, 1):
            if residue in c:
                return i
        raise ValueError("zero lies in no nontrivial orbit")

    def shift(self, i: int) -> int:
        return i % self.l + 1

    @property
    def M(self) -> list[int]:
        """Multipliers forming the subgroup ``M``: the ``l``-th power residues."""
        return sorted(pow(self.g, self.l * j, self.p) for j in range(self.m))

    @property
    def W0(self) -> list[int]:
        """The subgroup of ``Aut(Zp)`` containing ``M`` with index 2 over it."""
        h = self.l // 2
        return sorted(pow(self.g, h * j, self.p) for j in range(2 * self.m))


def cyc_orbit_system(p: int, l: int) -> CycOrbitSystem:
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    if (p - 1) % l:
        raise ValueError(f"l = {l} does not divide p - 1 = {p - 1}")
    g = primitive_root(p)
    m = (p - 1) // l
    orbits = tuple(tuple(sorted(pow(g, i + l * j, p) for j in range(m))) for i in range(l))
    return CycOrbitSystem(p, l, m, g, orbits)


def _prod(hs, ks, p: int) -> set[int]:
    return {h * p + k % p for h in hs for k in ks}


# -- D8 x Zp --------------------------------------------------------------------


def d8zp_group(p: int) -> Group:
    return direct_product(dihedral(8), cyclic(p))


def d8zp_sets(p: int) -> dict[str, set[int]]:
    """Named basic sets ``Z_i, X_i, Y_i, T_jk`` of the D8 x Zp family."""
    if p < 5 or not is_prime(p):
        raise ValueError("the D8 x Zp family needs a prime p >= 5")
    c0, c1, cm = [0], [1], [p - 1]
    sets = {
        "Z0": _prod([E], c0, p),
        "Z1": _prod([A2], c0, p),
        "Z2": _prod([AB], c0, p),
        "Z3": _prod([A3B], c0, p),
        "Z4": _prod([A, A3, B, A2B], c0, p),
        "X1": _prod([E, A2], c1, p),
        "X2": _prod([AB, A3B], c1, p),
        "X3": _prod([A, B], c1, p),
        "X4": _prod([A3, A2B], c1, p),
        "Y1": _prod([E, A2], cm, p),
        "Y2": _prod([AB, A3B], cm, p),
        "Y3": _prod([A3, B], cm, p),
        "Y4": _prod([A, A2B], cm, p),
    }
    for k in range(2, p - 1):
        sets[f"T1,{k}"] = _prod([E, A2], [k], p)
        sets[f"T2,{k}"] = _prod([AB, A3B], [k], p)
        sets[f"T3,{k}"] = _prod([A, A3, B, A2B], [k], p)
    return sets


def d8zp_sring(p: int) -> SRing:
    return from_partition(d8zp_group(p), d8zp_sets(p).values())


def d8zp_quotient_section(G: Group) -> Section:
    """``G / A_1`` for ``A_1 = <a^2>``, with ``G = D8 x Zp`` in the standard layout."""
    p = G.order // 8
    return quotient(G, subgroup_generated(G, [A2 * p]))


def sigma_involution(p: int, S: Section | None = None) -> Perm:
    """Involution on ``G/A_1`` swapping ``A_1 a c^k`` with ``A_1 b c^k`` and fixing ``A_1 c^k``, ``A_1 ab c^k``."""
    if p < 5:
        raise ValueError("p must be at least 5")
    S = S or d8zp_quotient_section(d8zp_group(p))
    image = list(range(S.quotient.order))
    for k in range(p):
        x, y = S.project(A * p + k), S.project(B * p + k)
        image[x], image[y] = y, x
    return tuple(image)


# -- Q8 x Zp --------------------------------------------------------------------


def q8zp_group(p: int) -> Group:
    return direct_product(quaternion8(), cyclic(p))


def q8zp_l4_sets(p: int) -> list[set[int]]:
    """``X_0..X_9`` for ``p = 1 mod 4``."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"the l=4 family needs a prime p = 1 mod 4, got {p}")
    O = cyc_orbit_system(p, 4)
    C = O.C
    Cs = range(1, p)
    X = [
        _prod([E], [0], p),
        _prod([A2], [0], p),
        _prod([AB, A3B], [0], p),
        _prod([A, A3, B, A2B], [0], p),
        _prod([E], Cs, p),
        _prod([A2], Cs, p),
        _prod([A, A3], C(2) + C(4), p) | _prod([B, A2B], C(1) + C(3), p),
        _prod([A], C(1), p) | _prod([A3], C(3), p) | _prod([B], C(2), p) | _prod([A2B], C(4), p),
        _prod([A], C(3), p) | _prod([A3], C(1), p) | _prod([B], C(4), p) | _prod([A2B], C(2), p),
        _prod([AB, A3B], Cs, p),
    ]
    return X


def q8zp_l6_sets(p: int) -> list[set[int]]:
    """``Y_0..Y_8`` for ``p = 1 mod 6``."""
    if not is_prime(p) or p % 6 != 1:
        raise ValueError(f"the l=6 family needs a prime p = 1 mod 6, got {p}")
    O = cyc_orbit_system(p, 6)
    C = O.C
    Cs = range(1, p)
    Y = [
        _prod([E], [0], p),
        _prod([A2], [0], p),
        _prod([A, A3, B, A2B, AB, A3B], [0], p),
        _prod([E], Cs, p),
        _prod([A2], Cs, p),
        _prod([A, A3], C(1) + C(4), p) | _prod([B, A2B], C(2) + C(5), p) | _prod([AB, A3B], C(3) + C(6), p),
        _prod([A, A3], C(2) + C(5), p) | _prod([B, A2B], C(3) + C(6), p) | _prod([AB, A3B], C(1) + C(4), p),
        _prod([A], C(3), p) | _prod([A2B], C(4), p) | _prod([AB], C(5), p)
        | _prod([A3], C(6), p) | _prod([B], C(1), p) | _prod([A3B], C(2), p),
        _prod([A], C(6), p) | _prod([A2B], C(1), p) | _prod([AB], C(2), p)
        | _prod([A3], C(3), p) | _prod([B], C(4), p) | _prod([A3B], C(5), p),
    ]
    return Y


def q8zp_l4(p: int) -> SRing:
    return from_partition(q8zp_group(p), q8zp_l4_sets(p))


def q8zp_l6(p: int) -> SRing:
    return from_partition(q8zp_group(p), q8zp_l6_sets(p))


def right_translate(G: Group, elems, g: int) -> set[int]:
    return {G.table[x][g] for x in elems}


def inverse_set(G: Group, elems) -> set[int]:
    return {G.inv[x] for x in elems}


# -- the automorphism groups K1, K2 ---------------------------------------------


def q8_automorphism(a_image: int, b_image: int) -> Perm:
    Q = quaternion8()
    phi = homomorphism_from_images(Q, Q, [A, B], [a_image, b_image])
    if phi is None or sorted(phi) != list(range(8)):
        raise ValueError("images do not define an automorphism of Q8")
    return tuple(phi)


SIGMA1 = q8_automorphism(B, A3)
SIGMA2 = q8_automorphism(A3, B)
SIGMA3 = q8_automorphism(A2B, A3B)


@dataclass(frozen=True)
class Q8Frame:
    sigma1: Perm
    sigma2: Perm
    sigma3: Perm
    U: PermGroup
    V: PermGroup
    U0: PermGroup


def q8_frame() -> Q8Frame:
    from .permgroups import mult

    s1sq = mult(SIGMA1, SIGMA1)
    return Q8Frame(
        SIGMA1, SIGMA2, SIGMA3,
        U=PermGroup(8, [SIGMA1, SIGMA2]),
        V=PermGroup(8, [s1sq, SIGMA2, SIGMA3]),
        U0=PermGroup(8, [s1sq, SIGMA2]),
    )


def product_automorphism(sigma: Perm, t: int, p: int) -> Perm:
    """``(h, c^k) -> (h^sigma, c^(t k))`` on ``Q8 x Zp``."""
    return tuple(sigma[h] * p + (t * k) % p for h in range(8) for k in range(p))


def k_groups(p: int, l: int) -> PermGroup:
    """``K1`` (``l = 4``) or ``K2`` (``l = 6``) acting on the elements of ``Q8 x Zp``.

    ``K1`` pairs ``sigma in U`` with ``tau in W`` so that ``sigma in U0`` iff
    ``tau in W0``; ``K2`` pairs ``V/V0`` with ``W/W0`` sending ``V0 sigma3`` to
    the coset of multiplication by the primitive root.
    """
    from .permgroups import mult

    O = cyc_orbit_system(p, l)
    if l not in (4, 6):
        raise ValueError("l must be 4 or 6")
    ident = tuple(range(8))
    g = O.g
    h = l // 2
    s1sq = mult(SIGMA1, SIGMA1)
    gens = [
        product_automorphism(s1sq, 1, p),
        product_automorphism(SIGMA2, 1, p),
        product_automorphism(ident, pow(g, h, p), p),  # W0 = <g^(l/2)>
    ]
    if l == 4:
        gens.append(product_automorphism(SIGMA1, g, p))
    else:
        gens.append(product_automorphism(SIGMA3, g, p))
    return PermGroup(8 * p, gens)
