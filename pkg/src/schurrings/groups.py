"""Finite groups given by explicit multiplication tables.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.
Direct products use the layout ``(i, j) -> i * |G2| + j``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .config import LIMITS, CapExceeded


class NotNormalError(ValueError):
    """Raised when a quotient is requested by a non-normal subgroup."""

    def __init__(self, n: int, g: int, conj: int):
        self.witness = (n, g, conj)
        super().__init__(f"not normal: g^-1 * {n} * g = {conj} for g = {g}")


@dataclass(eq=False)
class Group:
    mul: np.ndarray
    label: str = "G"
    names: list[str] | None = None

    def __post_init__(self):
        self.mul = np.asarray(self.mul, dtype=np.int64)
        n = self.mul.shape[0]
        if self.mul.shape != (n, n) or n == 0:
            raise ValueError("multiplication table must be a nonempty square")
        if self.mul.min() < 0 or self.mul.max() >= n:
            raise ValueError("table entry out of range")
        if not (np.array_equal(self.mul[0], np.arange(n)) and np.array_equal(self.mul[:, 0], np.arange(n))):
            raise ValueError("element 0 must be the identity")
        self.mul.setflags(write=False)
        self.table: list[list[int]] = self.mul.tolist()
        inv = np.argmax(self.mul == 0, axis=1)
        if not np.all(self.mul[np.arange(n), inv] == 0):
            raise ValueError("some element has no inverse")
        self.inv: list[int] = inv.tolist()

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    def m(self, *xs: int) -> int:
        """Product of the given elements, left to right."""
        r = 0
        for x in xs:
            r = self.table[r][x]
        return r

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        r = 0
        for _ in range(k):
            r = self.table[r][x]
        return r

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = self.table[y][x]
            k += 1
        return k

    def order_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for x in range(self.order):
            k = self.element_order(x)
            census[k] = census.get(k, 0) + 1
        return dict(sorted(census.items()))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def center(self) -> list[int]:
        return [x for x in range(self.order) if np.array_equal(self.mul[x], self.mul[:, x])]

    def is_associative(self) -> bool:
        # (xy)z == x(yz) for all triples, vectorised over y and z
        M = self.mul
        for x in range(self.order):
            if not np.array_equal(M[M[x]], M[x][M]):
                return False
        return True

    def check(self) -> None:
        """Exhaustively verify the group axioms of the table."""
        if not self.is_associative():
            raise ValueError(f"{self.label}: table is not associative")


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    @property
    def _set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def is_normal(self) -> bool:
        return normality_witness(self.parent, self.elements) is None


@dataclass
class Section:
    """The quotient ``B/A`` together with the projection from ``B``."""

    B: Subgroup
    A: Subgroup
    quotient: Group
    projection: list[int]  # indexed by elements of the parent group, -1 outside B
    cosets: list[tuple[int, ...]] = field(default_factory=list)

    def project(self, x: int) -> int:
        p = self.projection[x]
        if p < 0:
            raise ValueError(f"element {x} is not in the section's upper subgroup")
        return p


# -- constructors -----------------------------------------------------------


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic group needs n >= 1")
    idx = np.arange(n)
    return Group((idx[:, None] + idx[None, :]) % n, label=f"C{n}",
                 names=[f"c^{i}" if i else "e" for i in range(n)])


def _word(a: str, i: int, b: str, j: int) -> str:
    s = ""
    if i:
        s += a if i == 1 else f"{a}^{i}"
    if j:
        s += b
    return s or "e"


def dihedral(n: int) -> Group:
    """Dihedral group of order ``n``; ``r^i s^j`` has index ``i + (n/2) j``."""
    if n < 4 or n % 2:
        raise ValueError("dihedral group order must be even and at least 4")
    h = n // 2
    M = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        i, j = x % h, x // h
        for y in range(n):
            k, l = y % h, y // h
            M[x, y] = (i + (-k if j else k)) % h + h * ((j + l) % 2)
    return Group(M, label=f"D{n}", names=[_word("a", x % h, "b", x // h) for x in range(n)])


def quaternion8() -> Group:
    """``<a, b | a^4 = e, a^2 = b^2, a^b = a^-1>``; ``a^i b^j`` has index ``i + 4j``."""
    M = np.empty((8, 8), dtype=np.int64)
    for x in range(8):
        i, j = x % 4, x // 4
        for y in range(8):
            k, l = y % 4, y // 4
            e = i + (-k if j else k) + (2 if j and l else 0)
            M[x, y] = e % 4 + 4 * ((j + l) % 2)
    return Group(M, label="Q8", names=[_word("a", x % 4, "b", x // 4) for x in range(8)])


def direct_product(G1: Group, G2: Group, max_order: int | None = None) -> Group:
    cap = LIMITS.max_order if max_order is None else max_order
    n1, n2 = G1.order, G2.order
    if n1 * n2 > cap:
        raise CapExceeded(f"direct product order {n1 * n2} exceeds cap {cap}")
    M = G1.mul[:, None, :, None] * n2 + G2.mul[None, :, None, :]
    names = None
    if G1.names or G2.names:
        names = []
        for i in range(n1):
            for j in range(n2):
                a, b = G1.name(i), G2.name(j)
                names.append("e" if a == b == "e" else (b if a == "e" else a if b == "e" else a + b))
    return Group(M.reshape(n1 * n2, n1 * n2), label=f"{G1.label}x{G2.label}", names=names)


def g16() -> Group:
    """Central product of D8 and Z4, realised as ``(D8 x Z4) / <(a^2, z^2)>``."""
    D = dihedral(8)
    P = direct_product(D, cyclic(4))
    a2 = 2  # a^2 in D8
    N = subgroup_generated(P, [a2 * 4 + 2])
    G = quotient(P, N).quotient
    G.label = "G16"
    return G


def group_from_spec(spec: str) -> Group:
    """Parse ``C<n>``, ``D<n>``, ``Q8``, ``G16`` and ``x``-joined products."""
    parts = spec.strip().split("x")
    if not spec.strip() or any(not p for p in parts):
        raise ValueError(f"malformed group spec {spec!r}")
    G = None
    for part in parts:
        if part == "Q8":
            H = quaternion8()
        elif part == "G16":
            H = g16()
        elif m := re.fullmatch(r"C(\d+)", part):
            H = cyclic(int(m.group(1)))
        elif m := re.fullmatch(r"D(\d+)", part):
            H = dihedral(int(m.group(1)))
        else:
            raise ValueError(f"unknown group factor {part!r} in {spec!r}")
        G = H if G is None else direct_product(G, H)
    return G


def dump_group(G: Group) -> str:
    lines = [str(G.order)]
    lines += [" ".join(map(str, row)) for row in G.table]
    return "\n".join(lines) + "\n"


def load_group(text: str, label: str = "G") -> Group:
    rows = [r.split() for r in text.strip().splitlines()]
    n = int(rows[0][0])
    M = np.array([[int(v) for v in r] for r in rows[1:]], dtype=np.int64)
    if M.shape != (n, n):
        raise ValueError("table size does not match the stated order")
    return Group(M, label=label)


# -- subgroups and quotients ------------------------------------------------


def closure(G: Group, elems: Iterable[int]) -> list[int]:
    gens = sorted(set(elems) - {0})
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = G.table[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def subgroup_generated(G: Group, elems: Iterable[int]) -> Subgroup:
    return Subgroup(G, tuple(closure(G, elems)))


def is_subgroup(G: Group, elems: Iterable[int]) -> bool:
    s = set(elems)
    if 0 not in s:
        return False
    return all(G.table[x][y] in s for x in s for y in s)


def normality_witness(G: Group, elems: Sequence[int]) -> tuple[int, int, int] | None:
    s = set(elems)
    for g in range(G.order):
        gi = G.inv[g]
        for n in elems:
            c = G.m(gi, n, g)
            if c not in s:
                return n, g, c
    return None


def section(G: Group, B: Subgroup, A: Subgroup) -> Section:
    """Build ``B/A``; cosets are numbered by their smallest element."""
    if not set(A.elements) <= set(B.elements):
        raise ValueError("lower subgroup is not contained in upper subgroup")
    Bset = set(B.elements)
    for n in A.elements:
        for g in B.elements:
            c = G.m(G.inv[g], n, g)
            if c not in A._set:
                raise NotNormalError(n, g, c)
    projection = [-1] * G.order
    cosets: list[tuple[int, ...]] = []
    for x in B.elements:
        if projection[x] >= 0:
            continue
        coset = tuple(sorted(G.table[a][x] for a in A.elements))
        for y in coset:
            projection[y] = len(cosets)
        cosets.append(coset)
    k = len(cosets)
    M = np.empty((k, k), dtype=np.int64)
    for i, ci in enumerate(cosets):
        for j, cj in enumerate(cosets):
            M[i, j] = projection[G.table[ci[0]][cj[0]]]
    names = None
    if G.names:
        names = [G.name(c[0]) if len(A.elements) == 1 else f"[{G.name(c[0])}]" for c in cosets]
    Q = Group(M, label=f"({G.label})/{len(A.elements)}" if B.order == G.order else "B/A", names=names)
    assert all(projection[x] >= 0 for x in Bset)
    return Section(B, A, Q, projection, cosets)


def quotient(G: Group, N: Subgroup) -> Section:
    return section(G, Subgroup(G, tuple(range(G.order))), N)


def cyclic_subgroups(G: Group) -> list[tuple[int, ...]]:
    return sorted({tuple(closure(G, [x])) for x in range(G.order)})


def all_subgroups(G: Group) -> list[tuple[int, ...]]:
    """Every subgroup of ``G``, by joining cyclic subgroups until closed."""
    cyc = cyclic_subgroups(G)
    found = set(cyc)
    frontier = list(cyc)
    while frontier:
        nxt = []
        for H in frontier:
            for Cy in cyc:
                if set(Cy) <= set(H):
                    continue
                J = tuple(closure(G, H + Cy))
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s))


# -- homomorphism search ----------------------------------------------------


def minimal_generating_set(G: Group) -> tuple[int, ...]:
    """Lexicographically smallest generating set of minimum size."""
    if G.order == 1:
        return ()
    for size in range(1, G.order):
        for combo in itertools.combinations(range(1, G.order), size):
            if len(closure(G, combo)) == G.order:
                return combo
    raise AssertionError("unreachable")


def _spanning_words(G: Group, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """BFS order of ``<gens>`` as triples ``(x, parent, gen_index)`` with ``x = parent * gens[i]``."""
    seen = {0}
    out = []
    queue = deque([0])
    while queue:
        y = queue.popleft()
        for i, g in enumerate(gens):
            x = G.table[y][g]
            if x not in seen:
                seen.add(x)
                out.append((x, y, i))
                queue.append(x)
    return out


def homomorphism_from_images(G: Group, H: Group, gens: Sequence[int], images: Sequence[int]) -> list[int] | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism ``<gens> -> H``; ``None`` if inconsistent.

    The returned list is indexed by elements of ``G``; entries outside ``<gens>`` are -1.
    """
    phi = [-1] * G.order
    phi[0] = 0
    for x, y, i in _spanning_words(G, gens):
        phi[x] = H.table[phi[y]][images[i]]
    for x in range(G.order):
        if phi[x] < 0:
            continue
        for g, im in zip(gens, images):
            if phi[G.table[x][g]] != H.table[phi[x]][im]:
                return None
    return phi


def isomorphisms(G: Group, H: Group, first_only: bool = False) -> list[list[int]]:
    """All isomorphisms ``G -> H`` as image lists, by generator-image search."""
    if G.order != H.order or G.order_census() != H.order_census():
        return []
    gens = minimal_generating_set(G)
    if not gens:
        return [[0]]
    g_orders = [G.element_order(g) for g in gens]
    by_order: dict[int, list[int]] = {}
    for y in range(H.order):
        by_order.setdefault(H.element_order(y), []).append(y)
    found: list[list[int]] = []

    def extend(k: int, images: list[int]) -> bool:
        if k == len(gens):
            phi = homomorphism_from_images(G, H, gens, images)
            if phi is not None and len(set(phi)) == G.order:
                found.append(phi)
                return first_only
            return False
        for y in by_order.get(g_orders[k], []):
            images.append(y)
            # consistency pruning on the subgroup generated so far
            sub = homomorphism_from_images(G, H, gens[: k + 1], images)
            if sub is not None:
                hit = [v for v in sub if v >= 0]
                if len(set(hit)) == len(hit) and extend(k + 1, images):
                    return True
            images.pop()
        return False

    extend(0, [])
    return found


def are_isomorphic(G: Group, H: Group) -> bool:
    return bool(isomorphisms(G, H, first_only=True))


def automorphism_group(G: Group, max_order: int | None = None):
    """``Aut(G)`` as a permutation group on the elements of ``G``."""
    from .permgroups import PermGroup

    cap = LIMITS.max_aut_group_order if max_order is None else max_order
    if G.order > cap:
        raise CapExceeded(f"group order {G.order} exceeds automorphism cap {cap}")
    autos = sorted(tuple(phi) for phi in isomorphisms(G, G))
    return PermGroup.from_elements(G.order, autos)


def is_automorphism(G: Group, images: Sequence[int]) -> bool:
    if sorted(images) != list(range(G.order)):
        return False
    M = G.mul
    im = np.asarray(images)
    return bool(np.array_equal(im[M], M[im][:, im]))
