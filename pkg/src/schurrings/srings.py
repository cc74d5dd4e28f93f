"""S-rings over explicit groups, represented by their partition into basic sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .groups import Group, Section, Subgroup, direct_product, is_subgroup, normality_witness


class AxiomViolation(ValueError):
    """A partition fails one of the S-ring axioms.

    ``axiom`` is one of ``"partition"``, ``"identity"``, ``"inverse"`` or
    ``"coherence"``; ``witness`` describes the offending data.
    """

    def __init__(self, axiom: str, witness: dict, message: str):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} axiom violated: {message}")


def normalize_partition(partition: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    """Sort each class and order classes by smallest element."""
    return sorted((tuple(sorted(set(c))) for c in partition), key=lambda c: c[0] if c else -1)


def _pair_counts(G: Group, class_of: np.ndarray, rank: int) -> np.ndarray:
    """``N[X, Y, z] = #{(x, y) in X x Y : xy = z}`` via one pass over all pairs."""
    n = G.order
    cx = np.broadcast_to(class_of[:, None], (n, n))
    cy = np.broadcast_to(class_of[None, :], (n, n))
    flat = ((cx * rank + cy) * n + G.mul).ravel()
    return np.bincount(flat, minlength=rank * rank * n).reshape(rank, rank, n)


@dataclass(eq=False)
class SRing:
    group: Group
    classes: list[tuple[int, ...]]
    class_of: np.ndarray
    constants: np.ndarray  # constants[X, Y, Z] = c^Z_{XY}

    @property
    def rank(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(c) for c in self.classes])

    def __eq__(self, other) -> bool:
        return isinstance(other, SRing) and self.group is other.group and self.classes == other.classes

    def __hash__(self):
        return hash(tuple(self.classes))

    def __repr__(self) -> str:
        return f"SRing(over={self.group.label}, rank={self.rank})"

    @property
    def inverse_class(self) -> list[int]:
        G = self.group
        return [int(self.class_of[G.inv[c[0]]]) for c in self.classes]

    def class_of_set(self, elems: Iterable[int]) -> int:
        """Class id of a set that must be exactly one basic set."""
        s = tuple(sorted(set(elems)))
        k = int(self.class_of[s[0]])
        if self.classes[k] != s:
            raise ValueError("set is not a basic set")
        return k

    def is_a_set(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        return all(set(self.classes[int(self.class_of[x])]) <= s for x in s)

    def is_a_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        return self.is_a_set(s) and is_subgroup(self.group, s)

    def partition_text(self) -> str:
        return format_partition(self.classes)


def from_partition(G: Group, partition: Iterable[Iterable[int]]) -> SRing:
    """Verify the S-ring axioms and build the ring; raises :class:`AxiomViolation`."""
    classes = normalize_partition(partition)
    n = G.order
    class_of = np.full(n, -1, dtype=np.int64)
    for k, c in enumerate(classes):
        if not c:
            raise AxiomViolation("partition", {"class": k}, "empty class")
        for x in c:
            if not 0 <= x < n:
                raise AxiomViolation("partition", {"element": x}, f"element {x} outside the group")
            if class_of[x] >= 0:
                raise AxiomViolation("partition", {"element": x}, f"element {x} in two classes")
            class_of[x] = k
    missing = np.flatnonzero(class_of < 0)
    if missing.size:
        raise AxiomViolation("partition", {"element": int(missing[0])}, f"element {missing[0]} not covered")
    if classes[0] != (0,):
        raise AxiomViolation("identity", {"class": classes[0]}, "{e} is not a class")
    for c in classes:
        inv = sorted(G.inv[x] for x in c)
        k = int(class_of[inv[0]])
        if tuple(inv) != classes[k]:
            bad = next(x for x in c if class_of[G.inv[x]] != k or tuple(inv) != classes[k])
            raise AxiomViolation("inverse", {"class": c, "element": bad, "inverse": G.inv[bad]},
                                 f"inverse of class {list(c)} is not a class")
    rank = len(classes)
    N = _pair_counts(G, class_of, rank)
    constants = np.empty((rank, rank, rank), dtype=np.int64)
    for k, c in enumerate(classes):
        block = N[:, :, list(c)]
        ref = block[:, :, :1]
        if not np.array_equal(block, np.broadcast_to(ref, block.shape)):
            X, Y, j = map(int, np.argwhere(block != ref)[0])
            raise AxiomViolation(
                "coherence",
                {"X": classes[X], "Y": classes[Y], "Z": c, "z": c[0], "z2": c[j],
                 "counts": (int(ref[X, Y, 0]), int(block[X, Y, j]))},
                f"class {X} * class {Y} hits {c[0]} and {c[j]} a different number of times",
            )
        constants[:, :, k] = ref[:, :, 0]
    constants.setflags(write=False)
    class_of.setflags(write=False)
    return SRing(G, classes, class_of, constants)


def is_sring_partition(G: Group, partition) -> bool:
    try:
        from_partition(G, partition)
    except AxiomViolation:
        return False
    return True


def trivial_sring(G: Group) -> SRing:
    return from_partition(G, [[0], range(1, G.order)] if G.order > 1 else [[0]])


def full_sring(G: Group) -> SRing:
    return from_partition(G, [[x] for x in range(G.order)])


def structure_constants(A: SRing) -> np.ndarray:
    return A.constants


def structure_constant(A: SRing, X: int, Y: int, Z: int, z: int | None = None) -> int:
    """Count ``(x, y)`` in ``X x Y`` with ``xy = z`` directly (``z`` defaults to the first element of ``Z``)."""
    G = A.group
    z = A.classes[Z][0] if z is None else z
    Yset = set(A.classes[Y])
    return sum(1 for x in A.classes[X] if G.table[G.inv[x]][z] in Yset)


def triangle_identity_holds(A: SRing) -> bool:
    """``|Z| c^{Z'}_{XY} = |X| c^{X'}_{YZ} = |Y| c^{Y'}_{ZX}`` for all class triples (primes denote inverses)."""
    c = A.constants
    s = A.sizes
    inv = np.array(A.inverse_class)
    r = A.rank
    X, Y, Z = np.meshgrid(np.arange(r), np.arange(r), np.arange(r), indexing="ij")
    t1 = s[Z] * c[X, Y, inv[Z]]
    t2 = s[X] * c[Y, Z, inv[X]]
    t3 = s[Y] * c[Z, X, inv[Y]]
    return bool(np.array_equal(t1, t2) and np.array_equal(t2, t3))


def row_sums_hold(A: SRing) -> bool:
    s = A.sizes
    return bool(np.array_equal(A.constants @ s, np.outer(s, s)))


def refines(P: Sequence[Sequence[int]], Q: Sequence[Sequence[int]]) -> bool:
    """True if every class of ``P`` lies inside a class of ``Q``."""
    where = {}
    for k, c in enumerate(Q):
        for x in c:
            where[x] = k
    return all(len({where[x] for x in c}) == 1 for c in P)


# -- subrings, quotients, products ------------------------------------------


def a_subgroups(A: SRing) -> list[Subgroup]:
    """All A-subgroups, by closing unions of basic sets outward from ``{e}``."""
    G = A.group

    def a_closure(elems: set[int]) -> frozenset[int]:
        s = set(elems)
        while True:
            grown = set()
            for x in s:
                grown.update(A.classes[int(A.class_of[x])])
            frontier = list(grown)
            for x in frontier:
                for y in list(grown):
                    grown.add(G.table[x][y])
            if grown == s:
                return frozenset(s)
            s = grown

    start = a_closure({0})
    found = {start}
    queue = [start]
    for S in queue:
        for c in A.classes:
            if c[0] in S:
                continue
            T = a_closure(set(S) | set(c))
            if T not in found:
                found.add(T)
                queue.append(T)
    return [Subgroup(G, tuple(sorted(S))) for S in sorted(found, key=lambda s: (len(s), sorted(s)))]


def quotient_sring(A: SRing, S: Section) -> SRing:
    """The S-ring induced on the section ``S.B / S.A``."""
    for H in (S.B, S.A):
        if not A.is_a_subgroup(H.elements):
            raise ValueError(f"section subgroup of order {H.order} is not an A-subgroup")
    B = set(S.B.elements)
    images = {tuple(sorted({S.projection[x] for x in c})) for c in A.classes if c[0] in B}
    return from_partition(S.quotient, images)


def restrict(A: SRing, H: Subgroup, sub: Group, embed: Sequence[int]) -> SRing:
    """The S-ring ``A_H`` carried over to ``sub`` via ``embed[i]`` = element of ``A.group``."""
    back = {g: i for i, g in enumerate(embed)}
    Hs = set(H.elements)
    return from_partition(sub, [[back[x] for x in c] for c in A.classes if c[0] in Hs])


def tensor_product(A1: SRing, A2: SRing) -> SRing:
    G = direct_product(A1.group, A2.group)
    n2 = A2.group.order
    return from_partition(G, [[x * n2 + y for x in X for y in Y] for X in A1.classes for Y in A2.classes])


def is_internal_direct_product(G: Group, A: Sequence[int], B: Sequence[int]) -> bool:
    if set(A) & set(B) != {0} or len(A) * len(B) != G.order:
        return False
    return all(G.table[a][b] == G.table[b][a] for a in A for b in B)


def is_tensor(A: SRing, sub_a: Subgroup | Sequence[int], sub_b: Subgroup | Sequence[int]) -> bool:
    """Whether ``A = A_A (x) A_B`` for the internal direct decomposition ``G = A x B``."""
    G = A.group
    Ael = tuple(getattr(sub_a, "elements", sub_a))
    Bel = tuple(getattr(sub_b, "elements", sub_b))
    if not is_internal_direct_product(G, Ael, Bel):
        raise ValueError("subgroups do not form an internal direct decomposition")
    if not (A.is_a_subgroup(Ael) and A.is_a_subgroup(Bel)):
        return False
    split = {G.table[a][b]: (a, b) for a in Ael for b in Bel}
    Aset, Bset = set(Ael), set(Bel)
    in_a = {c for c in A.classes if set(c) <= Aset}
    in_b = {c for c in A.classes if set(c) <= Bset}
    seen = set()
    for c in A.classes:
        X1 = tuple(sorted({split[x][0] for x in c}))
        X2 = tuple(sorted({split[x][1] for x in c}))
        if len(X1) * len(X2) != len(c) or X1 not in in_a or X2 not in in_b:
            return False
        seen.add((X1, X2))
    return len(seen) == len(in_a) * len(in_b)


class WreathCheck(NamedTuple):
    is_wreath: bool
    nontrivial: bool


def is_s_wreath(A: SRing, S: Section) -> WreathCheck:
    """Whether every basic set outside ``S.B`` is a union of ``S.A``-cosets."""
    G = A.group
    if normality_witness(G, S.A.elements) is not None:
        raise ValueError("lower subgroup of the section is not normal in the group")
    for H in (S.B, S.A):
        if not A.is_a_subgroup(H.elements):
            raise ValueError("section is not an A-section")
    B = set(S.B.elements)
    ok = True
    for c in A.classes:
        if c[0] in B:
            continue
        cs = set(c)
        if any(G.table[a][x] not in cs for x in c for a in S.A.elements):
            ok = False
            break
    return WreathCheck(ok, S.A.order > 1 and S.B.order < G.order)


# -- algebraic maps -----------------------------------------------------------


@dataclass
class AlgebraicMap:
    source: SRing
    target: SRing
    class_bijection: list[int]


def power_map(A: SRing, m: int) -> AlgebraicMap:
    """``X -> X^(m) = {x^m}`` on an S-ring over an abelian group, ``gcd(m, |G|) = 1``."""
    G = A.group
    if not G.is_abelian():
        raise ValueError("power map needs an abelian group")
    if gcd(m, G.order) != 1:
        raise ValueError(f"m = {m} is not coprime to |G| = {G.order}")
    f = [A.class_of_set(G.power(x, m) for x in c) for c in A.classes]
    return AlgebraicMap(A, A, f)


def is_algebraic_isomorphism(fmap: AlgebraicMap) -> bool:
    f = list(fmap.class_bijection)
    A, B = fmap.source, fmap.target
    if sorted(f) != list(range(B.rank)) or A.rank != B.rank:
        raise ValueError("class map is not a bijection")
    if not np.array_equal(A.sizes, B.sizes[f]):
        return False
    return bool(np.array_equal(B.constants[np.ix_(f, f, f)], A.constants))


# -- partition file format ----------------------------------------------------


def format_partition(classes: Iterable[Iterable[int]]) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in normalize_partition(classes))


def parse_partition(text: str) -> list[list[int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append([int(v) for v in line.split()])
        except ValueError:
            raise ValueError(f"partition line {lineno}: expected integers, got {line!r}") from None
    return out
