"""Combinatorial automorphisms of S-rings and the schurity decision.

``Aut(A)`` is the group of permutations of ``G`` preserving the colouring
``colour(u, v) = class of v u^-1``.  It always contains the right
translations, so only the stabilizer of the identity is searched for.  The
search individualizes base points and refines by colour-degree vectors;
every candidate image of a base point that is not already in a known
orbit gets an exhaustive depth-first test, so the resulting stabilizer
chain is complete.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .config import LIMITS, CapExceeded
from .groups import Group, is_automorphism
from .permgroups import Perm, PermGroup, identity_perm, regular_perm, right_regular_rep
from .srings import SRing, from_partition


class TimeBudgetExceeded(CapExceeded):
    pass


def color_matrix(A: SRing) -> np.ndarray:
    """``C[u, v]`` = class id of ``v u^-1``."""
    G = A.group
    inv = np.asarray(G.inv)
    # mul[v, inv[u]] = v u^-1
    return np.asarray(A.class_of)[G.mul[:, inv]].T.copy()


def preserves_colors(C: np.ndarray, g: Sequence[int]) -> bool:
    g = np.asarray(g)
    return bool(np.array_equal(C[np.ix_(g, g)], C))


class _Refiner:
    """Canonical equitable refinement of vertex partitions against a colour matrix."""

    def __init__(self, C: np.ndarray):
        self.C = C
        self.n = C.shape[0]
        self.r = int(C.max()) + 1

    def refine(self, cell: np.ndarray) -> tuple[np.ndarray, list[np.ndarray]]:
        n, r, C = self.n, self.r, self.C
        trace = []
        k = int(cell.max()) + 1
        rows = np.repeat(np.arange(n), n)
        while True:
            idx = (rows * r + C.ravel()) * k + np.tile(cell, n)
            counts = np.bincount(idx, minlength=n * r * k).reshape(n, r * k)
            sig = np.concatenate([cell[:, None], counts], axis=1)
            uniq, new = np.unique(sig, axis=0, return_inverse=True)
            new = new.ravel()
            trace.append(uniq)
            if len(uniq) == k:
                return cell, trace
            cell, k = new, len(uniq)

    @staticmethod
    def individualize(cell: np.ndarray, v: int) -> np.ndarray:
        # v becomes a singleton placed just before the rest of its old cell
        key = 2 * cell
        key[cell == cell[v]] += 1
        key[v] -= 1
        _, new = np.unique(key, return_inverse=True)
        return new.ravel()


@dataclass
class _Node:
    cell: np.ndarray    # refined partition after individualizing the base prefix
    target: int         # cell id holding the next base point
    base: int
    trace: list         # trace produced by individualizing `base` and refining


class SRingAutGroup(PermGroup):
    """``Aut(A)`` with the identity stabilizer kept alongside."""

    def __init__(self, degree: int, generators, stabilizer: PermGroup, stabilizer_order: int, base: list[int]):
        super().__init__(degree, generators)
        self.stabilizer = stabilizer
        self.stabilizer_order = stabilizer_order
        self.base = base

    def order(self) -> int:
        return self.degree * self.stabilizer_order


def _search_stabilizer(C: np.ndarray, seeds: Sequence[Perm], budget: float, fix: int = 0):
    """Generators, order and base of the stabilizer of ``fix`` in the colour automorphism group."""
    n = C.shape[0]
    deadline = time.monotonic() + budget
    R = _Refiner(C)
    start = np.zeros(n, dtype=np.int64)
    cell, _ = R.refine(start)
    cell, trace0 = R.refine(R.individualize(cell, fix))

    # leftmost path of the search tree fixes the base
    path: list[_Node] = []
    while int(cell.max()) + 1 < n:
        sizes = np.bincount(cell)
        target = int(np.flatnonzero(sizes > 1)[0])
        b = int(np.flatnonzero(cell == target)[0])
        nxt, tr = R.refine(R.individualize(cell, b))
        path.append(_Node(cell, target, b, tr))
        cell = nxt
    base = [fix] + [nd.base for nd in path]
    leaf_left = cell

    def check_time():
        if time.monotonic() > deadline:
            raise TimeBudgetExceeded(f"automorphism search exceeded {budget:.0f} s")

    def same_trace(t1, t2) -> bool:
        return len(t1) == len(t2) and all(a.shape == b.shape and np.array_equal(a, b) for a, b in zip(t1, t2))

    def dfs(level: int, cell: np.ndarray) -> Perm | None:
        check_time()
        if level == len(path):
            # discrete on both sides: match vertices by cell id
            g = np.empty(n, dtype=np.int64)
            g[np.argsort(leaf_left)] = np.argsort(cell)
            return tuple(int(v) for v in g) if preserves_colors(C, g) else None
        nd = path[level]
        for y in np.flatnonzero(cell == nd.target):
            nxt, tr = R.refine(R.individualize(cell, int(y)))
            if same_trace(tr, nd.trace):
                g = dfs(level + 1, nxt)
                if g is not None:
                    return g
        return None

    ident = identity_perm(n)
    level_gens: list[list[Perm]] = [[] for _ in path]
    for s in seeds:
        s = tuple(s)
        if s == ident or s[fix] != fix:
            continue
        depth = next((i for i, nd in enumerate(path) if s[nd.base] != nd.base), None)
        if depth is not None:
            level_gens[depth].append(s)

    orbit_sizes = [1] * len(path)
    for i in range(len(path) - 1, -1, -1):
        nd = path[i]
        gens = [g for j in range(i, len(path)) for g in level_gens[j]]
        orbit = _orbit(nd.base, gens)
        for x in np.flatnonzero(nd.cell == nd.target):
            x = int(x)
            if x in orbit:
                continue
            nxt, tr = R.refine(R.individualize(nd.cell, x))
            if not same_trace(tr, nd.trace):
                continue
            g = dfs(i + 1, nxt)
            if g is not None:
                level_gens[i].append(g)
                gens.append(g)
                orbit = _orbit(nd.base, gens)
        orbit_sizes[i] = len(orbit)
    order = 1
    for k in orbit_sizes:
        order *= k
    gens = [g for lg in level_gens for g in lg]
    return gens, order, base


def _orbit(x: int, gens: Sequence[Perm]) -> set[int]:
    seen = {x}
    queue = [x]
    for y in queue:
        for g in gens:
            z = g[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


def automorphism_group(
    A: SRing,
    seeds: Sequence[Perm] = (),
    max_order: int | None = None,
    time_budget: float | None = None,
) -> SRingAutGroup:
    """Full combinatorial automorphism group of ``A``.

    ``seeds`` may carry automorphisms known in advance; they only speed up
    the search.  Exceeding the size cap or the time budget raises
    :class:`CapExceeded`, never a partial answer.
    """
    G = A.group
    n = G.order
    cap = LIMITS.max_sring_order if max_order is None else max_order
    if n > cap:
        raise CapExceeded(f"S-ring over a group of order {n} exceeds cap {cap}")
    budget = LIMITS.time_budget_secs if time_budget is None else time_budget
    C = color_matrix(A)
    for s in seeds:
        if not preserves_colors(C, s):
            raise ValueError("seed permutation is not an automorphism")
    stab_gens, stab_order, base = _search_stabilizer(C, seeds, budget)
    regular = right_regular_rep(G).generators
    stab = PermGroup(n, stab_gens or [identity_perm(n)])
    return SRingAutGroup(n, list(regular) + stab_gens, stab, stab_order, base)


@dataclass
class SchurityReport:
    schurian: bool
    aut_order: int
    orbits: list[tuple[int, ...]]
    split_class: tuple[int, ...] | None = None
    split_pieces: list[tuple[int, ...]] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"verdict={'schurian' if self.schurian else 'nonschurian'}",
            f"aut_order={self.aut_order}",
            f"stabilizer_orbits={len(self.orbits)}",
        ]
        if self.split_class is not None:
            out.append("split_class=" + " ".join(map(str, self.split_class)))
            for piece in self.split_pieces:
                out.append("split_piece=" + " ".join(map(str, piece)))
        return out


def stabilizer_orbits(A: SRing, aut: SRingAutGroup | None = None) -> list[tuple[int, ...]]:
    aut = aut or automorphism_group(A)
    return aut.stabilizer.orbits()


def is_schurian(A: SRing, aut: SRingAutGroup | None = None, **kwargs) -> SchurityReport:
    """Decide whether the basic sets are exactly the orbits of ``Aut(A)_e``."""
    aut = aut or automorphism_group(A, **kwargs)
    orbs = aut.stabilizer.orbits()
    if sorted(orbs) == sorted(A.classes):
        return SchurityReport(True, aut.order(), orbs)
    where = {x: o for o in orbs for x in o}
    for c in A.classes:
        pieces = sorted({where[x] for x in c})
        if len(pieces) > 1:
            return SchurityReport(False, aut.order(), orbs, c, pieces)
    raise AssertionError("stabilizer orbits do not refine the basic sets")


def translate_property_holds(A: SRing, alpha: Sequence[int], X: int, y: int) -> bool:
    """``(X y)^alpha == X (y^alpha)`` for a basic set ``X`` and element ``y``."""
    G = A.group
    lhs = {alpha[G.table[x][y]] for x in A.classes[X]}
    rhs = {G.table[x][alpha[y]] for x in A.classes[X]}
    return lhs == rhs


def contains_right_regular(K: PermGroup, G: Group) -> bool:
    return all(K.contains(regular_perm(G, g)) for g in right_regular_rep_gens(G))


def right_regular_rep_gens(G: Group) -> list[int]:
    from .groups import minimal_generating_set

    return list(minimal_generating_set(G))


def transitivity_module(K: PermGroup, G: Group) -> SRing:
    """``V(K, G)``: the S-ring of orbits of the identity stabilizer of ``K >= G_r``."""
    if K.degree != G.order or not contains_right_regular(K, G):
        raise ValueError("group does not contain the right regular representation")
    return from_partition(G, K.point_stabilizer(0).orbits())


def cyclotomic(K: PermGroup, G: Group) -> SRing:
    """``cyc(K, G)``: the orbits of a group of automorphisms of ``G``."""
    for g in K.generators:
        if not is_automorphism(G, g):
            raise ValueError("generator is not a group automorphism")
    return from_partition(G, K.orbits())


def right_cosets(G: Group, N: Sequence[int]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Right cosets ``N x`` numbered by smallest element; returns (coset id per element, cosets)."""
    where = [-1] * G.order
    cosets = []
    for x in range(G.order):
        if where[x] >= 0:
            continue
        c = tuple(sorted(G.table[a][x] for a in N))
        for y in c:
            where[y] = len(cosets)
        cosets.append(c)
    return where, cosets


def induced_action(A: SRing, alpha: Sequence[int], N) -> Perm:
    """The permutation ``alpha^{G/N}`` of the right ``N``-cosets."""
    elems = tuple(getattr(N, "elements", N))
    if not A.is_a_subgroup(elems):
        raise ValueError("N is not an A-subgroup")
    where, cosets = right_cosets(A.group, elems)
    image = []
    for c in cosets:
        targets = {where[alpha[x]] for x in c}
        assert len(targets) == 1, "permutation does not preserve the coset partition"
        image.append(targets.pop())
    return tuple(image)
