"""Permutation groups given by generators.

Permutations are tuples of images, ``p[x]`` being the image of ``x``, and
act on the right: ``x^(gh) = (x^g)^h``, so ``mult(g, h)`` applies ``g``
first.  Orders and membership come from a deterministic Schreier-Sims
chain; full element enumeration is available for small groups.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

from .config import LIMITS, CapExceeded

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def mult(g: Perm, h: Perm) -> Perm:
    return tuple(h[x] for x in g)


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for x, y in enumerate(g):
        out[y] = x
    return tuple(out)


def perm_order(g: Perm) -> int:
    from math import lcm

    seen = [False] * len(g)
    k = 1
    for x in range(len(g)):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = g[y]
            length += 1
        k = lcm(k, length)
    return k


def is_fixed_point_free(g: Perm) -> bool:
    return all(x != y for x, y in enumerate(g))


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def cycles(g: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for x in range(len(g)):
        if x in seen or g[x] == x:
            continue
        c = [x]
        seen.add(x)
        y = g[x]
        while y != x:
            seen.add(y)
            c.append(y)
            y = g[y]
        out.append(tuple(c))
    return out


def format_perm(g: Perm) -> str:
    cs = cycles(g)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


class _Level:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int, gens: list[Perm]):
        self.base = base
        self.gens = gens
        self.transversal: dict[int, Perm] = {}

    def rebuild(self, n: int) -> None:
        u = {self.base: identity_perm(n)}
        queue = deque([self.base])
        while queue:
            x = queue.popleft()
            ux = u[x]
            for s in self.gens:
                y = s[x]
                if y not in u:
                    u[y] = mult(ux, s)
                    queue.append(y)
        self.transversal = u


class StabChain:
    """Base and strong generating set (Holt's deterministic Schreier-Sims)."""

    def __init__(self, degree: int, gens: Sequence[Perm], base_prefix: Sequence[int] = ()):
        self.degree = degree
        ident = identity_perm(degree)
        gens = [g for g in gens if g != ident]
        base = list(base_prefix)
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(next(x for x in range(degree) if g[x] != x))
        self.levels: list[_Level] = []
        for i, b in enumerate(base):
            level = _Level(b, [g for g in gens if all(g[c] == c for c in base[:i])])
            level.rebuild(degree)
            self.levels.append(level)
        self._complete()

    def _strip(self, h: Perm, start: int) -> tuple[Perm, int]:
        for j in range(start, len(self.levels)):
            lv = self.levels[j]
            y = h[lv.base]
            u = lv.transversal.get(y)
            if u is None:
                return h, j
            h = mult(h, inverse(u))
        return h, len(self.levels)

    def _complete(self) -> None:
        n = self.degree
        ident = identity_perm(n)
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = False
            for x, ux in list(lv.transversal.items()):
                for s in lv.gens:
                    h = mult(mult(ux, s), inverse(lv.transversal[s[x]]))
                    if h == ident:
                        continue
                    y, j = self._strip(h, i + 1)
                    if j < len(self.levels) or y != ident:
                        if j == len(self.levels):
                            b = next(p for p in range(n) if y[p] != p)
                            self.levels.append(_Level(b, []))
                        for l in range(i + 1, j + 1):
                            self.levels[l].gens.append(y)
                            self.levels[l].rebuild(n)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    def order(self) -> int:
        k = 1
        for lv in self.levels:
            k *= len(lv.transversal)
        return k

    def contains(self, g: Perm) -> bool:
        h, j = self._strip(g, 0)
        return j == len(self.levels) and h == identity_perm(self.degree)

    def stabilizer_gens(self, depth: int) -> list[Perm]:
        """Strong generators of the pointwise stabilizer of the first ``depth`` base points."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)


class PermGroup:
    """A permutation group of a fixed degree, given by generators."""

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        self.degree = degree
        gens = []
        for g in generators:
            g = check_perm(g)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if g not in gens:
                gens.append(g)
        self.generators: list[Perm] = gens
        self._elements: list[Perm] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Sequence[int]]) -> "PermGroup":
        """Group whose element set is given exactly; keeps a small generating subset."""
        elements = sorted(set(check_perm(e) for e in elements))
        gens: list[Perm] = []
        span = {identity_perm(degree)}
        for e in elements:
            if e not in span:
                gens.append(e)
                span = set(_enumerate(degree, gens, len(elements) + 1))
        if len(span) != len(elements):
            raise ValueError("element list is not a group")
        G = cls(degree, gens)
        G._elements = sorted(span)
        return G

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.degree, self.generators)

    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order()

    def elements(self, cap: int | None = None) -> list[Perm]:
        cap = LIMITS.max_enum_elements if cap is None else cap
        if self._elements is None:
            if self.order() > cap:
                raise CapExceeded(f"group order {self.order()} exceeds enumeration cap {cap}")
            self._elements = sorted(_enumerate(self.degree, self.generators, cap))
        return self._elements

    def contains(self, g: Sequence[int]) -> bool:
        return self.chain.contains(tuple(g))

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        queue = [x]
        for y in queue:
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen)

    @cached_property
    def _orbits(self) -> list[tuple[int, ...]]:
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for x, y in enumerate(g):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        cells: dict[int, list[int]] = {}
        for x in range(self.degree):
            cells.setdefault(find(x), []).append(x)
        return sorted(tuple(c) for c in cells.values())

    def orbits(self) -> list[tuple[int, ...]]:
        return list(self._orbits)

    def is_transitive(self) -> bool:
        return len(self._orbits) == 1

    def point_stabilizer(self, x: int) -> "PermGroup":
        chain = StabChain(self.degree, self.generators, base_prefix=[x])
        return PermGroup(self.degree, chain.stabilizer_gens(1))

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(mult(g, h) == mult(h, g) for g in gs for h in gs)


def _enumerate(degree: int, gens: Sequence[Perm], cap: int) -> set[Perm]:
    ident = identity_perm(degree)
    seen = {ident}
    queue = [ident]
    for x in queue:
        for g in gens:
            y = mult(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(f"group has more than {cap} elements")
                queue.append(y)
    return seen


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(max(n, 1), [])
    transposition = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return PermGroup(n, [transposition, cycle])


def regular_perm(G, g: int) -> Perm:
    """Right translation ``x -> x g`` of the group ``G``."""
    return tuple(row[g] for row in G.table)


def right_regular_rep(G) -> PermGroup:
    from .groups import minimal_generating_set

    gens = minimal_generating_set(G)
    return PermGroup(G.order, [regular_perm(G, g) for g in gens] or [identity_perm(G.order)])


def find_regular_subgroup(K: PermGroup, H, cap: int = 200_000) -> dict[int, Perm] | None:
    """Search ``K`` for a regular subgroup isomorphic to the table group ``H``.

    Returns an injective homomorphism as ``{h: permutation}`` or ``None`` when no
    such subgroup exists.  The search is exhaustive; groups with more than
    ``cap`` elements raise :class:`CapExceeded` rather than answer.
    """
    from .groups import _spanning_words, minimal_generating_set

    n = K.degree
    if H.order != n:
        raise ValueError("regular subgroup must have order equal to the degree")
    if K.order() % n:
        return None
    elems = K.elements(cap)
    gens = minimal_generating_set(H)
    if not gens:
        return {0: identity_perm(n)}
    wanted = [H.element_order(g) for g in gens]
    candidates = {k: [g for g in elems if is_fixed_point_free(g) and perm_order(g) == k] for k in set(wanted)}
    ident = identity_perm(n)

    def extend_map(images: list[Perm]) -> dict[int, Perm] | None:
        sub = gens[: len(images)]
        phi = {0: ident}
        for x, y, i in _spanning_words(H, sub):
            phi[x] = mult(phi[y], images[i])
        for x, px in phi.items():
            if x and not is_fixed_point_free(px):
                return None
            for g, im in zip(sub, images):
                if phi[H.table[x][g]] != mult(px, im):
                    return None
        return phi

    def search(images: list[Perm]) -> dict[int, Perm] | None:
        if len(images) == len(gens):
            return extend_map(images)
        for c in candidates[wanted[len(images)]]:
            images.append(c)
            phi = extend_map(images)
            if phi is not None:
                done = search(images)
                if done is not None:
                    return done
            images.pop()
        return None

    phi = search([])
    if phi is not None:
        R = PermGroup(n, phi.values())
        assert R.is_regular() and len(phi) == n
    return phi
