"""Exhaustive S-ring enumeration over small groups, coherent closure, schurity census."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .automorphisms import is_schurian
from .config import LIMITS, CapExceeded
from .groups import Group
from .srings import AxiomViolation, SRing, _pair_counts, from_partition, normalize_partition


def wl_closure(G: Group, seed: Iterable[Iterable[int]]) -> SRing:
    """Coarsest S-ring partition refining ``seed``.

    Elements are split by their class together with the counts of
    factorisations ``z = xy`` over class pairs, until nothing splits.
    """
    classes = normalize_partition(seed)
    class_of = np.empty(G.order, dtype=np.int64)
    for k, c in enumerate(classes):
        class_of[list(c)] = k
    if classes[0] != (0,):
        raise ValueError("seed must have {e} as a class")
    rank = len(classes)
    while True:
        N = _pair_counts(G, class_of, rank).reshape(rank * rank, G.order).T
        sig = np.concatenate([class_of[:, None], N], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.ravel()
        k = int(new.max()) + 1
        if k == rank:
            break
        class_of, rank = new, k
    parts: dict[int, list[int]] = {}
    for x, k in enumerate(class_of.tolist()):
        parts.setdefault(k, []).append(x)
    return from_partition(G, parts.values())


def set_partitions(items: Sequence) -> Iterator[list[list]]:
    """All set partitions of ``items`` (restricted growth strings)."""
    n = len(items)
    if n == 0:
        yield []
        return

    def rec(i: int, blocks: list[list]):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def inverse_closed_partitions(G: Group) -> Iterator[list[tuple[int, ...]]]:
    """Every partition of ``G`` with ``{e}`` a class and closed under inversion, each exactly once.

    Atoms are the pairs ``{x, x^-1}``.  A block of atoms either forms one
    symmetric class, or (when it has no involutions) splits into ``X`` and
    ``X^-1`` by picking one element of every pair.
    """
    atoms = []
    seen = {0}
    for x in range(1, G.order):
        if x not in seen:
            pair = tuple(sorted({x, G.inv[x]}))
            seen.update(pair)
            atoms.append(pair)
    for blocks in set_partitions(atoms):
        options = []
        for block in blocks:
            sym = [tuple(sorted(x for pair in block for x in pair))]
            if all(len(pair) == 2 for pair in block):
                first, rest = block[0], block[1:]
                for picks in itertools.product(*[(0, 1)] * len(rest)):
                    X = (first[0],) + tuple(pair[k] for pair, k in zip(rest, picks))
                    Xi = tuple(G.inv[x] for x in X)
                    sym.append((tuple(sorted(X)), tuple(sorted(Xi))))
            options.append(sym)
        for choice in itertools.product(*options):
            classes = [(0,)]
            for c in choice:
                if isinstance(c[0], tuple):
                    classes.extend(c)
                else:
                    classes.append(c)
            yield normalize_partition(classes)


def enumerate_srings(G: Group, max_order: int | None = None) -> list[SRing]:
    """All S-rings over ``G``, sorted by rank and then by class structure."""
    cap = LIMITS.max_enum_order if max_order is None else max_order
    if G.order > cap:
        raise CapExceeded(f"enumeration is capped at order {cap}, got {G.order}")
    found: dict[tuple, SRing] = {}
    for part in inverse_closed_partitions(G):
        key = tuple(part)
        if key in found:
            continue
        try:
            found[key] = from_partition(G, part)
        except AxiomViolation:
            pass
    return sorted(found.values(), key=lambda A: (A.rank, A.classes))


@dataclass
class CensusReport:
    label: str
    total: int
    schurian: int
    nonschurian: int
    rank_histogram: dict[int, int] = field(default_factory=dict)
    nonschurian_rings: list[SRing] = field(default_factory=list)

    @property
    def is_schur(self) -> bool:
        return self.nonschurian == 0

    def lines(self) -> list[str]:
        hist = ",".join(f"{r}:{k}" for r, k in sorted(self.rank_histogram.items()))
        return [
            f"group={self.label}",
            f"total={self.total}",
            f"schurian={self.schurian}",
            f"nonschurian={self.nonschurian}",
            f"rank_histogram={hist}",
            f"schur_group={'yes' if self.is_schur else 'no'}",
        ]


def schurity_census(G: Group, rings: list[SRing] | None = None) -> CensusReport:
    rings = enumerate_srings(G) if rings is None else rings
    bad = [A for A in rings if not is_schurian(A).schurian]
    hist = Counter(A.rank for A in rings)
    return CensusReport(G.label, len(rings), len(rings) - len(bad), len(bad), dict(sorted(hist.items())), bad)
