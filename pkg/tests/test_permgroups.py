import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurrings.config import CapExceeded
from schurrings.groups import cyclic, dihedral, direct_product, quaternion8
from schurrings.permgroups import (
    PermGroup,
    StabChain,
    cycles,
    find_regular_subgroup,
    identity_perm,
    inverse,
    mult,
    perm_order,
    right_regular_rep,
    symmetric_group,
)


def brute_closure(degree, gens):
    seen = {identity_perm(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = mult(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def test_mult_acts_on_the_right():
    g = (1, 2, 0)
    h = (0, 2, 1)
    # x^(gh) = (x^g)^h
    assert mult(g, h) == tuple(h[g[x]] for x in range(3))
    assert mult(g, inverse(g)) == identity_perm(3)
    assert perm_order(g) == 3
    assert cycles((1, 0, 3, 4, 2)) == [(0, 1), (2, 3, 4)]


def test_symmetric_group():
    S8 = symmetric_group(8)
    assert S8.order() == 40320
    assert S8.point_stabilizer(0).order() == 5040
    assert symmetric_group(1).order() == 1


def test_regular_representation():
    for G in (cyclic(7), dihedral(8), quaternion8()):
        R = right_regular_rep(G)
        assert R.order() == G.order
        assert R.is_regular()
        assert R.is_abelian() == G.is_abelian()
    assert not symmetric_group(3).is_regular()
    assert not PermGroup(4, [(1, 0, 2, 3)]).is_regular()


def _embedded(small_gens, deg, copies, shuffle):
    """Block-diagonal copies of a small permutation group, conjugated by a random relabelling."""
    n = deg * copies
    big = [tuple(b * deg + g[x] for b in range(copies) for x in range(deg)) for g in small_gens]
    sigma = list(range(n))
    shuffle(sigma)
    sinv = inverse(tuple(sigma))
    return n, [mult(mult(sinv, g), tuple(sigma)) for g in big]


@settings(max_examples=50, deadline=None)
@given(
    deg=st.integers(min_value=2, max_value=6),
    ngens=st.integers(min_value=1, max_value=3),
    copies=st.integers(min_value=1, max_value=6),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_orbit_stabilizer(deg, ngens, copies, seed):
    rng = random.Random(seed)
    small = []
    for _ in range(ngens):
        p = list(range(deg))
        rng.shuffle(p)
        small.append(tuple(p))
    n, gens = _embedded(small, deg, copies, rng.shuffle)
    G = PermGroup(n, gens)
    elems = brute_closure(n, gens)
    assert G.order() == len(elems)
    x = rng.randrange(n)
    assert len(G.orbit(x)) * G.point_stabilizer(x).order() == G.order()
    for g in list(elems)[:20]:
        assert G.contains(g)
    assert set(G.orbit(x)) == {g[x] for g in elems}


def test_against_sympy():
    sympy = pytest.importorskip("sympy.combinatorics")
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randrange(4, 10)
        gens = []
        for _ in range(2):
            p = list(range(n))
            rng.shuffle(p)
            gens.append(tuple(p))
        ours = PermGroup(n, gens)
        theirs = sympy.PermutationGroup([sympy.Permutation(list(g)) for g in gens])
        assert ours.order() == theirs.order()
        assert sorted(map(sorted, ours.orbits())) == sorted(sorted(o) for o in theirs.orbits())


def test_stab_chain_with_base_prefix():
    gens = symmetric_group(5).generators
    ch = StabChain(5, gens, base_prefix=[3, 1])
    assert ch.base[:2] == [3, 1]
    assert ch.order() == 120
    assert not StabChain(5, [(1, 2, 0, 3, 4)]).contains((1, 0, 2, 3, 4))


def test_from_elements():
    elems = brute_closure(4, [(1, 2, 3, 0)])
    assert PermGroup.from_elements(4, elems).order() == 4


def test_find_regular_subgroup():
    Q = quaternion8()
    phi = find_regular_subgroup(symmetric_group(8), Q)
    assert phi is not None
    R = PermGroup(8, phi.values())
    assert R.is_regular() and R.order() == 8
    for x, y in itertools.product(range(8), repeat=2):
        assert phi[Q.table[x][y]] == mult(phi[x], phi[y])
    assert find_regular_subgroup(right_regular_rep(cyclic(8)), Q) is None
    assert find_regular_subgroup(right_regular_rep(dihedral(8)), Q) is None
    assert find_regular_subgroup(right_regular_rep(Q), Q) is not None
    V = direct_product(cyclic(2), cyclic(2))
    assert find_regular_subgroup(right_regular_rep(cyclic(4)), V) is None


def test_find_regular_subgroup_cap():
    with pytest.raises(CapExceeded):
        find_regular_subgroup(symmetric_group(10), cyclic(10), cap=1000)
