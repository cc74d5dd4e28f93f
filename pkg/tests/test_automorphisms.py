import random

import numpy as np
import pytest

from schurrings import constructions as cons
from schurrings.automorphisms import (
    TimeBudgetExceeded,
    automorphism_group,
    color_matrix,
    cyclotomic,
    induced_action,
    is_schurian,
    preserves_colors,
    transitivity_module,
    translate_property_holds,
)
from schurrings.config import CapExceeded
from schurrings.enumeration import enumerate_srings
from schurrings.groups import automorphism_group as group_automorphisms
from schurrings.groups import cyclic, dihedral, quaternion8, subgroup_generated
from schurrings.permgroups import PermGroup, mult, right_regular_rep, symmetric_group
from schurrings.srings import full_sring, quotient_sring, trivial_sring
from schurrings.suite import random_element

nx = pytest.importorskip("networkx")
from networkx.algorithms.isomorphism import DiGraphMatcher  # noqa: E402


def vf2_stabilizer_size(A_):
    """Count colour automorphisms fixing the identity with an independent graph matcher."""
    C = color_matrix(A_)
    n = C.shape[0]
    g = nx.DiGraph()
    for u in range(n):
        g.add_node(u, root=(u == 0))
        for v in range(n):
            if u != v:
                g.add_edge(u, v, c=int(C[u, v]))
    m = DiGraphMatcher(g, g, node_match=lambda a, b: a["root"] == b["root"], edge_match=lambda a, b: a["c"] == b["c"])
    return sum(1 for _ in m.isomorphisms_iter())


@pytest.mark.parametrize(
    "make",
    [lambda: cons.d8zp_sring(5), lambda: cons.q8zp_l4(5), lambda: trivial_sring(cyclic(6)),
     lambda: full_sring(quaternion8())],
    ids=["d8zp5", "q8zp_l4_5", "trivial_c6", "full_q8"],
)
def test_stabilizer_matches_vf2(make):
    A_ = make()
    aut = automorphism_group(A_)
    assert aut.stabilizer.order() == aut.stabilizer_order == vf2_stabilizer_size(A_)


@pytest.mark.parametrize("G", [dihedral(8), quaternion8()], ids=lambda G: G.label)
def test_small_rings_against_vf2(G):
    for A_ in enumerate_srings(G):
        assert automorphism_group(A_).stabilizer_order == vf2_stabilizer_size(A_)


def test_trivial_ring_is_symmetric():
    aut = automorphism_group(trivial_sring(dihedral(8)))
    assert aut.order() == 40320
    assert aut.chain.order() == 40320


def test_full_ring_is_regular():
    for G in (cyclic(7), dihedral(8)):
        aut = automorphism_group(full_sring(G))
        assert aut.order() == G.order and aut.stabilizer_order == 1


def test_generators_preserve_colours(d8zp5):
    C = color_matrix(d8zp5)
    aut = automorphism_group(d8zp5)
    assert all(preserves_colors(C, g) for g in aut.generators)
    assert aut.order() == 40


def test_seeds_are_checked():
    A_ = cons.d8zp_sring(5)
    with pytest.raises(ValueError):
        automorphism_group(A_, seeds=[tuple([1, 0] + list(range(2, 40)))])


def test_caps():
    with pytest.raises(CapExceeded):
        automorphism_group(cons.d8zp_sring(5), max_order=10)
    with pytest.raises(TimeBudgetExceeded):
        automorphism_group(trivial_sring(cyclic(64)), time_budget=0.0)


@pytest.mark.parametrize("make", [lambda: cons.d8zp_sring(5), lambda: cons.q8zp_l6(7)], ids=["d8zp5", "q8zp_l6_7"])
def test_translate_property(make):
    A_ = make()
    aut = automorphism_group(A_)
    rng = random.Random(1)
    for _ in range(100):
        alpha = random_element(aut.generators, A_.group.order, rng)
        assert translate_property_holds(A_, alpha, rng.randrange(A_.rank), rng.randrange(A_.group.order))


def test_translate_property_fails_for_non_automorphism():
    A_ = full_sring(cyclic(5))
    swap = (0, 2, 1, 3, 4)
    assert not all(translate_property_holds(A_, swap, X, y) for X in range(5) for y in range(5))


def test_schurity_verdicts(d8zp5):
    rep = is_schurian(d8zp5)
    assert not rep.schurian
    assert rep.split_class is not None and len(rep.split_pieces) > 1
    assert is_schurian(trivial_sring(quaternion8())).schurian


def test_transitivity_module():
    G = cyclic(13)
    K = PermGroup(13, list(right_regular_rep(G).generators) + [tuple((5 * x) % 13 for x in range(13))])
    V = transitivity_module(K, G)
    assert V.rank == 4
    assert is_schurian(V).schurian
    with pytest.raises(ValueError):
        transitivity_module(symmetric_group(5), cyclic(13))


def test_cyclotomic():
    G = quaternion8()
    A_ = cyclotomic(group_automorphisms(G), G)
    assert A_.classes == [(0,), (1, 3, 4, 5, 6, 7), (2,)]
    with pytest.raises(ValueError):
        cyclotomic(PermGroup(8, [(0, 2, 1, 3, 4, 5, 6, 7)]), G)


def test_sigma_on_quotient():
    for p in (5, 7):
        A_ = cons.d8zp_sring(p)
        S = cons.d8zp_quotient_section(A_.group)
        Q = quotient_sring(A_, S)
        sigma = cons.sigma_involution(p, S)
        assert preserves_colors(color_matrix(Q), sigma)
        assert mult(sigma, sigma) == tuple(range(len(sigma)))
        stab = automorphism_group(Q).stabilizer
        assert stab.order() == 2 and stab.contains(sigma)


def test_sigma_does_not_lift(d8zp5):
    """No automorphism of the ring induces sigma on G/<a^2>, which is why the ring is nonschurian."""
    A_ = d8zp5
    G = A_.group
    N = subgroup_generated(G, [cons.A2 * 5])
    aut = automorphism_group(A_)
    S = cons.d8zp_quotient_section(G)
    sigma = cons.sigma_involution(5, S)
    induced = {induced_action(A_, g, N) for g in aut.elements()}
    assert tuple(range(20)) in induced
    # cosets are numbered by smallest element, which matches the section numbering
    assert sigma not in induced


def test_induced_action_requires_a_subgroup(d8zp5):
    G = d8zp5.group
    with pytest.raises(ValueError):
        induced_action(d8zp5, tuple(range(40)), [0, 1])
    np.testing.assert_array_equal(
        induced_action(d8zp5, tuple(range(40)), subgroup_generated(G, [cons.A2 * 5])), np.arange(20)
    )
