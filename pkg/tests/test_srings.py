import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurrings import constructions as cons
from schurrings.automorphisms import cyclotomic
from schurrings.groups import cyclic, dihedral, quotient, section, subgroup_generated
from schurrings.permgroups import PermGroup
from schurrings.srings import (
    AlgebraicMap,
    AxiomViolation,
    a_subgroups,
    format_partition,
    from_partition,
    full_sring,
    is_algebraic_isomorphism,
    is_s_wreath,
    is_sring_partition,
    is_tensor,
    parse_partition,
    power_map,
    quotient_sring,
    refines,
    row_sums_hold,
    structure_constant,
    tensor_product,
    triangle_identity_holds,
    trivial_sring,
)
from schurrings.suite import abelian_groups, sample_rings

E, A, A2, A3, B, AB, A2B, A3B = range(8)


def test_trivial_and_full():
    G = dihedral(8)
    T, F = trivial_sring(G), full_sring(G)
    assert T.rank == 2 and F.rank == 8
    assert refines(F.classes, T.classes) and not refines(T.classes, F.classes)
    assert triangle_identity_holds(T) and row_sums_hold(F)


@pytest.mark.parametrize(
    "partition,axiom",
    [
        ([[0, 1], [2, 3]], "identity"),
        ([[0], [1], [2, 3]], "inverse"),
        ([[0], [1, 2]], "partition"),
        ([[0], [1, 2], [2, 3]], "partition"),
    ],
)
def test_axiom_violations_c4(partition, axiom):
    with pytest.raises(AxiomViolation) as info:
        from_partition(cyclic(4), partition)
    assert info.value.axiom == axiom


def test_coherence_violation():
    # {e}, {a, a^3}, {a^2, b}, rest: inverse closed but not closed under products
    part = [[E], [A, A3], [A2, B], [AB, A2B, A3B]]
    with pytest.raises(AxiomViolation) as info:
        from_partition(dihedral(8), part)
    assert info.value.axiom == "coherence"
    assert not is_sring_partition(dihedral(8), part)


def test_partition_roundtrip():
    A_ = cons.d8zp_sring(5)
    assert parse_partition("# comment\n" + format_partition(A_.classes)) == [list(c) for c in A_.classes]
    assert from_partition(A_.group, parse_partition(A_.partition_text())) == A_


def test_structure_constants_direct_count(d8zp5):
    A_ = d8zp5
    c = A_.constants
    for X in range(A_.rank):
        for Y in range(A_.rank):
            for Z in range(A_.rank):
                assert c[X, Y, Z] == structure_constant(A_, X, Y, Z)
    # every element of a basic set sees the same count
    for X, Y, Z in [(1, 2, 3), (5, 5, 0), (7, 8, 4)]:
        vals = {structure_constant(A_, X, Y, Z, z) for z in A_.classes[Z]}
        assert len(vals) == 1


def test_t12_x1_x1(d8zp5):
    sets = cons.d8zp_sets(5)
    A_ = d8zp5
    x1 = A_.class_of_set(sets["X1"])
    t12 = A_.class_of_set(sets["T1,2"])
    assert structure_constant(A_, x1, x1, t12) == 2


def test_a_subgroups_d8(d8):
    subs = a_subgroups(full_sring(d8))
    assert len(subs) == 10
    subs_t = a_subgroups(trivial_sring(d8))
    assert [H.order for H in subs_t] == [1, 8]


def test_a_subgroups_d8zp(d8zp5):
    orders = sorted(H.order for H in a_subgroups(d8zp5))
    G = d8zp5.group
    for H in a_subgroups(d8zp5):
        assert d8zp5.is_a_subgroup(H.elements)
        assert len(set(G.table[x][y] for x in H.elements for y in H.elements)) == H.order
    # <c> alone is not an A-subgroup: the classes over Zp pair e with a^2
    assert orders == [1, 2, 2, 2, 4, 8, 10, 20, 40]


def test_quotient_sring(d8zp5):
    G = d8zp5.group
    S = cons.d8zp_quotient_section(G)
    Q = quotient_sring(d8zp5, S)
    assert Q.group.order == 20
    assert Q.rank == 15
    with pytest.raises(ValueError):
        quotient_sring(d8zp5, quotient(G, subgroup_generated(G, [B * 5])))


def test_tensor_product():
    T = tensor_product(full_sring(cyclic(2)), trivial_sring(cyclic(3)))
    assert T.rank == 4
    assert is_tensor(T, [0, 3], [0, 1, 2])
    assert not is_tensor(trivial_sring(T.group), [0, 3], [0, 1, 2])


def test_s_wreath_q8zp():
    A_ = cons.q8zp_l4(5)
    G = A_.group
    X = cons.q8zp_l4_sets(5)
    A1 = subgroup_generated(G, [A2 * 5])
    a2 = A2 * 5

    def coset_union(c):
        return {G.table[a2][x] for x in c} == c

    # X6 is a union of <a^2>-cosets, X7 is not
    assert coset_union(X[6]) and not coset_union(X[7])
    S = section(G, A1, A1)
    assert is_s_wreath(A_, S) == (False, True)


def test_s_wreath_on_d8_ring(d8):
    # X = {a, a^3} is an <a^2>-coset union, {b}, {a^2 b} are not
    A_ = from_partition(d8, [[E], [A2], [A, A3], [B], [A2B], [AB, A3B]])
    A1 = subgroup_generated(d8, [A2])
    S = section(d8, subgroup_generated(d8, [A]), A1)
    assert is_s_wreath(A_, S) == (False, True)
    A_ = from_partition(d8, [[E], [A2], [A, A3], [B, A2B], [AB, A3B]])
    assert is_s_wreath(A_, S) == (True, True)


def test_power_map_z13():
    A_ = cyclotomic(PermGroup(13, [tuple((3 * x) % 13 for x in range(13))]), cyclic(13))
    for m in range(1, 13):
        assert is_algebraic_isomorphism(power_map(A_, m))
    with pytest.raises(ValueError):
        power_map(A_, 13)
    with pytest.raises(ValueError):
        power_map(trivial_sring(dihedral(8)), 3)


def test_class_swap_is_not_algebraic():
    # cyc(M, Z13) with |M| = 3; swap two orbits that do not correspond under a multiplier
    O = cons.cyc_orbit_system(13, 4)
    A_ = from_partition(cyclic(13), [[0], *O.orbits])
    f = list(range(A_.rank))
    i, j = A_.class_of_set(O.C(1)), A_.class_of_set(O.C(2))
    f[i], f[j] = j, i
    assert not is_algebraic_isomorphism(AlgebraicMap(A_, A_, f))


@settings(max_examples=25, deadline=None)
@given(idx=st.integers(min_value=0, max_value=10**6), seed=st.integers(min_value=0, max_value=10**6))
def test_power_map_is_algebraic(idx, seed):
    groups = abelian_groups(24)
    G = groups[idx % len(groups)]
    from math import gcd

    units = [m for m in range(1, max(G.order, 2)) if gcd(m, G.order) == 1]
    for A_ in sample_rings(G, seed)[:12]:
        for m in units:
            assert is_algebraic_isomorphism(power_map(A_, m))
