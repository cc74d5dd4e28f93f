import pytest

from schurrings import constructions as cons
from schurrings.constructions import A2, A3, AB, A, B, E
from schurrings.groups import Group, are_isomorphic, cyclic, dihedral, direct_product, is_automorphism, quaternion8
from schurrings.permgroups import PermGroup, inverse, mult
from schurrings.srings import row_sums_hold, triangle_identity_holds

PRIMES = [p for p in range(3, 200) if cons.is_prime(p)]


def perm_group_table(P: PermGroup) -> Group:
    elems = sorted(P.elements())
    ident = tuple(range(P.degree))
    elems.remove(ident)
    elems = [ident] + elems
    pos = {g: i for i, g in enumerate(elems)}
    return Group([[pos[mult(g, h)] for h in elems] for g in elems])


def test_primitive_root():
    assert cons.primitive_root(13) == 2
    assert cons.primitive_root(7) == 3
    assert cons.primitive_root(41) == 6
    for p in PRIMES:
        g = cons.primitive_root(p)
        assert len({pow(g, k, p) for k in range(p - 1)}) == p - 1


def test_orbit_system_example():
    O = cons.cyc_orbit_system(13, 4)
    assert O.g == 2 and O.m == 3
    assert O.orbits == ((1, 3, 9), (2, 5, 6), (4, 10, 12), (7, 8, 11))
    assert O.index_of(5) == 2 and O.C(5) == O.C(1)
    assert O.M == [1, 3, 9]
    with pytest.raises(ValueError):
        cons.cyc_orbit_system(13, 5)
    with pytest.raises(ValueError):
        cons.cyc_orbit_system(15, 2)


@pytest.mark.parametrize("l", [4, 6])
def test_orbit_system_invariants(l):
    for p in PRIMES:
        if p % l != 1:
            continue
        O = cons.cyc_orbit_system(p, l)
        assert sorted(x for c in O.orbits for x in c) == list(range(1, p))
        for i in range(1, l + 1):
            assert sorted((O.g * x) % p for x in O.C(i)) == list(O.C(i + 1))
            assert O.shift(i) == i % l + 1
        assert all(len(c) == O.m for c in O.orbits)
        # -1 lies in C_1 exactly when m is even
        assert (O.index_of(p - 1) == 1) == (O.m % 2 == 0)
        assert len(O.W0) == 2 * O.m
        assert set(O.M) <= set(O.W0)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_d8zp_family(p):
    A_ = cons.d8zp_sring(p)
    assert A_.rank == 13 + 3 * (p - 3)
    assert triangle_identity_holds(A_) and row_sums_hold(A_)
    G = A_.group
    S = cons.d8zp_sets(p)
    for i in range(1, 5):
        assert cons.inverse_set(G, S[f"X{i}"]) == S[f"Y{i}"]
    for j in (1, 2, 3):
        for k in range(2, p - 1):
            assert cons.inverse_set(G, S[f"T{j},{k}"]) == S[f"T{j},{p - k}"]


def test_d8zp_rejects_small():
    with pytest.raises(ValueError):
        cons.d8zp_sets(3)
    with pytest.raises(ValueError):
        cons.sigma_involution(3)


@pytest.mark.parametrize("p", [5, 13, 17])
def test_q8zp_l4(p):
    A_ = cons.q8zp_l4(p)
    assert A_.rank == 10
    G = A_.group
    X = cons.q8zp_l4_sets(p)
    assert cons.right_translate(G, X[7], A2 * p) == X[8]
    assert sum(len(x) for x in X) == 8 * p


@pytest.mark.parametrize("p", [7, 13, 19])
def test_q8zp_l6(p):
    A_ = cons.q8zp_l6(p)
    assert A_.rank == 9
    G = A_.group
    Y = cons.q8zp_l6_sets(p)
    assert cons.right_translate(G, Y[7], A2 * p) == Y[8]


def test_q8zp_wrong_prime():
    with pytest.raises(ValueError):
        cons.q8zp_l4(7)
    with pytest.raises(ValueError):
        cons.q8zp_l6(5)


def test_q8_automorphisms():
    Q = quaternion8()
    for s in (cons.SIGMA1, cons.SIGMA2, cons.SIGMA3):
        assert is_automorphism(Q, s)
    assert cons.SIGMA1[A] == B and cons.SIGMA1[B] == A3
    with pytest.raises(ValueError):
        cons.q8_automorphism(A, A3)


def test_q8_frame():
    F = cons.q8_frame()
    assert F.U.order() == 8 and F.V.order() == 12 and F.U0.order() == 4
    assert are_isomorphic(perm_group_table(F.U), dihedral(8))
    assert are_isomorphic(perm_group_table(F.U0), direct_product(cyclic(2), cyclic(2)))
    V = perm_group_table(F.V)
    assert not V.is_abelian() and V.order_census() == {1: 1, 2: 3, 3: 8}
    for H in (F.U, F.V):
        for g in H.generators:
            for u in F.U0.generators:
                assert F.U0.contains(mult(mult(inverse(g), u), g))


@pytest.mark.parametrize("l,p,order", [(4, 5, 16), (4, 13, 48), (4, 17, 64), (4, 29, 112),
                                       (6, 7, 24), (6, 13, 48), (6, 19, 72), (6, 31, 120)])
def test_k_groups(l, p, order):
    K = cons.k_groups(p, l)
    assert K.order() == order
    G = cons.q8zp_group(p)
    for g in K.generators:
        assert is_automorphism(G, g)


def test_product_automorphism():
    g = cons.product_automorphism(cons.SIGMA2, 2, 5)
    assert is_automorphism(cons.q8zp_group(5), g)
    assert g[A * 5 + 1] == A3 * 5 + 2
    assert g[E] == E and g[AB * 5] == cons.SIGMA2[AB] * 5
