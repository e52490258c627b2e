import itertools
import random

from grpinv.catalog import builtin_catalog, catalog_group
from grpinv.groups import (
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    semidirect_zn_z2,
)
from grpinv.iso import (
    are_isomorphic,
    fingerprint,
    identify,
    is_homomorphic_bijection,
)


def test_fingerprint_examples():
    assert dict(fingerprint(make_cyclic(4)).order_histogram) == {1: 1, 2: 1, 4: 2}
    assert dict(fingerprint(make_elementary_abelian_2(2)).order_histogram) == {
        1: 1,
        2: 3,
    }
    d8 = fingerprint(make_dihedral(8))
    q8 = fingerprint(make_dicyclic(8))
    assert dict(d8.order_histogram) == {1: 1, 2: 5, 4: 2}
    assert dict(q8.order_histogram) == {1: 1, 2: 1, 4: 6}
    assert d8 != q8


def test_fingerprint_fields():
    fp = fingerprint(make_dihedral(12))
    assert fp.order == 12
    assert not fp.abelian
    assert fp.center_size == 2
    assert (fp.i, fp.c) == (8, 10)


def test_identity_witness():
    G = make_dihedral(8)
    w = are_isomorphic(G, G)
    assert w is not None
    assert is_homomorphic_bijection(G, G, w.bijection)


def test_semidirect_vs_dihedral_witness():
    w = are_isomorphic(semidirect_zn_z2(9, 8), make_dihedral(18))
    assert w is not None


def test_non_isomorphic_same_order():
    assert are_isomorphic(make_cyclic(4), make_elementary_abelian_2(2)) is None
    assert are_isomorphic(make_dihedral(8), make_dicyclic(8)) is None


def test_pool_reflexive_symmetric_and_witnesses_verify():
    pool = [e.group for e in builtin_catalog() if e.group.order <= 12]
    assert len(pool) >= 20
    for G in pool:
        w = are_isomorphic(G, G)
        assert w is not None and is_homomorphic_bijection(G, G, w.bijection)
    for G, H in itertools.combinations(pool, 2):
        gh = are_isomorphic(G, H)
        hg = are_isomorphic(H, G)
        assert (gh is None) == (hg is None)
        if gh is not None:
            assert is_homomorphic_bijection(G, H, gh.bijection)
            assert is_homomorphic_bijection(H, G, hg.bijection)


def _brute_force_isomorphic(G, H):
    if G.order != H.order:
        return False
    n = G.order
    for perm in itertools.permutations(range(1, n)):
        m = (0,) + perm
        if all(
            m[G.mult(a, b)] == H.mult(m[a], m[b])
            for a in range(n)
            for b in range(n)
        ):
            return True
    return False


def test_agreement_with_brute_force_on_small_orders():
    small = [
        make_cyclic(4),
        make_elementary_abelian_2(2),
        make_cyclic(6),
        make_dihedral(6),
        make_cyclic(8),
        make_dihedral(8),
        make_dicyclic(8),
        direct_product(make_cyclic(4), make_cyclic(2)),
        make_cyclic(9),
        direct_product(make_cyclic(3), make_cyclic(3)),
        make_cyclic(10),
        make_dihedral(10),
        semidirect_zn_z2(5, 4),
        direct_product(make_cyclic(5), make_cyclic(2)),
    ]
    rng = random.Random(7)
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(25)]
    for G, H in pairs:
        fast = are_isomorphic(G, H) is not None
        assert fast == _brute_force_isomorphic(G, H), (G, H)


def test_identify_examples_and_injectivity():
    assert identify(make_dihedral(6)) == "D6"
    assert identify(direct_product(make_cyclic(3), make_cyclic(4))) == "Z12"
    assert identify(semidirect_zn_z2(9, 8)) == "D18"
    assert identify(semidirect_zn_z2(12, 5)) is None
    catalog = builtin_catalog()
    for entry in catalog:
        assert identify(entry.group) == entry.name
    # aliases resolve to the same table
    assert catalog_group("S3") is catalog_group("D6")


def test_deterministic_witness():
    a = are_isomorphic(make_dihedral(12), semidirect_zn_z2(6, 5))
    b = are_isomorphic(make_dihedral(12), semidirect_zn_z2(6, 5))
    assert a == b
