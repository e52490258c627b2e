from fractions import Fraction

import pytest

from grpinv.arith import tau
from grpinv.catalog import builtin_catalog
from grpinv.errors import (
    DomainError,
    NoIdentityError,
    NotAssociativeError,
    NotLatinSquareError,
    ResourceLimitError,
)
from grpinv.groups import (
    cyclic_subgroups,
    direct_product,
    element_order,
    invariants,
    involution_count,
    is_normal_subgroup,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
    semidirect_zn_z2,
    verify_axioms,
)
from grpinv.iso import are_isomorphic

# A Latin square with identity that genuinely fails associativity (order 5
# is the smallest order where a non-associative loop exists).
NONASSOCIATIVE_LOOP = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def test_verify_axioms_trivial_and_z2():
    assert verify_axioms([[0]]).order == 1
    assert verify_axioms([[0, 1], [1, 0]]).order == 2


def test_verify_axioms_relabels_identity():
    # Z3 written with its identity at index 2.
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = verify_axioms(table)
    assert G.mult(0, 0) == 0
    assert are_isomorphic(G, make_cyclic(3)) is not None


def test_verify_axioms_rejects_each_failure_distinctly():
    with pytest.raises(NotLatinSquareError):
        verify_axioms([[0, 1], [0, 1]])
    with pytest.raises(NotLatinSquareError):
        verify_axioms([[0, 1, 2], [1, 2, 0]])
    # Every 3x3 Latin square with a two-sided identity is the cyclic table,
    # so a non-cyclic-shift square fails on the missing identity instead.
    with pytest.raises(NoIdentityError):
        verify_axioms([[1, 0, 2], [0, 2, 1], [2, 1, 0]])
    with pytest.raises(NotAssociativeError):
        verify_axioms(NONASSOCIATIVE_LOOP)


def test_constructed_groups_pass_axioms():
    groups = [
        make_cyclic(1),
        make_cyclic(17),
        make_dihedral(2),
        make_dihedral(26),
        make_dicyclic(4),
        make_dicyclic(20),
        make_elementary_abelian_2(0),
        make_elementary_abelian_2(5),
        semidirect_zn_z2(15, 4),
        direct_product(make_dihedral(6), make_cyclic(5)),
    ]
    for G in groups:
        check = verify_axioms(G.table)
        assert check.order == G.order


def test_constructor_domain_errors():
    with pytest.raises(DomainError):
        make_cyclic(0)
    with pytest.raises(DomainError):
        make_dihedral(7)
    with pytest.raises(DomainError):
        make_dicyclic(6)
    with pytest.raises(DomainError):
        make_elementary_abelian_2(-1)
    with pytest.raises(DomainError):
        semidirect_zn_z2(5, 2)
    with pytest.raises(ResourceLimitError):
        make_cyclic(100, table_cap=64)
    with pytest.raises(ResourceLimitError):
        direct_product(make_cyclic(10), make_cyclic(10), table_cap=64)


def test_small_family_facts():
    assert make_dihedral(2).order == 2  # D2 is Z2
    assert are_isomorphic(make_dihedral(2), make_cyclic(2)) is not None
    assert are_isomorphic(make_dicyclic(4), make_cyclic(4)) is not None
    d6 = invariants(make_dihedral(6))
    assert sorted(
        o for o, cnt in d6.order_histogram.items() for _ in range(cnt)
    ) == [1, 2, 2, 2, 3, 3]
    # Q8 has exactly one involution besides the identity.
    assert invariants(make_dicyclic(8)).order_histogram[2] == 1


def test_element_order():
    z12 = make_cyclic(12)
    assert element_order(z12, 0) == 1
    assert element_order(z12, 1) == 12
    g = direct_product(make_cyclic(4), make_cyclic(2))
    # element (1, 1) has index 1*2 + 1 = 3 and order lcm(4, 2) = 4
    assert element_order(g, 3) == 4
    with pytest.raises(DomainError):
        element_order(z12, 12)


def test_involution_count_examples():
    assert involution_count(make_elementary_abelian_2(3)) == 8
    assert involution_count(make_cyclic(4)) == 2
    assert involution_count(make_dihedral(8)) == 6


def test_cyclic_subgroup_counts():
    assert cyclic_subgroups(make_cyclic(12)).count == 6
    assert cyclic_subgroups(make_dihedral(8)).count == 7
    assert cyclic_subgroups(make_cyclic(1)).count == 1


def test_cyclic_subgroups_are_closed_and_generated():
    for G in (make_dihedral(12), make_dicyclic(12), semidirect_zn_z2(9, 8)):
        subs = cyclic_subgroups(G).subgroups
        assert (0,) in subs
        assert len(set(subs)) == len(subs)
        for s in subs:
            members = set(s)
            assert 0 in members
            for a in s:
                for b in s:
                    assert G.mult(a, b) in members
            assert any(
                {0} | _powers(G, x) == members for x in s
            ), f"{s} not generated by one element"


def _powers(G, x):
    seen = set()
    y = x
    while y != 0:
        seen.add(y)
        y = G.mult(y, x)
    return seen


def test_invariants_examples():
    d6 = invariants(make_dihedral(6))
    assert (d6.order, d6.i, d6.c, d6.r, d6.beta) == (6, 4, 5, 1, Fraction(4, 5))
    q8 = invariants(make_dicyclic(8))
    assert (q8.order, q8.i, q8.c, q8.r, q8.beta) == (8, 2, 5, 3, Fraction(2, 5))
    for k in range(5):
        assert invariants(make_elementary_abelian_2(k)).beta == 1


def test_invariants_bounds_and_histogram_total():
    for entry in builtin_catalog():
        inv = invariants(entry.group)
        assert 1 <= inv.i <= inv.c <= inv.order
        assert inv.r == inv.c - inv.i >= 0
        assert inv.beta == Fraction(inv.i, inv.c)
        assert sum(inv.order_histogram.values()) == inv.order


def test_cyclic_subgroup_count_equals_tau_for_cyclic_groups():
    for n in range(1, 513):
        assert cyclic_subgroups(make_cyclic(n)).count == tau(n), n


def test_dihedral_invariant_formulas():
    # i(D_2n) = n+1 (n odd) or n+2 (n even); c(D_2n) = tau(n) + n.
    for n in range(1, 257):
        G = make_dihedral(2 * n)
        inv = invariants(G)
        assert inv.i == n + (1 if n % 2 else 2), n
        assert inv.c == tau(n) + n, n


def test_direct_product_structure():
    G = make_dihedral(10)
    with_trivial = direct_product(make_cyclic(1), G)
    assert are_isomorphic(with_trivial, G) is not None
    v4 = direct_product(make_cyclic(2), make_cyclic(2))
    assert invariants(v4).i == 4
    z12 = direct_product(make_cyclic(3), make_cyclic(4))
    assert are_isomorphic(z12, make_cyclic(12)) is not None


def test_semidirect_examples():
    assert are_isomorphic(
        semidirect_zn_z2(5, 1), make_cyclic(10)
    ) is not None
    assert are_isomorphic(
        semidirect_zn_z2(5, 4), make_dihedral(10)
    ) is not None
    odd_case = semidirect_zn_z2(12, 5)
    assert odd_case.order == 24
    assert are_isomorphic(
        odd_case, direct_product(make_cyclic(2), make_cyclic(12))
    ) is None
    assert are_isomorphic(odd_case, make_dihedral(24)) is None


def test_is_normal_subgroup():
    z12 = make_cyclic(12)
    assert is_normal_subgroup(z12, [0, 4, 8])
    d6 = make_dihedral(6)
    rotation = [0, 1, 2]
    assert is_normal_subgroup(d6, rotation)
    reflection = [0, 3]
    assert not is_normal_subgroup(d6, reflection)
    with pytest.raises(DomainError):
        is_normal_subgroup(d6, [0, 1])  # not closed
    with pytest.raises(DomainError):
        is_normal_subgroup(d6, [1, 2])  # no identity


# --- slow-path oracle: all subgroups by closure, filtered to cyclic ---


def _closure(G, seed):
    members = {0} | set(seed)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (G.mult(x, y), G.mult(y, x)):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return frozenset(members)


def _all_subgroups(G):
    subgroups = {frozenset([0])}
    frontier = {_closure(G, [x]) for x in range(G.order)}
    subgroups |= frontier
    while True:
        new = set()
        for a in subgroups:
            for b in subgroups:
                joined = _closure(G, a | b)
                if joined not in subgroups:
                    new.add(joined)
        if not new:
            return subgroups
        subgroups |= new


def test_cyclic_subgroups_match_full_subgroup_enumeration():
    singles = [e.group for e in builtin_catalog() if e.group.order <= 24]
    for G in singles:
        cyclic = {frozenset(_closure(G, [x])) for x in range(G.order)}
        full = _all_subgroups(G)
        oracle = {s for s in full if any(_closure(G, [x]) == s for x in s)}
        assert cyclic == oracle
        got = {frozenset(s) for s in cyclic_subgroups(G).subgroups}
        assert got == oracle, G
