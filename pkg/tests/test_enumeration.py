import pytest

from grpinv.enumeration import (
    EnumerationResult,
    enumerate_groups,
    enumerate_groups_reference,
    known_census,
)
from grpinv.errors import DomainError, EnumerationTimeout, ResourceLimitError
from grpinv.groups import invariants, make_dicyclic, verify_axioms
from grpinv.iso import are_isomorphic, identify


def test_census_orders_1_to_12():
    for n in range(1, 13):
        result = enumerate_groups(n)
        assert len(result.groups) == known_census[n - 1], n


def test_order_4_classes():
    names = {identify(G) for G in enumerate_groups(4).groups}
    assert names == {"Z4", "Z2xZ2"}


def test_order_8_classes():
    names = {identify(G) for G in enumerate_groups(8).groups}
    assert names == {"Z8", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8"}


def test_order_12_classes():
    groups = enumerate_groups(12).groups
    names = {identify(G) for G in groups}
    assert names == {"Z12", "Z6xZ2", "D12", "A4", "Dic12"}
    dicyclic = [G for G in groups if identify(G) == "Dic12"]
    assert are_isomorphic(dicyclic[0], make_dicyclic(12)) is not None


def test_every_emitted_table_passes_axioms():
    for n in range(1, 13):
        for G in enumerate_groups(n).groups:
            check = verify_axioms(G.table)
            assert check.order == n


def test_groups_pairwise_non_isomorphic():
    for n in (8, 12):
        groups = enumerate_groups(n).groups
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                assert are_isomorphic(groups[a], groups[b]) is None


def test_reference_path_agrees_up_to_6():
    for n in range(1, 7):
        ref = enumerate_groups_reference(n)
        main = enumerate_groups(n)
        assert len(ref.groups) == len(main.groups), n
        # same classes, not just the same count
        for G in ref.groups:
            assert any(are_isomorphic(G, H) is not None for H in main.groups)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_reference_path_agrees_7_8(n):
    ref = enumerate_groups_reference(n)
    assert len(ref.groups) == known_census[n - 1]


def test_worker_count_does_not_change_output():
    for n in (6, 8, 12):
        single = enumerate_groups(n, workers=1)
        multi = enumerate_groups(n, workers=3)
        assert single.tables_explored == multi.tables_explored
        assert len(single.groups) == len(multi.groups)
        for a, b in zip(single.groups, multi.groups):
            assert (a.table == b.table).all()


def test_deterministic_output_order():
    a = enumerate_groups(8)
    b = enumerate_groups(8)
    for x, y in zip(a.groups, b.groups):
        assert (x.table == y.table).all()
    orders_i_c = [(invariants(G).i, invariants(G).c) for G in a.groups]
    assert orders_i_c == sorted(orders_i_c, key=lambda t: orders_i_c.index(t))


def test_cap_and_domain_errors():
    with pytest.raises(ResourceLimitError):
        enumerate_groups(17)
    with pytest.raises(ResourceLimitError):
        enumerate_groups(9, enum_cap=8)
    with pytest.raises(DomainError):
        enumerate_groups(0)


def test_timeout_carries_partial_progress():
    with pytest.raises(EnumerationTimeout) as exc_info:
        enumerate_groups(12, timeout=0.0)
    partial = exc_info.value.partial
    assert isinstance(partial, EnumerationResult)
    assert partial.order == 12


def test_census_orders_13_to_15():
    for n in (13, 14, 15):
        assert len(enumerate_groups(n).groups) == known_census[n - 1]


@pytest.mark.slow
def test_census_order_16():
    result = enumerate_groups(16)
    assert len(result.groups) == 14
    named = {identify(G) for G in result.groups}
    named.discard(None)
    # ten of the fourteen classes carry catalog names; the semidihedral,
    # modular, Z4:Z4, and Q8xZ2 classes stay anonymous
    assert named == {
        "Z16",
        "Z8xZ2",
        "Z4xZ4",
        "Z4xZ2xZ2",
        "Z2xZ2xZ2xZ2",
        "D16",
        "Q16",
        "Z2xD8",
        "(Z2xZ2):Z4",
        "Q8:Z2",
    }
    assert sum(1 for G in result.groups if identify(G) is None) == 4
