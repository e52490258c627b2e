"""Finite groups as dense multiplication tables, and their invariants.

A group of order n lives on element indices 0..n-1 with the identity at
index 0.  The table is an n x n int32 array with ``table[a, b]`` holding
the index of a*b.  Tables are immutable after construction and safe to
share across threads.

The invariants of interest are

* ``i(G)``: the number of solutions of x*x = e (identity included),
* ``c(G)``: the number of cyclic subgroups (trivial subgroup included),
* ``r(G) = c(G) - i(G)`` and ``beta(G) = i(G)/c(G)`` as an exact Fraction.

Cyclic subgroups, element orders, and the order histogram are computed in
a single pass: each distinct cyclic subgroup is walked exactly once (from
its first generator hit), which also yields the order of every element of
that subgroup as ``k / gcd(j, k)`` for the j-th power.
"""

from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .arith import unit_involutions
from .errors import (
    DomainError,
    NoIdentityError,
    NotAssociativeError,
    NotLatinSquareError,
    ResourceLimitError,
)

#: Largest table edge we materialize by default (quadratic memory).
DEFAULT_TABLE_CAP = 4096

__all__ = [
    "DEFAULT_TABLE_CAP",
    "FiniteGroup",
    "GroupInvariants",
    "CyclicSubgroupSet",
    "verify_axioms",
    "make_cyclic",
    "make_dihedral",
    "make_dicyclic",
    "make_elementary_abelian_2",
    "direct_product",
    "semidirect_zn_z2",
    "element_order",
    "involution_count",
    "cyclic_subgroups",
    "invariants",
    "is_normal_subgroup",
    "is_elementary_abelian_2",
]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """An immutable multiplication table with the identity at index 0."""

    order: int
    table: np.ndarray
    name: str | None = None

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(np.argmax(self.table[a] == 0))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = f", name={self.name!r}" if self.name else ""
        return f"FiniteGroup(order={self.order}{label})"


@dataclass(frozen=True)
class GroupInvariants:
    """Bundle of the counted invariants of one group."""

    order: int
    i: int
    c: int
    r: int
    beta: Fraction
    order_histogram: dict[int, int]


@dataclass(frozen=True)
class CyclicSubgroupSet:
    """All cyclic subgroups, each as a sorted tuple of element indices."""

    subgroups: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.subgroups)


def _freeze(table: np.ndarray, name: str | None = None) -> FiniteGroup:
    """Wrap a trusted table without re-validating the axioms."""
    arr = np.ascontiguousarray(table, dtype=np.int32)
    arr.setflags(write=False)
    return FiniteGroup(order=arr.shape[0], table=arr, name=name)


def _check_cap(order: int, table_cap: int) -> None:
    if order > table_cap:
        raise ResourceLimitError(
            f"group order {order} exceeds the table cap {table_cap}"
        )


# ---------------------------------------------------------------------------
# Axiom verification


def verify_axioms(table, name: str | None = None) -> FiniteGroup:
    """Validate an arbitrary square index array as a group table.

    Checks, in order: shape and index range, the Latin-square property,
    existence of a two-sided identity (relabelled to index 0 if it sits
    elsewhere), and full associativity.  Each failure raises a distinct
    exception type.
    """
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotLatinSquareError(f"not a rectangular integer array: {exc}") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotLatinSquareError("table is not a square array")
    n = arr.shape[0]
    if n == 0:
        raise NotLatinSquareError("table is empty")
    if arr.min() < 0 or arr.max() >= n:
        raise NotLatinSquareError("table entries out of index range")
    idx = np.arange(n)
    if not (np.sort(arr, axis=1) == idx).all() or not (
        np.sort(arr, axis=0) == idx[:, None]
    ).all():
        raise NotLatinSquareError("rows and columns are not all permutations")
    row_hits = (arr == idx).all(axis=1)
    col_hits = (arr == idx[:, None]).all(axis=0)
    both = np.nonzero(row_hits & col_hits)[0]
    if both.size == 0:
        raise NoIdentityError("no two-sided identity element")
    e = int(both[0])
    if e != 0:
        sigma = idx.copy()
        sigma[[0, e]] = [e, 0]
        arr = sigma[arr[np.ix_(sigma, sigma)]]
    for a in range(n):
        if not np.array_equal(arr[arr[a]], arr[a][arr]):
            raise NotAssociativeError(f"associativity fails in row {a}")
    # Inverses exist in any associative Latin square with identity.
    return _freeze(arr, name=name)


# ---------------------------------------------------------------------------
# Constructors


def make_cyclic(n: int, *, table_cap: int = DEFAULT_TABLE_CAP) -> FiniteGroup:
    """Cyclic group of order n."""
    if n < 1:
        raise DomainError(f"cyclic group needs order >= 1, got {n}")
    _check_cap(n, table_cap)
    i = np.arange(n, dtype=np.int32)
    return _freeze((i[:, None] + i[None, :]) % np.int32(n), name=f"Z{n}")


def make_dihedral(m: int, *, table_cap: int = DEFAULT_TABLE_CAP) -> FiniteGroup:
    """Dihedral group of order m (m even, m = 2n for the n-gon); D2 is Z2."""
    if m < 2 or m % 2 != 0:
        raise DomainError(f"dihedral group needs an even order >= 2, got {m}")
    _check_cap(m, table_cap)
    n = m // 2
    i = np.arange(n, dtype=np.int32)
    add = (i[:, None] + i[None, :]) % np.int32(n)
    sub = (i[:, None] - i[None, :]) % np.int32(n)
    # Indices 0..n-1 are rotations r^i, n..2n-1 are reflections r^i s.
    table = np.empty((m, m), dtype=np.int32)
    table[:n, :n] = add
    np.add(add, n, out=table[:n, n:])
    np.add(sub, n, out=table[n:, :n])
    table[n:, n:] = sub
    return _freeze(table, name=f"D{m}")


def make_dicyclic(m: int, *, table_cap: int = DEFAULT_TABLE_CAP) -> FiniteGroup:
    """Dicyclic group of order m = 4k; Dic8 is the quaternion group Q8."""
    if m < 4 or m % 4 != 0:
        raise DomainError(f"dicyclic group needs order divisible by 4, got {m}")
    _check_cap(m, table_cap)
    k = m // 4
    q = 2 * k
    i = np.arange(q, dtype=np.int32)
    add = (i[:, None] + i[None, :]) % np.int32(q)
    sub = (i[:, None] - i[None, :]) % np.int32(q)
    # a^(2k) = e, b^2 = a^k, b a b^-1 = a^-1; indices q.. are a^i b.
    table = np.empty((m, m), dtype=np.int32)
    table[:q, :q] = add
    np.add(add, q, out=table[:q, q:])
    np.add(sub, q, out=table[q:, :q])
    table[q:, q:] = (sub + k) % q
    return _freeze(table, name=f"Dic{m}")


def make_elementary_abelian_2(
    k: int, *, table_cap: int = DEFAULT_TABLE_CAP
) -> FiniteGroup:
    """Elementary abelian 2-group of order 2**k (k = 0 gives the trivial group)."""
    if k < 0:
        raise DomainError(f"rank must be >= 0, got {k}")
    order = 2**k
    _check_cap(order, table_cap)
    i = np.arange(order, dtype=np.int32)
    name = "Z1" if k == 0 else "x".join(["Z2"] * k)
    return _freeze(np.bitwise_xor.outer(i, i), name=name)


def direct_product(
    G: FiniteGroup, H: FiniteGroup, *, table_cap: int = DEFAULT_TABLE_CAP
) -> FiniteGroup:
    """Direct product on row-major index pairs: (g, h) -> g*|H| + h."""
    order = G.order * H.order
    _check_cap(order, table_cap)
    # Stays inside int32: indices < order <= table cap, far below 2**31.
    table = (
        G.table[:, None, :, None] * np.int32(H.order) + H.table[None, :, None, :]
    ).reshape(order, order)
    name = None
    if G.name and H.name:
        name = f"{G.name}x{H.name}"
    return _freeze(table, name=name)


def semidirect_zn_z2(
    n: int, u: int, *, table_cap: int = DEFAULT_TABLE_CAP
) -> FiniteGroup:
    """Split extension of Z_n by Z_2 where the flip acts by x -> u*x.

    Elements are pairs (a, b) with a mod n, b mod 2, composed as
    (a, b)(a', b') = (a + u^b a', b + b'), encoded as index 2a + b.
    """
    if n < 2:
        raise DomainError(f"semidirect base needs n >= 2, got {n}")
    if u not in unit_involutions(n):
        raise DomainError(f"u = {u} is not a square root of 1 in the units mod {n}")
    _check_cap(2 * n, table_cap)
    idx = np.arange(2 * n, dtype=np.int64)
    a, b = idx // 2, idx % 2
    act = np.where(b == 1, u, 1)
    left_a, left_act, left_b = a[:, None], act[:, None], b[:, None]
    table = ((left_a + left_act * a[None, :]) % n) * 2 + (left_b + b[None, :]) % 2
    return _freeze(table.astype(np.int32), name=f"SD({n},{u})")


# ---------------------------------------------------------------------------
# Invariants

_SCAN_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, tuple]" = (
    weakref.WeakKeyDictionary()
)


def _scan(G: FiniteGroup) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Element orders and the deduplicated cyclic subgroups, in one pass."""
    cached = _SCAN_CACHE.get(G)
    if cached is not None:
        return cached
    n = G.order
    item = G.table.item
    orders = [0] * n
    orders[0] = 1
    is_generator_seen = bytearray(n)
    is_generator_seen[0] = 1
    subgroups = {(0,)}
    for x in range(1, n):
        if is_generator_seen[x]:
            continue
        powers = [0]
        y = x
        while y != 0:
            powers.append(y)
            y = item(y, x)
        k = len(powers)
        for j in range(1, k):
            g = gcd(j, k)
            orders[powers[j]] = k // g
            if g == 1:
                is_generator_seen[powers[j]] = 1
        subgroups.add(tuple(sorted(powers)))
    result = (
        tuple(orders),
        tuple(sorted(subgroups, key=lambda s: (len(s), s))),
    )
    _SCAN_CACHE[G] = result
    return result


def element_order(G: FiniteGroup, x: int) -> int:
    """Least k >= 1 with x^k = identity."""
    if not 0 <= x < G.order:
        raise DomainError(f"element index {x} out of range for order {G.order}")
    item = G.table.item
    k = 1
    y = x
    while y != 0:
        y = item(y, x)
        k += 1
    return k


def involution_count(G: FiniteGroup) -> int:
    """|{x : x*x = e}|, identity included."""
    return int(np.count_nonzero(np.diagonal(G.table) == 0))


def cyclic_subgroups(G: FiniteGroup) -> CyclicSubgroupSet:
    """Every subgroup generated by a single element, deduplicated."""
    _, subgroups = _scan(G)
    return CyclicSubgroupSet(subgroups=subgroups)


def invariants(G: FiniteGroup) -> GroupInvariants:
    """Counted order, i, c, r, beta, and the element-order histogram."""
    orders, subgroups = _scan(G)
    histogram = Counter(orders)
    i = histogram.get(1, 0) + histogram.get(2, 0)
    c = len(subgroups)
    if i > c:
        raise AssertionError("i(G) > c(G) cannot happen: x -> <x> is injective on I(G)")
    return GroupInvariants(
        order=G.order,
        i=i,
        c=c,
        r=c - i,
        beta=Fraction(i, c),
        order_histogram=dict(sorted(histogram.items())),
    )


def is_elementary_abelian_2(G: FiniteGroup) -> bool:
    """True iff every element squares to the identity."""
    return involution_count(G) == G.order


def is_normal_subgroup(G: FiniteGroup, members) -> bool:
    """True iff the subgroup on ``members`` is invariant under conjugation.

    ``members`` must actually be a subgroup (contain the identity and be
    closed under the table); anything else is a domain error.
    """
    subgroup = sorted(set(int(x) for x in members))
    if not subgroup or subgroup[0] != 0 or subgroup[-1] >= G.order:
        raise DomainError("not a subgroup: must contain index 0 and stay in range")
    member_set = frozenset(subgroup)
    item = G.table.item
    for a in subgroup:
        for b in subgroup:
            if item(a, b) not in member_set:
                raise DomainError("not a subgroup: set is not closed under the table")
    inverse = np.argmax(G.table == 0, axis=1)
    for g in range(G.order):
        g_inv = int(inverse[g])
        for s in subgroup:
            if item(item(g, s), g_inv) not in member_set:
                return False
    return True
