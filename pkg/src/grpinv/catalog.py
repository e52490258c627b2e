"""Built-in catalog of named groups of order <= 16.

Carries every cyclic group, the dihedral and dicyclic families that fit,
all abelian products, A4, and the named order-16 extensions that the
c(G) = |G| - 4 classification needs.  Entries are pairwise
non-isomorphic; aliases record alternative conventional names.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .groups import (
    FiniteGroup,
    _freeze,
    direct_product,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_elementary_abelian_2,
)

__all__ = ["CatalogEntry", "builtin_catalog", "catalog_group", "alternating_4"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    aliases: tuple[str, ...]
    group: FiniteGroup


def _perm_group(perms: list[tuple[int, ...]], name: str) -> FiniteGroup:
    """Multiplication table of a set of permutations closed under composition."""
    perms = sorted(perms)
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = np.zeros((n, n), dtype=np.int64)
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            composed = tuple(p[q[k]] for k in range(len(p)))
            table[a, b] = index[composed]
    return _freeze(table, name=name)


def alternating_4() -> FiniteGroup:
    """The even permutations of four points."""
    evens = []
    for perm in itertools.permutations(range(4)):
        inversions = sum(
            1 for a, b in itertools.combinations(range(4), 2) if perm[a] > perm[b]
        )
        if inversions % 2 == 0:
            evens.append(perm)
    return _perm_group(evens, "A4")


def split_extension_by_involution(
    G: FiniteGroup, alpha, name: str | None = None
) -> FiniteGroup:
    """Order-2|G| extension (g, e) with the flip acting through ``alpha``.

    ``alpha`` is an automorphism given as an index array with alpha(alpha(x)) = x.
    Composition: (a, e)(b, d) = (a * alpha^e(b), e + d); index is 2a + e.
    """
    n = G.order
    alpha = [int(v) for v in alpha]
    item = G.table.item
    if sorted(alpha) != list(range(n)) or any(alpha[alpha[x]] != x for x in range(n)):
        raise DomainError("alpha must be an involutive permutation of the elements")
    for a in range(n):
        for b in range(n):
            if alpha[item(a, b)] != item(alpha[a], alpha[b]):
                raise DomainError("alpha is not an automorphism")
    table = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for a in range(n):
        for e in (0, 1):
            for b in range(n):
                acted = alpha[b] if e else b
                for d in (0, 1):
                    table[2 * a + e, 2 * b + d] = 2 * item(a, acted) + (e + d) % 2
    return _freeze(table, name=name)


def generalized_dihedral(G: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Extension of an abelian group by the inversion x -> x^-1."""
    if not np.array_equal(G.table, G.table.T):
        raise DomainError("inversion is an automorphism only for abelian groups")
    inverse = np.argmax(G.table == 0, axis=1)
    return split_extension_by_involution(G, inverse, name=name)


def _conjugation(G: FiniteGroup, g: int) -> list[int]:
    item = G.table.item
    g_inv = int(np.argmax(G.table[g] == 0))
    return [item(item(g, x), g_inv) for x in range(G.order)]


def _q8_extension() -> FiniteGroup:
    """Q8 extended by conjugation with a 4-element: the order-16 group with
    c = 12 (center of order 4 generated by a mixed element)."""
    q8 = make_dicyclic(8)
    return split_extension_by_involution(q8, _conjugation(q8, 1), name="Q8:Z2")


def _v4_by_z4_swap() -> FiniteGroup:
    """(Z2 x Z2) extended by Z4 acting through the factor swap."""
    table = np.zeros((16, 16), dtype=np.int64)
    for a1, b1, c1 in itertools.product(range(2), range(2), range(4)):
        left = (a1 * 2 + b1) * 4 + c1
        for a2, b2, c2 in itertools.product(range(2), range(2), range(4)):
            right = (a2 * 2 + b2) * 4 + c2
            if c1 % 2:
                a2, b2 = b2, a2
            value = (((a1 ^ a2) * 2 + (b1 ^ b2))) * 4 + (c1 + c2) % 4
            table[left, right] = value
    return _freeze(table, name="(Z2xZ2):Z4")


def _abelian(name: str, *factors: int) -> CatalogEntry:
    group = make_cyclic(factors[0])
    for f in factors[1:]:
        group = direct_product(group, make_cyclic(f))
    return CatalogEntry(name=name, aliases=(), group=_freeze(group.table, name=name))


def _named(name: str, group: FiniteGroup, *aliases: str) -> CatalogEntry:
    return CatalogEntry(name=name, aliases=aliases, group=_freeze(group.table, name=name))


@functools.lru_cache(maxsize=1)
def builtin_catalog() -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []
    for n in range(1, 17):
        aliases = ()
        if n == 1:
            aliases = ("trivial",)
        elif n == 2:
            aliases = ("D2",)
        entries.append(
            CatalogEntry(name=f"Z{n}", aliases=aliases, group=make_cyclic(n))
        )
    entries += [
        _named("Z2xZ2", make_elementary_abelian_2(2), "V4", "D4"),
        _named("Z2xZ2xZ2", make_elementary_abelian_2(3)),
        _named("Z2xZ2xZ2xZ2", make_elementary_abelian_2(4)),
        _abelian("Z4xZ2", 4, 2),
        _abelian("Z4xZ4", 4, 4),
        _abelian("Z4xZ2xZ2", 4, 2, 2),
        _abelian("Z8xZ2", 8, 2),
        _abelian("Z6xZ2", 6, 2),
        _abelian("Z3xZ3", 3, 3),
        _named("D6", make_dihedral(6), "S3"),
        _named("D8", make_dihedral(8)),
        _named("D10", make_dihedral(10)),
        _named("D12", make_dihedral(12)),
        _named("D14", make_dihedral(14)),
        _named("D16", make_dihedral(16)),
        _named("Q8", make_dicyclic(8), "Dic8"),
        _named("Dic12", make_dicyclic(12), "Q12"),
        _named("Q16", make_dicyclic(16), "Dic16"),
        _named("A4", alternating_4()),
        _named(
            "Z2xD8",
            direct_product(make_cyclic(2), make_dihedral(8)),
        ),
        _named("(Z2xZ2):Z4", _v4_by_z4_swap()),
        _named("Q8:Z2", _q8_extension()),
    ]
    return tuple(entries)


def catalog_group(name: str) -> FiniteGroup:
    """Look up a catalog member by primary name or alias."""
    for entry in builtin_catalog():
        if entry.name == name or name in entry.aliases:
            return entry.group
    raise KeyError(f"no catalog group named {name!r}")
