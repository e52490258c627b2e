"""Number-theoretic helpers and exact-rational plumbing.

Every beta-valued quantity in this package is carried by
``fractions.Fraction``, which already guarantees reduced form, a positive
denominator, and structural equality of reduced forms.  This module adds
the integer-side utilities the group engine needs: totient, divisor
count, an odd-prime stream with a hard cap, square roots of unity in the
unit group mod n, and a strict decimal-to-rational parser.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import DomainError, ParseError, ResourceLimitError

#: Hard ceiling for prime generation; beyond it we raise instead of sieving on.
DEFAULT_PRIME_CAP = 10**6

__all__ = [
    "DEFAULT_PRIME_CAP",
    "euler_phi",
    "tau",
    "odd_primes",
    "iter_odd_primes",
    "unit_involutions",
    "rational_from_decimal",
]


def euler_phi(n: int) -> int:
    """Count the integers in [1, n] coprime to n."""
    if n < 1:
        raise DomainError(f"euler_phi is defined for n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def tau(n: int) -> int:
    """Count the positive divisors of n."""
    if n < 1:
        raise DomainError(f"tau is defined for n >= 1, got {n}")
    count = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            count *= e + 1
        p += 1 if p == 2 else 2
    if m > 1:
        count *= 2
    return count


@functools.lru_cache(maxsize=8)
def _primes_upto(limit: int) -> tuple[int, ...]:
    if limit < 2:
        return ()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return tuple(int(p) for p in np.nonzero(sieve)[0])


def iter_odd_primes(cap: int = DEFAULT_PRIME_CAP):
    """Yield the odd primes 3, 5, 7, ... up to and including ``cap``."""
    for p in _primes_upto(max(cap, 0)):
        if p > 2:
            yield p


def odd_primes(count: int, cap: int = DEFAULT_PRIME_CAP) -> list[int]:
    """First ``count`` odd primes in increasing order (3 is the first)."""
    if count < 1:
        raise DomainError(f"odd_primes needs count >= 1, got {count}")
    # Rosser-type overestimate of the (count+1)-th prime, then grow if short.
    limit = 32
    while True:
        found = [p for p in _primes_upto(min(limit, cap)) if p > 2]
        if len(found) >= count:
            return found[:count]
        if limit >= cap:
            raise ResourceLimitError(
                f"{count} odd primes not available below the prime cap {cap}"
            )
        limit = min(limit * 4, cap)


def unit_involutions(n: int) -> list[int]:
    """All u in [1, n-1] with gcd(u, n) = 1 and u*u = 1 (mod n), ascending."""
    if n < 2:
        raise DomainError(f"unit_involutions needs n >= 2, got {n}")
    return [u for u in range(1, n) if gcd(u, n) == 1 and (u * u) % n == 1]


_DECIMAL_RE = re.compile(r"([+-]?)(\d+)(?:\.(\d*))?\Z")


def rational_from_decimal(text: str) -> Fraction:
    """Parse a decimal literal ('1', '0.5', '-2.25') into an exact Fraction.

    Only an optional sign, an integer part, and an optional fractional part
    are accepted; anything else is a parse error.
    """
    m = _DECIMAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a decimal literal: {text!r}")
    sign, whole, frac = m.groups()
    frac = frac or ""
    value = Fraction(int(whole + frac) if frac else int(whole), 10 ** len(frac))
    return -value if sign == "-" else value
