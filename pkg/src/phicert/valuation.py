"""p-adic valuations on integers and integer polynomials.

``vp(0, p)`` is INFINITY, an explicit singleton variant rather than a
sentinel integer, so downstream polygon code cannot mistake a vanished
coefficient for a finite lattice point.  Slopes are ``fractions.Fraction``
values; every slope comparison in this package is exact cross-multiplied
rational arithmetic, never floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .fppoly import is_prime
from .zpoly import IntPoly


class _Infinity:
    """The valuation of zero: greater than every integer, absorbing under +."""

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is INFINITY

    def __gt__(self, other: object) -> bool:
        return other is not INFINITY

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "_Infinity":
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

ExtendedNat = Union[int, _Infinity]


def vp(b: int, p: int) -> ExtendedNat:
    """Exponent of the highest power of the prime p dividing b; vp(0) = INFINITY."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if b == 0:
        return INFINITY
    v = 0
    while b % p == 0:
        b //= p
        v += 1
    return v


def vpx(f: IntPoly, p: int) -> ExtendedNat:
    """Gauss valuation: minimum coefficient valuation; vpx(0) = INFINITY."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.is_zero:
        return INFINITY
    best: ExtendedNat = INFINITY
    for c in f.coeffs:
        if c == 0:
            continue
        v = vp(c, p)
        if v < best:
            best = v
        if best == 0:
            break
    return best


def vp_factorial(m: int, p: int) -> int:
    """Valuation of m! by Legendre's formula sum(floor(m / p^i))."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = 0
    q = p
    while q <= m:
        total += m // q
        q *= p
    return total


def ratio_str(q: Fraction) -> str:
    """Serialize a slope as "num/den" in lowest terms (Fraction keeps them)."""
    return f"{q.numerator}/{q.denominator}"


def ratio_from_str(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)
