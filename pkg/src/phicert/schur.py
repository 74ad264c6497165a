"""Odd-product sequences u_j and the prime-existence lemma with its exceptions.

u_j is the product of all odd positive integers <= j, so u_0 = u_2 = 1,
u_4 = 3, u_6 = 15, and u_{2j} = (2j)! / (2^j j!).  The prime-existence
lemma says: among k consecutive odd numbers 2n+1, ..., 2n+2k-1 (with
n > k >= 1), some member has a prime factor p > 2k+1 -- except exactly when
k = 1 and 2n+1 is a power of 3 (exponent >= 2), or k = 2 and 2n+1 = 25.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@lru_cache(maxsize=None)
def u(j: int) -> int:
    """Product of the odd positive integers <= j; u(0) = 1 (empty product)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    prod = 1
    for m in range(1, j + 1, 2):
        prod *= m
    return prod


def u_ratio(a: int, b: int) -> int:
    """u(a) / u(b) for even b <= a: the product of the odd numbers in (b, a]."""
    if a % 2 or b % 2:
        raise ValueError("u_ratio is defined for even arguments")
    if b > a or b < 0:
        raise ValueError("need 0 <= b <= a")
    prod = 1
    for m in range(b + 1, a + 1, 2):
        prod *= m
    return prod


def is_power_of_three(m: int) -> tuple[bool, int | None]:
    """Whether m = 3^u for some u >= 1; returns (flag, exponent)."""
    if m < 3:
        return False, None
    e = 0
    while m % 3 == 0:
        m //= 3
        e += 1
    return (m == 1, e) if m == 1 else (False, None)


@dataclass(frozen=True)
class SchurWitness:
    """A prime p > 2k+1 together with the odd window member it divides."""

    p: int
    divides: int

    def validate(self, k: int, window_start: int) -> None:
        if self.divides % 2 == 0:
            raise ValueError("witness member must be odd")
        if not window_start <= self.divides <= window_start + 2 * (k - 1):
            raise ValueError("witness member outside the window")
        if self.divides % self.p:
            raise ValueError("witness prime does not divide its member")
        if self.p <= 2 * k + 1:
            raise ValueError("witness prime is not > 2k+1")


def find_schur_prime_from(start: int, k: int) -> SchurWitness | None:
    """Witness for the window of k consecutive odd numbers start, start+2, ...

    Deterministic tie-break: smallest qualifying prime, then smallest window
    member, so certificates built on top are byte-for-byte reproducible.
    """
    if k < 1 or start < 1 or start % 2 == 0:
        raise ValueError("window must start at a positive odd number, k >= 1")
    hits: list[tuple[int, int]] = []
    for w in range(start, start + 2 * k, 2):
        m = w
        d = 3
        while d * d <= m:
            if m % d == 0:
                if d > 2 * k + 1:
                    hits.append((d, w))
                while m % d == 0:
                    m //= d
            d += 2
        if m > 2 * k + 1:
            hits.append((m, w))
    if not hits:
        return None
    p, w = min(hits)
    witness = SchurWitness(p, w)
    witness.validate(k, start)
    return witness


def find_schur_prime(n: int, k: int) -> SchurWitness | None:
    """Witness among 2n+1, 2n+3, ..., 2n+2k-1 for n > k >= 1, or None.

    None occurs exactly in the lemma's exceptional cases (k = 1 with 2n+1 a
    power of 3 with exponent >= 2, and k = 2 with 2n+1 = 25).
    """
    if not n > k >= 1:
        raise ValueError("need n > k >= 1")
    return find_schur_prime_from(2 * n + 1, k)
