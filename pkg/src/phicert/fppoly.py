"""Polynomial arithmetic over Z/pZ and deterministic irreducibility testing.

Residues are stored as plain nonnegative ints in [0, p).  Primality of the
modulus is established by deterministic Miller-Rabin with the witness set
that is known sufficient below 2^64; every prime this package actually uses
is tiny, so the test is uncontroversial.

Irreducibility uses Rabin's criterion: a degree-d polynomial f is
irreducible over Z/pZ iff x^(p^d) == x (mod f) and gcd(x^(p^(d/q)) - x, f)
is 1 for every prime q dividing d.  The factor-degree multiset needed by
the reducibility oracle comes from squarefree decomposition followed by
distinct-degree splitting; explicit equal-degree splitting is never needed
because only the degrees matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .zpoly import IntPoly

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 2^64."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    """All primes p < bound, ascending."""
    return [p for p in range(2, bound) if is_prime(p)]


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1 by trial division (small inputs only)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _norm(p: int, coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] % p == 0:
        coeffs.pop()
    return tuple(c % p for c in coeffs)


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over Z/pZ, dense ascending coefficients in [0, p)."""

    p: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [(self.coeff(i) + other.coeff(i)) % self.p for i in range(n)]
        return FpPoly(self.p, _norm(self.p, out))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = [(self.coeff(i) - other.coeff(i)) % self.p for i in range(n)]
        return FpPoly(self.p, _norm(self.p, out))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.p, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % self.p
        return FpPoly(self.p, _norm(self.p, out))

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def monic(self) -> "FpPoly":
        """Scale by the inverse of the leading coefficient."""
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        inv = pow(self.coeffs[-1], -1, self.p)
        return FpPoly(self.p, tuple(c * inv % self.p for c in self.coeffs))

    def derivative(self) -> "FpPoly":
        out = [i * c % self.p for i, c in enumerate(self.coeffs)][1:]
        return FpPoly(self.p, _norm(self.p, out))


def fp_constant(p: int, c: int) -> FpPoly:
    return FpPoly(p, _norm(p, [c]))


def fp_x(p: int) -> FpPoly:
    return FpPoly(p, (0, 1))


def reduce_mod_p(f: IntPoly, p: int) -> FpPoly:
    """Coefficientwise reduction of an integer polynomial into [0, p)."""
    if p < 2:
        raise ValueError("modulus must be at least 2")
    return FpPoly(p, _norm(p, list(f.coeffs)))


def fp_divmod(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly]:
    a._check(b)
    if b.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    p = a.p
    inv = pow(b.coeffs[-1], -1, p)
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) <= db:
        return FpPoly(p, ()), a
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % p
        if c == 0:
            continue
        quot[i - db] = c
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] = (rem[i - db + j] - c * bc) % p
    return FpPoly(p, _norm(p, quot)), FpPoly(p, _norm(p, rem[:db]))


def fp_mod(a: FpPoly, b: FpPoly) -> FpPoly:
    return fp_divmod(a, b)[1]


def gcd_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd by Euclid; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero:
        a, b = b, fp_mod(a, b)
    return a.monic()


def fp_powmod(base: FpPoly, e: int, modulus: FpPoly) -> FpPoly:
    """base^e reduced mod modulus, by repeated squaring."""
    result = fp_constant(base.p, 1)
    base = fp_mod(base, modulus)
    while e:
        if e & 1:
            result = fp_mod(result * base, modulus)
        base = fp_mod(base * base, modulus)
        e >>= 1
    return result


def frobenius_power(modulus: FpPoly, e: int) -> FpPoly:
    """x^(p^e) reduced mod a monic modulus of degree >= 1."""
    if not modulus.is_monic or modulus.degree < 1:
        raise ValueError("modulus must be monic of degree >= 1")
    if e < 1:
        raise ValueError("exponent must be positive")
    return fp_powmod(fp_x(modulus.p), modulus.p ** e, modulus)


def is_irreducible_fp(f: FpPoly) -> bool:
    """Rabin irreducibility test over Z/pZ for a polynomial of degree >= 1."""
    d = f.degree
    if d is None or d == 0:
        raise ValueError("irreducibility is undefined for constants")
    if d == 1:
        return True
    g = f.monic()
    x = fp_x(f.p)
    if frobenius_power(g, d) != x:
        return False
    for q in prime_factors(d):
        h = frobenius_power(g, d // q) - x
        if gcd_fp(h, g).degree != 0:
            return False
    return True


def is_irreducible_mod_p(f: IntPoly, p: int) -> bool:
    """True iff f mod p is irreducible over Z/pZ.

    Requires the reduction to keep the degree of f (leading coefficient not
    divisible by p) and degree >= 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fbar = reduce_mod_p(f, p)
    if fbar.degree != f.degree:
        raise ValueError(f"degree drops under reduction mod {p}")
    return is_irreducible_fp(fbar)


@dataclass(frozen=True)
class IrreducibilityReport:
    """Per-prime irreducibility of a fixed polynomial over a prime window."""

    bound: int
    inclusive: bool
    results: tuple[tuple[int, bool], ...]

    @property
    def all_irreducible(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failing_primes(self) -> tuple[int, ...]:
        return tuple(p for p, ok in self.results if not ok)


def irreducible_mod_all_primes_below(
    phi: IntPoly, bound: int, inclusive: bool = False
) -> IrreducibilityReport:
    """Check phi mod p for every prime p < bound (or <= bound when inclusive)."""
    if not phi.is_monic or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    top = bound + 1 if inclusive else bound
    results = tuple((p, is_irreducible_mod_p(phi, p)) for p in primes_below(top))
    return IrreducibilityReport(bound, inclusive, results)


def _squarefree_decomposition(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Yun decomposition over F_p, handling p-th power parts via p-th roots."""
    p = f.p
    out: list[tuple[FpPoly, int]] = []

    def rec(g: FpPoly, mult: int) -> None:
        d = g.derivative()
        if d.is_zero:
            # g = h(x^p); over F_p the p-th root keeps the same coefficients
            root = FpPoly(p, _norm(p, [g.coeff(i * p) for i in range(g.degree // p + 1)]))
            rec(root, mult * p)
            return
        w = gcd_fp(g, d)
        s, _ = fp_divmod(g, w)  # product of distinct irreducible factors of g
        i = 1
        while s.degree and s.degree > 0:
            y = gcd_fp(s, w)
            part, _ = fp_divmod(s, y)
            if part.degree and part.degree > 0:
                out.append((part, mult * i))
            s = y
            w, _ = fp_divmod(w, y)
            i += 1
        if w.degree and w.degree > 0:
            rec(w, mult)

    g = f.monic()
    if g.degree and g.degree > 0:
        rec(g, 1)
    return out


def _distinct_degree_degrees(g: FpPoly) -> Iterator[tuple[int, int]]:
    """(degree, count) pairs for a monic squarefree g, via gcds with x^(p^k) - x."""
    x = fp_x(g.p)
    k = 1
    while g.degree and g.degree >= 2 * k:
        h = frobenius_power(g, k) - fp_mod(x, g)
        d = gcd_fp(h, g)
        if d.degree and d.degree > 0:
            yield k, d.degree // k
            g, _ = fp_divmod(g, d)
        k += 1
    if g.degree and g.degree > 0:
        yield g.degree, 1


def distinct_degree_factor_mod_p(f: IntPoly, p: int) -> dict[int, int]:
    """Multiset {degree: count} of irreducible factor degrees of f mod p.

    Counts include multiplicity, so sum(degree * count) == deg f.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    fbar = reduce_mod_p(f, p)
    if fbar.degree != f.degree:
        raise ValueError(f"degree drops under reduction mod {p}")
    multiset: dict[int, int] = {}
    for part, mult in _squarefree_decomposition(fbar):
        for deg, count in _distinct_degree_degrees(part):
            multiset[deg] = multiset.get(deg, 0) + count * mult
    return multiset
