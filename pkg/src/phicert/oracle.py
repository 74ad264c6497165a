"""Independent desk-scale evidence for (ir)reducibility.

Deliberately one-sided: irreducibility is only certified through the
degree sieve's exclusion argument (sound), and reducibility only through
explicit witnesses that are re-verified by exact multiplication or
evaluation before being reported.  Nothing here ever guesses, and full
factorization over Z is out of scope.

The degree sieve works as follows: for each "good" prime (leading
coefficient survives, reduction squarefree) compute the multiset of
irreducible-factor degrees of f mod p.  A proper factor over Z of degree d
would reduce to a subset of the mod-p factors, so d must be a subset-sum
of every multiset.  Intersecting the feasible degree sets across primes
either empties out (irreducible, certainly) or stays inconclusive.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .certifier import Certificate, IRREDUCIBLE, ProblemInstance, build_scaled_polynomial
from .fppoly import distinct_degree_factor_mod_p, gcd_fp, is_prime, reduce_mod_p
from .zpoly import IntPoly, ZERO

IRREDUCIBLE_CERTAIN = "IRREDUCIBLE_CERTAIN"
REDUCIBLE_WITH_WITNESS = "REDUCIBLE_WITH_WITNESS"
INCONCLUSIVE = "INCONCLUSIVE"


# ---------------------------------------------------------------------------
# Integer roots
# ---------------------------------------------------------------------------

def _pollard_rho(n: int, rng: random.Random) -> int:
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 (trial division plus Pollard rho)."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    for d in (2, 3, 5, 7, 11, 13):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    rng = random.Random(0xC0FFEE)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = m
        while d == m:
            d = _pollard_rho(m, rng)
        stack += [d, m // d]
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def integer_root_search(f: IntPoly) -> list[int]:
    """All integer roots of a nonzero f, by testing divisors of the constant term."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    roots = set()
    coeffs = list(f.coeffs)
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(0)
    g = IntPoly.from_coeffs(coeffs)
    if g.degree and g.degree >= 1:
        for d in divisors(abs(g.constant_term)):
            for r in (d, -d):
                if g(r) == 0:
                    roots.add(r)
    # every reported root re-verifies against the original polynomial
    assert all(f(r) == 0 for r in roots)
    return sorted(roots)


# ---------------------------------------------------------------------------
# Degree sieve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SieveReport:
    verdict: str  # IRREDUCIBLE_CERTAIN or INCONCLUSIVE
    primes_used: tuple[int, ...]
    feasible_proper_degrees: tuple[int, ...]
    per_prime: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "primes_used": [str(p) for p in self.primes_used],
            "feasible_proper_degrees": list(self.feasible_proper_degrees),
            "per_prime": [
                {"p": str(p), "degrees": [[d, c] for d, c in multiset]}
                for p, multiset in self.per_prime
            ],
        }


def _subset_sum_bits(multiset: dict[int, int]) -> int:
    bits = 1
    for deg, count in multiset.items():
        for _ in range(count):
            bits |= bits << deg
    return bits


def degree_sieve(f: IntPoly, prime_budget: int = 25) -> SieveReport:
    """Intersect feasible proper-factor degrees across good primes.

    IRREDUCIBLE_CERTAIN when the intersection empties; INCONCLUSIVE
    otherwise.  The sieve alone never claims reducibility.
    """
    if f.is_zero or f.degree < 1:
        raise ValueError("sieve needs a nonzero polynomial of degree >= 1")
    deg = f.degree
    feasible = set(range(1, deg))
    used: list[int] = []
    per_prime: list[tuple[int, tuple[tuple[int, int], ...]]] = []
    p = 1
    # cap the scan so a polynomial with no good primes (e.g. a square in
    # Z[x], which is squarefree modulo no prime) still terminates
    examined = 0
    while len(used) < prime_budget and feasible and examined < 20 * prime_budget + 100:
        p += 1
        while not is_prime(p):
            p += 1
        examined += 1
        if f.leading % p == 0:
            continue
        fbar = reduce_mod_p(f, p)
        if gcd_fp(fbar, fbar.derivative()).degree != 0:
            continue
        multiset = distinct_degree_factor_mod_p(f, p)
        bits = _subset_sum_bits(multiset)
        feasible &= {d for d in range(1, deg) if bits >> d & 1}
        used.append(p)
        per_prime.append((p, tuple(sorted(multiset.items()))))
    verdict = IRREDUCIBLE_CERTAIN if not feasible else INCONCLUSIVE
    return SieveReport(
        verdict=verdict,
        primes_used=tuple(used),
        feasible_proper_degrees=tuple(sorted(feasible)),
        per_prime=tuple(per_prime),
    )


# ---------------------------------------------------------------------------
# Known factorization shapes
# ---------------------------------------------------------------------------

def _int_sqrt(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def poly_sqrt(f: IntPoly) -> IntPoly | None:
    """Exact square root in Z[x] with positive leading coefficient, or None."""
    if f.is_zero:
        return ZERO
    if f.degree % 2:
        return None
    lead = _int_sqrt(f.leading)
    if lead is None or lead == 0:
        return None
    half = f.degree // 2
    g = [0] * (half + 1)
    g[half] = lead
    for i in range(half - 1, -1, -1):
        # coefficient of x^(half + i) in g^2 must match f
        acc = sum(g[a] * g[half + i - a] for a in range(i + 1, half) if 0 <= half + i - a <= half)
        num = f.coeff(half + i) - acc
        if num % (2 * lead):
            return None
        g[i] = num // (2 * lead)
    cand = IntPoly.from_coeffs(g)
    return cand if cand * cand == f else None


def known_form_factor(
    f: IntPoly, phi: IntPoly
) -> tuple[IntPoly, IntPoly] | None:
    """Detect the two counterexample shapes in the phi-expansion of f.

    Difference form a^2 phi^(2t) - b(x)^2 gives (a phi^t - b)(a phi^t + b);
    square form (a phi^t + b)^2 is returned as the pair of equal factors.
    Factors are re-multiplied and checked before being returned.
    """
    from .zpoly import phi_expand

    expansion = phi_expand(f, phi)
    terms = expansion.terms
    nonzero = [i for i, t in enumerate(terms) if not t.is_zero]
    result = None
    if len(nonzero) == 2 and nonzero[0] == 0 and nonzero[1] % 2 == 0:
        top = nonzero[1]
        t = top // 2
        a_term, c_term = terms[top], terms[0]
        if a_term.degree == 0:
            a = _int_sqrt(a_term.constant_term)
            b = poly_sqrt(-c_term)
            if a is not None and a > 0 and b is not None:
                result = (a * phi**t - b, a * phi**t + b)
    elif len(nonzero) == 3 and nonzero[0] == 0 and nonzero[2] == 2 * nonzero[1]:
        t = nonzero[1]
        a_term = terms[2 * t]
        if a_term.degree == 0:
            a = _int_sqrt(a_term.constant_term)
            if a is not None and a > 0:
                mid = terms[t]
                # b = mid / (2a), exact or bust
                if all(c % (2 * a) == 0 for c in mid.coeffs):
                    b = IntPoly.from_coeffs(c // (2 * a) for c in mid.coeffs)
                    half = a * phi**t + b
                    result = (half, half)
    if result is not None and result[0] * result[1] == f:
        return result
    return None


# ---------------------------------------------------------------------------
# Cross-check against a certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossCheckReport:
    verdict: str  # combined oracle verdict
    roots: tuple[int, ...]
    known_factors: tuple[IntPoly, IntPoly] | None
    sieve: SieveReport
    certificate_verdict: str
    contradiction: bool

    def to_json(self) -> dict:
        from .zpoly import poly_to_literal

        return {
            "verdict": self.verdict,
            "roots": [str(r) for r in self.roots],
            "known_factors": None
            if self.known_factors is None
            else [poly_to_literal(g) for g in self.known_factors],
            "sieve": self.sieve.to_json(),
            "certificate_verdict": self.certificate_verdict,
            "contradiction": self.contradiction,
        }


def analyze(f: IntPoly, phi: IntPoly | None, prime_budget: int = 25):
    """Root search, known-shape factoring, and the degree sieve, combined."""
    roots = tuple(integer_root_search(f))
    factors = known_form_factor(f, phi) if phi is not None else None
    sieve = degree_sieve(f, prime_budget)
    if roots or factors is not None:
        verdict = REDUCIBLE_WITH_WITNESS
    else:
        verdict = sieve.verdict
    return verdict, roots, factors, sieve


def cross_check(
    inst: ProblemInstance, cert: Certificate, prime_budget: int = 25
) -> CrossCheckReport:
    """Flag any contradiction between a certificate and oracle evidence.

    A certificate claiming IRREDUCIBLE alongside any re-verified
    reducibility witness is fatal; IRREDUCIBLE with an inconclusive sieve
    is fine (the sieve is incomplete by design).
    """
    scaled = build_scaled_polynomial(inst)
    verdict, roots, factors, sieve = analyze(scaled, inst.phi, prime_budget)
    contradiction = cert.verdict == IRREDUCIBLE and verdict == REDUCIBLE_WITH_WITNESS
    return CrossCheckReport(
        verdict=verdict,
        roots=roots,
        known_factors=factors,
        sieve=sieve,
        certificate_verdict=cert.verdict,
        contradiction=contradiction,
    )
