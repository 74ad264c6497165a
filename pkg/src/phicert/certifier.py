"""Irreducibility certificates for scaled Hermite-type polynomials.

A problem instance is (c, n, phi, a_n, a_0(x)..a_{n-1}(x)) with c in {0, 2},
phi monic, and deg a_i < deg phi.  The certified polynomial is the exact
integer scaling

    F = a_n * phi^(2n) + sum_j (u(2n+c)/u(2j+c)) * a_j(x) * phi^(2j),

and the certificate is a machine-checkable transcript of why F has no
factor of degree in [1, (n+1)*deg phi): a hypothesis report, a
small-degree exclusion prime, and one (prime, divisibility, slope) witness
per factor-degree class k = 1..n.  Since deg F = 2n * deg phi, any
nontrivial factorization would put some factor in that range, so a full
transcript certifies irreducibility.

The per-class prime is found by direct search over the admissible window
rather than by invoking the prime-existence lemma, so exceptional cases
degrade to an honest INCONCLUSIVE instead of an overclaim.  Tie-breaks
(smallest prime first) are fixed so certificates reproduce byte-for-byte.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction

from .fppoly import is_irreducible_mod_p, is_prime, prime_factors, primes_below
from .polygon import polygon_of_coefficients, rightmost_slope, rightmost_slope_formula
from .schur import is_power_of_three, u_ratio
from .valuation import ratio_from_str, ratio_str, vpx
from .zpoly import IntPoly, content, poly_from_literal, poly_to_literal

CERT_SCHEMA = "phi-irred-cert/1"
INSTANCE_SCHEMA = "phi-irred/1"

IRREDUCIBLE = "IRREDUCIBLE"
INCONCLUSIVE = "INCONCLUSIVE"
HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"


class PolynomialLeadingCoefficientError(ValueError):
    """Raised when the top coefficient a_n is supplied as a genuine polynomial.

    The theorems fail in that generality: with phi = x^2 - x + 5 and
    a_2 = x - 3, a_1 = x + 26, a_0 = 5(x - 5), the assembled polynomial has
    0 as a root.  The API therefore only accepts an integer a_n.
    """


@dataclass(frozen=True)
class ProblemInstance:
    """One application of the c = 0 or c = 2 irreducibility theorem."""

    c: int
    n: int
    phi: IntPoly
    a_n: int
    lower_coeffs: tuple[IntPoly, ...]

    def __post_init__(self) -> None:
        if self.c not in (0, 2):
            raise ValueError("c must be 0 or 2")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not isinstance(self.a_n, int) or self.a_n == 0:
            raise ValueError("a_n must be a nonzero integer")
        if len(self.lower_coeffs) != self.n:
            raise ValueError(f"expected {self.n} lower coefficients a_0..a_{self.n - 1}")
        if self.lower_coeffs[0].is_zero:
            raise ValueError("a_0(x) must be nonzero (the content condition presumes it)")

    @property
    def a0(self) -> IntPoly:
        return self.lower_coeffs[0]

    @property
    def prime_window(self) -> int:
        """Exclusive upper bound 2n + c on the primes the hypotheses speak about."""
        return 2 * self.n + self.c

    def to_json(self) -> dict:
        return {
            "schema": INSTANCE_SCHEMA,
            "c": self.c,
            "n": self.n,
            "phi": poly_to_literal(self.phi),
            "a_n": str(self.a_n),
            "a": [poly_to_literal(a) for a in self.lower_coeffs],
        }


def parse_instance(doc: dict) -> ProblemInstance:
    """Parse the instance file schema, rejecting a polynomial a_n by name."""
    if not isinstance(doc, dict) or doc.get("schema") != INSTANCE_SCHEMA:
        raise ValueError(f'instance file must carry schema "{INSTANCE_SCHEMA}"')
    a_n_raw = doc.get("a_n")
    if isinstance(a_n_raw, list):
        top = poly_from_literal(a_n_raw)
        if top.degree is not None and top.degree >= 1:
            raise PolynomialLeadingCoefficientError(
                "a_n must be an integer, not a polynomial: the irreducibility "
                "theorems fail for polynomial leading coefficients (there are "
                "explicit counterexamples with 0 as a root)"
            )
        a_n = top.constant_term
    elif isinstance(a_n_raw, (str, int)):
        a_n = int(a_n_raw)
    else:
        raise ValueError("a_n must be an integer string")
    try:
        return ProblemInstance(
            c=int(doc["c"]),
            n=int(doc["n"]),
            phi=poly_from_literal(doc["phi"]),
            a_n=a_n,
            lower_coeffs=tuple(poly_from_literal(a) for a in doc["a"]),
        )
    except KeyError as exc:
        raise ValueError(f"instance file missing field {exc}") from exc


def instance_digest(inst: ProblemInstance) -> str:
    canonical = json.dumps(inst.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def poly_digest(f: IntPoly) -> str:
    canonical = json.dumps(poly_to_literal(f), separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HypothesisReport:
    phi_monic: bool
    degree_bounds: bool
    structural_ok: bool
    structural_detail: str
    prime_window: int
    phi_irreducible: tuple[tuple[int, bool], ...]
    content_value: int
    content_offenders: tuple[int, ...]

    @property
    def overall(self) -> bool:
        return (
            self.phi_monic
            and self.degree_bounds
            and self.structural_ok
            and all(ok for _, ok in self.phi_irreducible)
            and not self.content_offenders
        )

    def to_json(self) -> dict:
        return {
            "pass": self.overall,
            "phi_monic": self.phi_monic,
            "degree_bounds": self.degree_bounds,
            "structural": {"pass": self.structural_ok, "detail": self.structural_detail},
            "prime_window": str(self.prime_window),
            "phi_irreducible": [{"p": str(p), "ok": ok} for p, ok in self.phi_irreducible],
            "content": {
                "value": str(self.content_value),
                "offending_primes": [str(p) for p in self.content_offenders],
            },
        }


def check_hypotheses(inst: ProblemInstance) -> HypothesisReport:
    """Full per-item hypothesis report; failures are reported, never raised."""
    phi = inst.phi
    phi_monic = phi.is_monic and phi.degree >= 1
    degree_bounds = phi_monic and all(
        a.is_zero or a.degree < phi.degree for a in inst.lower_coeffs
    )

    if inst.c == 0:
        structural_ok = inst.n >= 2
        structural_detail = (
            "n >= 2 holds"
            if structural_ok
            else "n = 1 is excluded: phi^2 - x^2 = (phi + x)(phi - x) is reducible "
            "for any monic phi of degree >= 3"
        )
    else:
        is_pow, exp = is_power_of_three(2 * inst.n + 1)
        structural_ok = not (is_pow and exp >= 2)
        structural_detail = (
            f"2n+1 = {2 * inst.n + 1} is not a power of 3 with exponent >= 2"
            if structural_ok
            else f"2n+1 = {2 * inst.n + 1} = 3^{exp} is excluded by hypothesis"
        )

    window = inst.prime_window
    if phi_monic:
        phi_irr = tuple((p, is_irreducible_mod_p(phi, p)) for p in primes_below(window))
    else:
        phi_irr = ()

    cont = abs(inst.a_n) * content(inst.a0)
    offenders = tuple(p for p in primes_below(window) if cont % p == 0)

    return HypothesisReport(
        phi_monic=phi_monic,
        degree_bounds=degree_bounds,
        structural_ok=structural_ok,
        structural_detail=structural_detail,
        prime_window=window,
        phi_irreducible=phi_irr,
        content_value=cont,
        content_offenders=offenders,
    )


# ---------------------------------------------------------------------------
# Coefficient sequence and exact scaling
# ---------------------------------------------------------------------------

def c_coefficients(n: int, c: int) -> list[int]:
    """The c_i with c_{2j} = u(2n+c)/u(2j+c) and c_i = 0 for odd i.

    These are the phi-expansion constants of the reference polynomial g_c
    obtained by setting a_n = 1 and every a_j(x) = 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if c not in (0, 2):
        raise ValueError("c must be 0 or 2")
    coeffs = [0] * (2 * n + 1)
    for j in range(n + 1):
        coeffs[2 * j] = u_ratio(2 * n + c, 2 * j + c)
    return coeffs


def build_scaled_polynomial(inst: ProblemInstance) -> IntPoly:
    """F = a_n phi^(2n) + sum_j (u(2n+c)/u(2j+c)) a_j(x) phi^(2j), exactly.

    All scaling is by clearing denominators over the integers; no rational
    arithmetic is ever involved.
    """
    coeffs = c_coefficients(inst.n, inst.c)
    total = IntPoly.of(inst.a_n) * inst.phi ** (2 * inst.n)
    for j in range(inst.n):
        total = total + inst.lower_coeffs[j] * coeffs[2 * j] * inst.phi ** (2 * j)
    return total


# ---------------------------------------------------------------------------
# Certificate structure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SmallDegreeStep:
    """Exclusion of factors of degree in [1, deg phi) by reduction mod p0."""

    target: int
    p0: int | None
    a_n_not_divisible: bool
    coefficient_indices: tuple[int, ...]
    all_divisible: bool

    @property
    def passed(self) -> bool:
        return self.p0 is not None and self.a_n_not_divisible and self.all_divisible

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "p0": None if self.p0 is None else str(self.p0),
            "a_n_not_divisible": self.a_n_not_divisible,
            "coefficient_indices": [str(i) for i in self.coefficient_indices],
            "all_divisible": self.all_divisible,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class SearchEntry:
    p: int
    reason: str  # "" when accepted

    def to_json(self) -> dict:
        return {"p": str(self.p), "reason": self.reason}


@dataclass(frozen=True)
class KStep:
    """Witness excluding factors of degree in [k*deg phi, (k+1)*deg phi)."""

    k: int
    ell: int
    threshold: int
    p: int | None
    divisibility: tuple[int, ...]
    slope: Fraction | None
    bound: Fraction
    p_not_dividing_a_n: bool
    a0_unit_valuation: bool
    passed: bool
    search: tuple[SearchEntry, ...]

    def to_json(self) -> dict:
        return {
            "k": str(self.k),
            "ell": str(self.ell),
            "threshold": str(self.threshold),
            "p": None if self.p is None else str(self.p),
            "divisibility": [str(i) for i in self.divisibility],
            "slope": None if self.slope is None else ratio_str(self.slope),
            "bound": ratio_str(self.bound),
            "p_not_dividing_a_n": self.p_not_dividing_a_n,
            "a0_unit_valuation": self.a0_unit_valuation,
            "pass": self.passed,
            "search": [e.to_json() for e in self.search],
        }


@dataclass(frozen=True)
class Certificate:
    schema: str
    instance: dict
    instance_digest: str
    hypotheses: HypothesisReport
    scaled_digest: str
    phi_degree: int
    coverage: tuple[tuple[int, int], ...]
    small_degree: SmallDegreeStep | None
    steps: tuple[KStep, ...]
    verdict: str

    def to_json(self) -> dict:
        return {
            "schema": self.schema,
            "instance": self.instance,
            "instance_digest": self.instance_digest,
            "hypotheses": self.hypotheses.to_json(),
            "scaled_digest": self.scaled_digest,
            "phi_degree": str(self.phi_degree),
            "coverage": [[str(a), str(b)] for a, b in self.coverage],
            "small_degree": None if self.small_degree is None else self.small_degree.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "verdict": self.verdict,
        }


def certificate_from_json(doc: dict) -> Certificate:
    hyp = doc["hypotheses"]
    hypotheses = HypothesisReport(
        phi_monic=hyp["phi_monic"],
        degree_bounds=hyp["degree_bounds"],
        structural_ok=hyp["structural"]["pass"],
        structural_detail=hyp["structural"]["detail"],
        prime_window=int(hyp["prime_window"]),
        phi_irreducible=tuple((int(e["p"]), e["ok"]) for e in hyp["phi_irreducible"]),
        content_value=int(hyp["content"]["value"]),
        content_offenders=tuple(int(p) for p in hyp["content"]["offending_primes"]),
    )
    sd = doc["small_degree"]
    small_degree = None
    if sd is not None:
        small_degree = SmallDegreeStep(
            target=int(sd["target"]),
            p0=None if sd["p0"] is None else int(sd["p0"]),
            a_n_not_divisible=sd["a_n_not_divisible"],
            coefficient_indices=tuple(int(i) for i in sd["coefficient_indices"]),
            all_divisible=sd["all_divisible"],
        )
    steps = tuple(
        KStep(
            k=int(s["k"]),
            ell=int(s["ell"]),
            threshold=int(s["threshold"]),
            p=None if s["p"] is None else int(s["p"]),
            divisibility=tuple(int(i) for i in s["divisibility"]),
            slope=None if s["slope"] is None else ratio_from_str(s["slope"]),
            bound=ratio_from_str(s["bound"]),
            p_not_dividing_a_n=s["p_not_dividing_a_n"],
            a0_unit_valuation=s["a0_unit_valuation"],
            passed=s["pass"],
            search=tuple(SearchEntry(int(e["p"]), e["reason"]) for e in s["search"]),
        )
        for s in doc["steps"]
    )
    return Certificate(
        schema=doc["schema"],
        instance=doc["instance"],
        instance_digest=doc["instance_digest"],
        hypotheses=hypotheses,
        scaled_digest=doc["scaled_digest"],
        phi_degree=int(doc["phi_degree"]),
        coverage=tuple((int(a), int(b)) for a, b in doc["coverage"]),
        small_degree=small_degree,
        steps=steps,
        verdict=doc["verdict"],
    )


# ---------------------------------------------------------------------------
# Certification
# ---------------------------------------------------------------------------

def _small_degree_step(inst: ProblemInstance, coeffs: list[int]) -> SmallDegreeStep:
    target = 2 * inst.n - 1 if inst.c == 0 else 2 * inst.n + 1
    factors = prime_factors(target) if target > 1 else []
    p0 = factors[0] if factors else None
    indices = tuple(2 * j for j in range(inst.n))
    if p0 is None:
        return SmallDegreeStep(target, None, False, indices, False)
    return SmallDegreeStep(
        target=target,
        p0=p0,
        a_n_not_divisible=inst.a_n % p0 != 0,
        coefficient_indices=indices,
        all_divisible=all(coeffs[i] % p0 == 0 for i in indices),
    )


def _k_step(
    inst: ProblemInstance, coeffs: list[int], k: int, check_polygons: bool
) -> KStep:
    n, c = inst.n, inst.c
    ell = k - 1
    threshold = k + 1 if c == 0 else k + 2
    bound = Fraction(1, k)
    required = tuple(i for i in range(2 * n - ell) if coeffs[i] != 0)
    search: list[SearchEntry] = []
    for p in primes_below(inst.prime_window):
        if p < threshold:
            continue
        if any(coeffs[i] % p for i in required):
            search.append(SearchEntry(p, "divisibility"))
            continue
        if inst.a_n % p == 0:
            search.append(SearchEntry(p, "divides a_n"))
            continue
        if vpx(inst.a0, p) != 0:
            search.append(SearchEntry(p, "divides content of a_0"))
            continue
        slope = rightmost_slope_formula(n, c, p)
        if check_polygons:
            built = rightmost_slope(polygon_of_coefficients(coeffs, p))
            if built != slope:
                raise AssertionError(
                    f"slope formula {slope} disagrees with built polygon {built}"
                )
        if not slope < bound:
            search.append(SearchEntry(p, "slope not below bound"))
            continue
        search.append(SearchEntry(p, ""))
        return KStep(
            k=k,
            ell=ell,
            threshold=threshold,
            p=p,
            divisibility=required,
            slope=slope,
            bound=bound,
            p_not_dividing_a_n=True,
            a0_unit_valuation=True,
            passed=True,
            search=tuple(search),
        )
    return KStep(
        k=k,
        ell=ell,
        threshold=threshold,
        p=None,
        divisibility=required,
        slope=None,
        bound=bound,
        p_not_dividing_a_n=False,
        a0_unit_valuation=False,
        passed=False,
        search=tuple(search),
    )


def _coverage(n: int, phi_degree: int) -> tuple[tuple[int, int], ...]:
    intervals = [(1, phi_degree)]
    intervals += [(k * phi_degree, (k + 1) * phi_degree) for k in range(1, n + 1)]
    # the intervals must tile [1, (n+1) deg phi) exactly
    for (a, b), (c_, _) in zip(intervals, intervals[1:]):
        assert b == c_
    assert intervals[-1][1] == (n + 1) * phi_degree
    return tuple(intervals)


def certify(
    inst: ProblemInstance,
    *,
    check_polygons: bool = False,
    diagnose_steps: bool = False,
) -> Certificate:
    """Run the full certification pipeline on one instance.

    Order of play: (1) hypothesis check -- on failure the verdict is
    HYPOTHESIS_FAILED; (2) small-degree exclusion via the smallest prime
    dividing 2n-1 (c=0) or 2n+1 (c=2); (3) one prime search per factor
    degree class k = 1..n; (4) all green means IRREDUCIBLE, a failed search
    means INCONCLUSIVE -- the certifier never overclaims.

    ``diagnose_steps`` records the small-degree and per-k analysis even when
    the hypotheses fail, purely for inspection; the verdict is unaffected.
    ``check_polygons`` additionally rebuilds the reference polygon for each
    candidate prime and asserts it agrees with the closed-form slope.
    """
    hyp = check_hypotheses(inst)
    coeffs = c_coefficients(inst.n, inst.c)
    scaled = build_scaled_polynomial(inst)
    phi_degree = inst.phi.degree if inst.phi.degree and inst.phi.degree >= 1 else 1
    base = dict(
        schema=CERT_SCHEMA,
        instance=inst.to_json(),
        instance_digest=instance_digest(inst),
        hypotheses=hyp,
        scaled_digest=poly_digest(scaled),
        phi_degree=phi_degree,
        coverage=_coverage(inst.n, phi_degree),
    )

    if not hyp.overall and not diagnose_steps:
        return Certificate(
            **base, small_degree=None, steps=(), verdict=HYPOTHESIS_FAILED
        )

    small = _small_degree_step(inst, coeffs)
    steps = tuple(
        _k_step(inst, coeffs, k, check_polygons) for k in range(1, inst.n + 1)
    )
    if not hyp.overall:
        verdict = HYPOTHESIS_FAILED
    elif small.passed and all(s.passed for s in steps):
        verdict = IRREDUCIBLE
    else:
        verdict = INCONCLUSIVE
    return Certificate(**base, small_degree=small, steps=steps, verdict=verdict)


# ---------------------------------------------------------------------------
# Independent replay
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    diffs: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "diffs": list(self.diffs)}


def verify_certificate(inst: ProblemInstance, cert: Certificate) -> VerifyReport:
    """Recompute every recorded quantity from the instance and compare.

    The replay is independent of certify's control flow: each recorded
    prime, divisibility, valuation, and slope claim is re-derived from
    scratch, and the verdict is checked against the recorded steps.
    """
    diffs: list[str] = []

    def need(cond: bool, msg: str) -> None:
        if not cond:
            diffs.append(msg)

    need(cert.schema == CERT_SCHEMA, f"unknown schema {cert.schema!r}")
    need(cert.instance == inst.to_json(), "instance echo does not match")
    need(cert.instance_digest == instance_digest(inst), "instance digest mismatch")

    hyp = check_hypotheses(inst)
    need(cert.hypotheses == hyp, "hypothesis report does not replay")

    scaled = build_scaled_polynomial(inst)
    need(cert.scaled_digest == poly_digest(scaled), "scaled polynomial digest mismatch")

    phi_degree = inst.phi.degree if inst.phi.degree and inst.phi.degree >= 1 else 1
    need(cert.phi_degree == phi_degree, "phi degree mismatch")
    need(cert.coverage == _coverage(inst.n, phi_degree), "coverage intervals mismatch")

    if cert.verdict == HYPOTHESIS_FAILED:
        need(not hyp.overall, "verdict HYPOTHESIS_FAILED but hypotheses pass")
        return VerifyReport(not diffs, tuple(diffs))

    need(hyp.overall, f"verdict {cert.verdict} despite failing hypotheses")
    coeffs = c_coefficients(inst.n, inst.c)

    sd = cert.small_degree
    if sd is None:
        diffs.append("missing small-degree step")
    else:
        target = 2 * inst.n - 1 if inst.c == 0 else 2 * inst.n + 1
        need(sd.target == target, "small-degree target mismatch")
        factors = prime_factors(target) if target > 1 else []
        need(sd.p0 == (factors[0] if factors else None), "small-degree prime mismatch")
        if sd.p0 is not None:
            need(is_prime(sd.p0), f"recorded p0 = {sd.p0} is not prime")
            need(sd.a_n_not_divisible == (inst.a_n % sd.p0 != 0), "p0 | a_n claim wrong")
            need(
                sd.coefficient_indices == tuple(2 * j for j in range(inst.n)),
                "small-degree index list mismatch",
            )
            need(
                sd.all_divisible
                == all(coeffs[i] % sd.p0 == 0 for i in sd.coefficient_indices),
                "small-degree divisibility claim wrong",
            )
        if cert.verdict == IRREDUCIBLE:
            need(sd.passed, "small-degree step did not pass")

    need(
        tuple(s.k for s in cert.steps) == tuple(range(1, inst.n + 1)),
        "steps must cover k = 1..n in ascending order",
    )
    all_pass = cert.small_degree is not None and cert.small_degree.passed
    for s in cert.steps:
        label = f"step k={s.k}"
        need(s.ell == s.k - 1, f"{label}: ell != k-1")
        threshold = s.k + 1 if inst.c == 0 else s.k + 2
        need(s.threshold == threshold, f"{label}: wrong threshold")
        need(s.bound == Fraction(1, s.k), f"{label}: wrong bound")
        required = tuple(i for i in range(2 * inst.n - s.ell) if coeffs[i] != 0)
        need(s.divisibility == required, f"{label}: divisibility index list mismatch")
        if s.p is None:
            need(not s.passed, f"{label}: passed without a prime")
            all_pass = False
            continue
        if not is_prime(s.p):
            diffs.append(f"{label}: {s.p} is not prime")
            all_pass = False
            continue
        need(threshold <= s.p < inst.prime_window, f"{label}: prime outside window")
        for i in s.divisibility:
            need(coeffs[i] % s.p == 0, f"{label}: c_{i} not divisible by {s.p}")
        need(s.p_not_dividing_a_n and inst.a_n % s.p != 0, f"{label}: p | a_n")
        need(s.a0_unit_valuation and vpx(inst.a0, s.p) == 0, f"{label}: p | content(a_0)")
        expected_slope = rightmost_slope_formula(inst.n, inst.c, s.p)
        need(s.slope == expected_slope, f"{label}: recorded slope does not replay")
        need(
            s.slope is not None and s.slope < s.bound,
            f"{label}: slope not strictly below 1/{s.k}",
        )
        need(s.passed, f"{label}: pass flag false for a complete witness")
        if not s.passed:
            all_pass = False

    if cert.verdict == IRREDUCIBLE:
        need(all_pass, "verdict IRREDUCIBLE but a recorded step fails")
    elif cert.verdict == INCONCLUSIVE:
        need(not all_pass, "verdict INCONCLUSIVE but every recorded step passes")
    else:
        diffs.append(f"unknown verdict {cert.verdict!r}")

    return VerifyReport(not diffs, tuple(diffs))
