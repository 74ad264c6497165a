"""Top-level acceptance gate: one test per shipped guarantee.

Each test asserts its guarantee verbatim, including the stated runtime
budgets, so the ``pytest -v`` report reads as one pass/fail line per
criterion.  Nothing here is weakened to force green: a criterion that the
underlying mathematics cannot support is allowed to fail and is documented
at the assertion site.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from phicert.certifier import (
    HYPOTHESIS_FAILED,
    IRREDUCIBLE,
    PolynomialLeadingCoefficientError,
    ProblemInstance,
    build_scaled_polynomial,
    c_coefficients,
    certify,
    parse_instance,
    verify_certificate,
)
from phicert.fppoly import FpPoly, fp_divmod, is_irreducible_fp, primes_below
from phicert.hermite import (
    HermiteOrderRejected,
    certify_hermite,
    classical_hermite,
    classical_spec,
    generalized_hermite,
    hermite_to_instance,
)
from phicert.oracle import IRREDUCIBLE_CERTAIN, degree_sieve, integer_root_search, known_form_factor
from phicert.polygon import polygon_of_coefficients, rightmost_slope, rightmost_slope_formula
from phicert.schur import find_schur_prime, u
from phicert.zpoly import IntPoly, X, parse_poly_text

ONE = IntPoly.of(1)


def generic(c, n, phi):
    return ProblemInstance(c=c, n=n, phi=phi, a_n=1, lower_coeffs=(ONE,) * n)


def test_criterion_01_cubic_family_reproduction():
    """phi = x^3 - x + 37, c = 0: IRREDUCIBLE for n in {2,3,4,5}, replayed, < 5 s."""
    phi = parse_poly_text("x^3-x+37")
    start = time.monotonic()
    for n in (2, 3, 4, 5):
        inst = generic(0, n, phi)
        cert = certify(inst)
        assert cert.verdict == IRREDUCIBLE, n
        assert verify_certificate(inst, cert).ok, n
    assert time.monotonic() - start < 5.0


def test_criterion_02_quadratic_family_reproduction():
    """phi = x^2 - x + 17, c = 2: IRREDUCIBLE for n in {2,3,4}, < 5 s.

    Known red: the n = 4 case has 2n+1 = 9 = 3^2, which the c = 2 theorem
    itself excludes, so the honest verdict is HYPOTHESIS_FAILED.  The k = 2
    class is provably uncoverable there (the only candidate prime is 3 and
    its slope is exactly 1/2, not below it), so this cannot be fixed by a
    better search.  The criterion is asserted as stated.
    """
    phi = parse_poly_text("x^2-x+17")
    start = time.monotonic()
    verdicts = {}
    for n in (2, 3, 4):
        verdicts[n] = certify(generic(2, n, phi)).verdict
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    assert verdicts == {2: IRREDUCIBLE, 3: IRREDUCIBLE, 4: IRREDUCIBLE}


def test_criterion_03_counterexample_suite():
    """All four counterexamples factor exactly as expected."""
    # (a) content case: phi^4/3 - 3 scaled -> phi^4 - 9 = (phi^2 + 3)(phi^2 - 3)
    phi5 = parse_poly_text("x^2-x+5")
    inst_a = ProblemInstance(
        c=0, n=2, phi=phi5, a_n=1, lower_coeffs=(IntPoly.of(-3), IntPoly.of(0))
    )
    assert certify(inst_a).verdict == HYPOTHESIS_FAILED
    scaled_a = build_scaled_polynomial(inst_a)
    assert scaled_a == phi5**4 - 9
    factors_a = known_form_factor(scaled_a, phi5)
    assert factors_a is not None
    assert set(factors_a) == {phi5**2 + 3, phi5**2 - 3}
    assert factors_a[0] * factors_a[1] == scaled_a

    # (b) phi = x^2 - x + 11: scaled polynomial is (phi^2 + 15)^2
    phi11 = parse_poly_text("x^2-x+11")
    inst_b = ProblemInstance(
        c=2, n=2, phi=phi11, a_n=1, lower_coeffs=(IntPoly.of(15), IntPoly.of(6))
    )
    assert certify(inst_b).verdict == HYPOTHESIS_FAILED
    scaled_b = build_scaled_polynomial(inst_b)
    assert scaled_b == (phi11**2 + 15) ** 2
    factors_b = known_form_factor(scaled_b, phi11)
    assert factors_b == (phi11**2 + 15, phi11**2 + 15)

    # (c) polynomial a_n: rejected at parse, and 0 really is a root
    doc_c0 = {
        "schema": "phi-irred/1", "c": 0, "n": 2, "phi": ["5", "-1", "1"],
        "a_n": ["-3", "1"], "a": [["-25", "5"], ["26", "1"]],
    }
    doc_c2 = {
        "schema": "phi-irred/1", "c": 2, "n": 2, "phi": ["11", "-1", "1"],
        "a_n": ["-15", "1"], "a": [["-121", "1"], ["366", "1"]],
    }
    for doc, phi in ((doc_c0, phi5), (doc_c2, phi11)):
        with pytest.raises(PolynomialLeadingCoefficientError):
            parse_instance(doc)
        coeffs = c_coefficients(2, doc["c"])
        a2 = parse_poly_text({0: "x-3", 2: "x-15"}[doc["c"]])
        a1 = parse_poly_text({0: "x+26", 2: "x+366"}[doc["c"]])
        a0 = parse_poly_text({0: "5x-25", 2: "x-121"}[doc["c"]])
        assembled = a2 * phi**4 + coeffs[2] * a1 * phi**2 + coeffs[0] * a0
        assert 0 in integer_root_search(assembled)

    # (d) phi^2 - x^2 with deg phi >= 3 -> (phi - x)(phi + x)
    phi_c = parse_poly_text("x^3-x+37")
    f = phi_c**2 - parse_poly_text("x^2")
    factors_d = known_form_factor(f, phi_c)
    assert factors_d == (phi_c - X, phi_c + X)
    assert factors_d[0] * factors_d[1] == f


def test_criterion_04_schur_brute_force():
    """Witness exists for 1 <= k <= 10, k < n <= 500 outside the two exceptions, < 10 s."""
    powers_of_three = {3**e for e in range(2, 8) if 3**e <= 1001}
    start = time.monotonic()
    for k in range(1, 11):
        for n in range(k + 1, 501):
            w = find_schur_prime(n, k)
            member = 2 * n + 1
            expected_exception = (k == 1 and member in powers_of_three) or (
                k == 2 and member == 25
            )
            if expected_exception:
                assert w is None, (k, n)
            else:
                assert w is not None, (k, n)
                w.validate(k, member)
    assert time.monotonic() - start < 10.0


def test_criterion_05_finite_field_oracle_equivalence():
    """Rabin test equals exhaustive trial division, monic degree <= 4, p in {2,3,5}."""

    def all_monic(p, d):
        for tail in itertools.product(range(p), repeat=d):
            yield FpPoly(p, tuple(tail) + (1,))

    def trial_division(f):
        for e in range(1, f.degree // 2 + 1):
            for g in all_monic(f.p, e):
                if fp_divmod(f, g)[1].is_zero:
                    return False
        return True

    disagreements = 0
    checked = 0
    for p in (2, 3, 5):
        for d in range(1, 5):
            for f in all_monic(p, d):
                checked += 1
                if is_irreducible_fp(f) != trial_division(f):
                    disagreements += 1
    assert checked >= 780
    assert disagreements == 0


def test_criterion_06_slope_bound_property():
    """Recorded step primes satisfy the strict slope bound; formula == built polygon."""
    for c in (0, 2):
        for n in range(1, 31):
            try:
                cert = certify(generic(c, n, X), diagnose_steps=True)
            except ValueError:
                continue
            for step in cert.steps:
                if step.p is None:
                    continue
                assert rightmost_slope_formula(n, c, step.p) < Fraction(1, step.k), (
                    c, n, step.k, step.p,
                )
            coeffs = c_coefficients(n, c)
            for p in primes_below(2 * n + c + 1):
                formula = rightmost_slope_formula(n, c, p)
                built = rightmost_slope(polygon_of_coefficients(coeffs, p))
                assert formula == built, (c, n, p)


def test_criterion_07_hermite_pipeline():
    """Even H_m irreducible (4..20); odd H_m/x irreducible (3..21, m != 9); 9 rejected."""
    for m in range(4, 21, 2):
        result = certify_hermite(classical_spec(m))
        assert result.certificate.verdict == IRREDUCIBLE, m
        assert result.odd_factor is None
    for m in range(3, 22, 2):
        if m == 9:
            with pytest.raises(HermiteOrderRejected):
                hermite_to_instance(classical_spec(9))
            continue
        result = certify_hermite(classical_spec(m))
        assert result.certificate.verdict == IRREDUCIBLE, m
        assert result.odd_factor == X, m
    for m in range(3, 26):
        assert generalized_hermite(classical_spec(m)) == classical_hermite(m), m


def test_criterion_08_stress_case_n13():
    """c = 2, n = 13 reaches IRREDUCIBLE or INCONCLUSIVE; k = 4 search log present.

    Known red: 2n+1 = 27 = 3^3 fails the theorem's own structural hypothesis,
    so the honest verdict is HYPOTHESIS_FAILED, outside the allowed set.  The
    k = 4 class is provably uncoverable (the needed coefficient is 675 = 27*25,
    so only 3 and 5 are candidates and both fail the slope bound), which is
    why the verdict cannot legitimately be anything stronger.  The search log
    requirement is genuinely satisfied and checked first.
    """
    inst = generic(2, 13, X)
    cert = certify(inst, diagnose_steps=True)
    k4 = next(s for s in cert.steps if s.k == 4)
    assert k4.search, "k = 4 prime search log must be present"
    assert k4.p is None and not k4.passed
    if cert.verdict == IRREDUCIBLE:
        assert verify_certificate(inst, cert).ok
    assert cert.verdict in (IRREDUCIBLE, "INCONCLUSIVE")


def test_criterion_09_u_identities():
    """u(2j) * 2^j * j! = (2j)! for j <= 30; table values 1, 1, 3, 15."""
    import math

    for j in range(31):
        assert u(2 * j) * 2**j * math.factorial(j) == math.factorial(2 * j), j
    assert [u(j) for j in (0, 2, 4, 6)] == [1, 1, 3, 15]


def test_criterion_10_oracle_soundness():
    """50 random products: sieve never says IRREDUCIBLE_CERTAIN; witnesses re-verify."""
    rng = random.Random(0x5EED)
    for trial in range(50):
        dg, dh = rng.randint(1, 4), rng.randint(1, 4)
        g = IntPoly.from_coeffs(
            [rng.randint(-9, 9) for _ in range(dg)] + [rng.randint(1, 9)]
        )
        h = IntPoly.from_coeffs(
            [rng.randint(-9, 9) for _ in range(dh)] + [rng.randint(1, 9)]
        )
        f = g * h
        assert degree_sieve(f, prime_budget=10).verdict != IRREDUCIBLE_CERTAIN, trial
        for r in integer_root_search(f):
            assert f(r) == 0  # witness re-verification by exact evaluation
