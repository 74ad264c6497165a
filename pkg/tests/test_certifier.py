import dataclasses
import json

import pytest

from phicert.certifier import (
    HYPOTHESIS_FAILED,
    INCONCLUSIVE,
    IRREDUCIBLE,
    PolynomialLeadingCoefficientError,
    ProblemInstance,
    build_scaled_polynomial,
    c_coefficients,
    certificate_from_json,
    certify,
    check_hypotheses,
    instance_digest,
    parse_instance,
    verify_certificate,
)
from phicert.zpoly import IntPoly, parse_poly_text

PHI_CUBIC = parse_poly_text("x^3-x+37")
PHI_17 = parse_poly_text("x^2-x+17")
PHI_5 = parse_poly_text("x^2-x+5")

ONE = IntPoly.of(1)


def simple(c, n, phi, a_n=1):
    return ProblemInstance(c=c, n=n, phi=phi, a_n=a_n, lower_coeffs=(ONE,) * n)


# ---------------------------------------------------------------------------
# Instances and parsing
# ---------------------------------------------------------------------------

def test_instance_validation():
    with pytest.raises(ValueError):
        simple(1, 2, PHI_17)
    with pytest.raises(ValueError):
        simple(0, 0, PHI_17)
    with pytest.raises(ValueError):
        simple(0, 2, PHI_17, a_n=0)
    with pytest.raises(ValueError):
        ProblemInstance(c=0, n=2, phi=PHI_17, a_n=1, lower_coeffs=(ONE,))
    with pytest.raises(ValueError):
        ProblemInstance(
            c=0, n=2, phi=PHI_17, a_n=1, lower_coeffs=(IntPoly.of(0), ONE)
        )


def test_parse_roundtrip():
    inst = simple(2, 3, PHI_17)
    assert parse_instance(inst.to_json()) == inst


def test_parse_rejects_polynomial_a_n():
    doc = simple(0, 2, PHI_5).to_json()
    doc["a_n"] = ["-3", "1"]
    with pytest.raises(PolynomialLeadingCoefficientError):
        parse_instance(doc)
    # a degenerate one-element literal is still an integer
    doc["a_n"] = ["7"]
    assert parse_instance(doc).a_n == 7


def test_parse_rejects_wrong_schema():
    doc = simple(0, 2, PHI_5).to_json()
    doc["schema"] = "something-else"
    with pytest.raises(ValueError):
        parse_instance(doc)


def test_digest_is_canonical():
    inst = simple(0, 3, PHI_CUBIC)
    assert instance_digest(inst) == instance_digest(parse_instance(inst.to_json()))


# ---------------------------------------------------------------------------
# Coefficients and scaling
# ---------------------------------------------------------------------------

def test_c_coefficients_known_values():
    assert c_coefficients(2, 0) == [3, 0, 3, 0, 1]
    assert c_coefficients(2, 2) == [15, 0, 5, 0, 1]
    assert c_coefficients(3, 0) == [15, 0, 15, 0, 5, 0, 1]


def test_c_coefficients_are_u_ratios():
    from phicert.schur import u

    for n in range(1, 8):
        for c in (0, 2):
            coeffs = c_coefficients(n, c)
            assert coeffs[2 * n] == 1
            assert all(coeffs[i] == 0 for i in range(1, 2 * n, 2))
            for j in range(n + 1):
                assert coeffs[2 * j] * u(2 * j + c) == u(2 * n + c)


def test_build_scaled_polynomial_reference():
    inst = simple(2, 2, PHI_17)
    expected = PHI_17**4 + 5 * PHI_17**2 + 15
    assert build_scaled_polynomial(inst) == expected


# ---------------------------------------------------------------------------
# Hypotheses
# ---------------------------------------------------------------------------

def test_hypotheses_pass_on_good_instance():
    rep = check_hypotheses(simple(0, 3, PHI_CUBIC))
    assert rep.overall
    assert rep.prime_window == 6
    assert [p for p, _ in rep.phi_irreducible] == [2, 3, 5]


def test_hypotheses_structural_c0_n1():
    rep = check_hypotheses(simple(0, 1, PHI_CUBIC))
    assert not rep.structural_ok
    assert not rep.overall


def test_hypotheses_structural_power_of_three():
    rep = check_hypotheses(simple(2, 4, PHI_17))  # 2n+1 = 9
    assert not rep.structural_ok
    rep13 = check_hypotheses(simple(2, 13, PHI_17))  # 2n+1 = 27
    assert not rep13.structural_ok
    rep3 = check_hypotheses(simple(2, 3, PHI_17))  # 2n+1 = 7
    assert rep3.structural_ok


def test_hypotheses_content_offenders():
    inst = ProblemInstance(
        c=0, n=2, phi=PHI_5, a_n=1, lower_coeffs=(IntPoly.of(-3), IntPoly.of(0))
    )
    rep = check_hypotheses(inst)
    assert rep.content_offenders == (3,)
    assert not rep.overall


def test_hypotheses_phi_reducible():
    rep = check_hypotheses(simple(0, 3, PHI_5))  # x^2-x+5 reducible mod 5
    assert (5, False) in rep.phi_irreducible
    assert not rep.overall


# ---------------------------------------------------------------------------
# Certification and replay
# ---------------------------------------------------------------------------

def test_certify_irreducible_and_replay():
    inst = simple(0, 4, PHI_CUBIC)
    cert = certify(inst, check_polygons=True)
    assert cert.verdict == IRREDUCIBLE
    assert verify_certificate(inst, cert).ok
    # coverage tiles [1, (n+1) deg phi)
    assert cert.coverage[0] == (1, 3)
    assert cert.coverage[-1] == (12, 15)


def test_certify_hypothesis_failure_has_no_steps():
    cert = certify(simple(2, 4, PHI_17))
    assert cert.verdict == HYPOTHESIS_FAILED
    assert cert.steps == ()
    assert cert.small_degree is None


def test_diagnose_steps_keeps_verdict():
    cert = certify(simple(2, 13, IntPoly.of(0, 1)), diagnose_steps=True)
    assert cert.verdict == HYPOTHESIS_FAILED
    assert len(cert.steps) == 13
    k4 = next(s for s in cert.steps if s.k == 4)
    assert not k4.passed and k4.p is None
    assert k4.search  # the failed search is logged


def test_certificate_json_roundtrip():
    inst = simple(2, 3, PHI_17)
    cert = certify(inst)
    doc = json.loads(json.dumps(cert.to_json()))
    restored = certificate_from_json(doc)
    assert restored == cert
    assert verify_certificate(inst, restored).ok


def test_replay_rejects_tampered_prime():
    inst = simple(0, 3, PHI_CUBIC)
    cert = certify(inst)
    step = cert.steps[0]
    bad = dataclasses.replace(step, p=step.p + 100)
    tampered = dataclasses.replace(cert, steps=(bad,) + cert.steps[1:])
    rep = verify_certificate(inst, tampered)
    assert not rep.ok
    assert any("k=1" in d for d in rep.diffs)


def test_replay_rejects_tampered_verdict():
    inst = simple(2, 4, PHI_17)  # genuinely HYPOTHESIS_FAILED
    cert = certify(inst)
    tampered = dataclasses.replace(cert, verdict=IRREDUCIBLE)
    assert not verify_certificate(inst, tampered).ok


def test_replay_rejects_tampered_slope():
    from fractions import Fraction

    inst = simple(0, 3, PHI_CUBIC)
    cert = certify(inst)
    step = cert.steps[-1]
    bad = dataclasses.replace(step, slope=Fraction(1, 10**6))
    tampered = dataclasses.replace(cert, steps=cert.steps[:-1] + (bad,))
    assert not verify_certificate(inst, tampered).ok


def test_replay_rejects_foreign_instance():
    inst = simple(0, 3, PHI_CUBIC)
    other = simple(0, 3, PHI_17)
    cert = certify(inst)
    assert not verify_certificate(other, cert).ok


def test_search_log_records_rejections():
    inst = simple(0, 5, PHI_CUBIC)
    cert = certify(inst)
    for step in cert.steps:
        assert step.search[-1].reason == ""  # last entry is the accepted prime
        assert all(e.reason for e in step.search[:-1])


def test_replay_rejects_downgraded_verdict():
    # INCONCLUSIVE with every recorded step passing is also incoherent
    inst = simple(0, 3, PHI_CUBIC)
    cert = certify(inst)
    tampered = dataclasses.replace(cert, verdict=INCONCLUSIVE)
    rep = verify_certificate(inst, tampered)
    assert not rep.ok
    assert any("INCONCLUSIVE" in d for d in rep.diffs)


def test_a_n_sharing_a_window_prime_is_hypothesis_failure():
    # a_n = 210 is divisible by 2, 3, 5, all inside the window for n = 3
    cert = certify(simple(0, 3, PHI_CUBIC, a_n=210))
    assert cert.verdict == HYPOTHESIS_FAILED
    assert certify(simple(0, 3, PHI_CUBIC, a_n=7)).verdict == IRREDUCIBLE
