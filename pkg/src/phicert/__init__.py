"""Exact irreducibility certificates for scaled Hermite-type polynomials.

The pipeline: build the integer-scaled polynomial from an instance
(c, n, phi, a_n, a_0..a_{n-1}), check the theorem hypotheses, exclude each
factor-degree class with a (prime, divisibility, Newton-polygon slope)
witness, and emit a machine-checkable certificate that an independent
replay (``verify_certificate``) and a reducibility oracle (``cross_check``)
can both audit.
"""

from .certifier import (
    HYPOTHESIS_FAILED,
    INCONCLUSIVE,
    IRREDUCIBLE,
    Certificate,
    HypothesisReport,
    PolynomialLeadingCoefficientError,
    ProblemInstance,
    build_scaled_polynomial,
    c_coefficients,
    certificate_from_json,
    certify,
    check_hypotheses,
    parse_instance,
    verify_certificate,
)
from .fppoly import is_irreducible_mod_p, is_prime
from .hermite import (
    HermiteSpec,
    certify_hermite,
    classical_hermite,
    classical_spec,
    generalized_hermite,
    hermite_to_instance,
)
from .oracle import cross_check, degree_sieve, integer_root_search
from .polygon import NewtonPolygon, build_polygon, rightmost_slope_formula
from .schur import SchurWitness, find_schur_prime, u
from .valuation import INFINITY, vp, vpx
from .zpoly import IntPoly, format_poly, parse_poly_text, phi_expand

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "HermiteSpec",
    "HypothesisReport",
    "HYPOTHESIS_FAILED",
    "INCONCLUSIVE",
    "INFINITY",
    "IRREDUCIBLE",
    "IntPoly",
    "NewtonPolygon",
    "PolynomialLeadingCoefficientError",
    "ProblemInstance",
    "SchurWitness",
    "build_polygon",
    "build_scaled_polynomial",
    "c_coefficients",
    "certificate_from_json",
    "certify",
    "certify_hermite",
    "check_hypotheses",
    "classical_hermite",
    "classical_spec",
    "cross_check",
    "degree_sieve",
    "find_schur_prime",
    "format_poly",
    "generalized_hermite",
    "hermite_to_instance",
    "integer_root_search",
    "is_irreducible_mod_p",
    "is_prime",
    "parse_instance",
    "parse_poly_text",
    "phi_expand",
    "rightmost_slope_formula",
    "u",
    "verify_certificate",
    "vp",
    "vpx",
]
