"""Classical and generalized phi-Hermite polynomials and their certification.

The classical Hermite polynomial is

    H_m(x) = sum_{j=0}^{[m/2]} (-1)^j C(m, 2j) u(2j) x^(m-2j),

and the generalized family replaces x by a monic phi and the signs by
arbitrary small coefficient polynomials:

    H = a_top * phi^m + sum_{j=1}^{[m/2]} C(m, 2j) u(2j) a_{[m/2]-j}(x) phi^(m-2j).

Dividing by u(2n+c) (and by phi when m is odd) and substituting
b_j(x) = C(n, j) a_j(x) turns H into a standard problem instance, which is
how certification is delegated to the certifier module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .certifier import (
    Certificate,
    PolynomialLeadingCoefficientError,
    ProblemInstance,
    build_scaled_polynomial,
    certify,
)
from .fppoly import IrreducibilityReport, irreducible_mod_all_primes_below
from .schur import is_power_of_three, u
from .zpoly import X, IntPoly, ZERO, poly_from_literal

HERMITE_SCHEMA = "phi-hermite/1"

INCLUSIVE = "inclusive"  # phi irreducible mod all primes <= m (generalized theorem)
EXCLUSIVE = "exclusive"  # phi irreducible mod all primes < m (composition corollary)


class HermiteOrderRejected(ValueError):
    """Odd order m = 3^u with u >= 2, excluded by the odd-order theorem."""


@dataclass(frozen=True)
class HermiteSpec:
    """Data of one generalized phi-Hermite polynomial."""

    m: int
    phi: IntPoly
    a_top: int
    a_low: tuple[IntPoly, ...]  # a_0 .. a_{[m/2]-1}

    def __post_init__(self) -> None:
        if self.m < 3:
            raise ValueError("m must be >= 3")
        if self.a_top == 0:
            raise ValueError("a_top must be nonzero")
        if len(self.a_low) != self.m // 2:
            raise ValueError(f"expected {self.m // 2} low coefficients")
        if not self.phi.is_monic or self.phi.degree < 1:
            raise ValueError("phi must be monic of degree >= 1")
        for a in self.a_low:
            if not a.is_zero and a.degree >= self.phi.degree:
                raise ValueError("coefficient degree must be below deg phi")


def classical_hermite(m: int) -> IntPoly:
    """Exact coefficients of the m-th classical Hermite polynomial.

    >>> classical_hermite(4)
    IntPoly('x^4 - 6x^2 + 3')
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    total = ZERO
    for j in range(m // 2 + 1):
        term = (-1) ** j * comb(m, 2 * j) * u(2 * j)
        total = total + IntPoly.of(term).shift(m - 2 * j)
    return total


def generalized_hermite(spec: HermiteSpec) -> IntPoly:
    """Expand the generalized polynomial exactly; degree is m * deg phi."""
    half = spec.m // 2
    total = IntPoly.of(spec.a_top) * spec.phi ** spec.m
    for j in range(1, half + 1):
        scale = comb(spec.m, 2 * j) * u(2 * j)
        total = total + spec.a_low[half - j] * scale * spec.phi ** (spec.m - 2 * j)
    return total


def classical_spec(m: int, phi: IntPoly = X) -> HermiteSpec:
    """The specialization whose generalized expansion equals H_m(phi(x)).

    Signs are a_i = (-1)^([m/2] - i) with a_top = 1, which makes the j-th
    term carry (-1)^j exactly as in the classical sum.
    """
    half = m // 2
    return HermiteSpec(
        m=m,
        phi=phi,
        a_top=1,
        a_low=tuple(IntPoly.of((-1) ** (half - i)) for i in range(half)),
    )


def hermite_to_instance(spec: HermiteSpec) -> tuple[ProblemInstance, IntPoly | None]:
    """Reduce a Hermite spec to a certifier instance.

    Even m = 2n maps to c = 0; odd m = 2n+1 maps to c = 2 with phi split off
    as a separate factor.  The exact identity

        scaled_instance_polynomial * (odd factor or 1) == generalized_hermite

    is asserted before returning.
    """
    n = spec.m // 2
    if spec.m % 2 == 0:
        c, odd_factor = 0, None
    else:
        is_pow, exp = is_power_of_three(spec.m)
        if is_pow and exp >= 2:
            raise HermiteOrderRejected(
                f"odd order m = {spec.m} = 3^{exp} is excluded: the odd-order "
                "irreducibility statement requires m != 3^u for u >= 2"
            )
        c, odd_factor = 2, spec.phi
    inst = ProblemInstance(
        c=c,
        n=n,
        phi=spec.phi,
        a_n=spec.a_top,
        lower_coeffs=tuple(comb(n, j) * spec.a_low[j] for j in range(n)),
    )
    scaled = build_scaled_polynomial(inst)
    product = scaled * odd_factor if odd_factor is not None else scaled
    if product != generalized_hermite(spec):
        raise AssertionError("Hermite reduction identity failed")
    return inst, odd_factor


@dataclass(frozen=True)
class HermiteCertification:
    instance: ProblemInstance
    certificate: Certificate
    odd_factor: IntPoly | None
    bound_mode: str
    bound_report: IrreducibilityReport


def certify_hermite(
    spec: HermiteSpec, bound_mode: str = INCLUSIVE
) -> HermiteCertification:
    """Certify a generalized Hermite polynomial via its reduced instance.

    ``bound_mode`` picks which prime window the informational phi report
    covers: "inclusive" checks phi modulo all primes <= m (the generalized
    statement), "exclusive" modulo all primes < m (the composition
    corollary).  The underlying certificate always re-checks the window it
    needs, so the mode never weakens the verdict.
    """
    if bound_mode not in (INCLUSIVE, EXCLUSIVE):
        raise ValueError(f"unknown bound mode {bound_mode!r}")
    inst, odd_factor = hermite_to_instance(spec)
    report = irreducible_mod_all_primes_below(
        spec.phi, spec.m, inclusive=bound_mode == INCLUSIVE
    )
    cert = certify(inst)
    return HermiteCertification(
        instance=inst,
        certificate=cert,
        odd_factor=odd_factor,
        bound_mode=bound_mode,
        bound_report=report,
    )


def parse_hermite_doc(doc: dict) -> HermiteSpec:
    """Parse the phi-hermite/1 instance file schema."""
    if not isinstance(doc, dict) or doc.get("schema") != HERMITE_SCHEMA:
        raise ValueError(f'hermite file must carry schema "{HERMITE_SCHEMA}"')
    a_top_raw = doc.get("a_top")
    if isinstance(a_top_raw, list):
        top = poly_from_literal(a_top_raw)
        if top.degree is not None and top.degree >= 1:
            raise PolynomialLeadingCoefficientError(
                "a_top must be an integer, not a polynomial (the theorems "
                "fail for polynomial leading coefficients)"
            )
        a_top = top.constant_term
    elif isinstance(a_top_raw, (str, int)):
        a_top = int(a_top_raw)
    else:
        raise ValueError("a_top must be an integer string")
    try:
        return HermiteSpec(
            m=int(doc["m"]),
            phi=poly_from_literal(doc["phi"]),
            a_top=a_top,
            a_low=tuple(poly_from_literal(a) for a in doc["a"]),
        )
    except KeyError as exc:
        raise ValueError(f"hermite file missing field {exc}") from exc
