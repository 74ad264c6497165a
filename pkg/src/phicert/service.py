"""HTTP facade over the certification library.

Thin, stateless wrappers: every endpoint parses its request model, calls
the corresponding library function, and serializes the result.  All
polynomial payloads use the shared JSON literal (decimal strings,
ascending powers); inline text like "x^2-x+5" is accepted wherever a
polynomial appears and normalized on entry.
"""

from __future__ import annotations

import os
from typing import Any, Literal, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .certifier import (
    PolynomialLeadingCoefficientError,
    certify,
    parse_instance,
    verify_certificate,
)
from .hermite import (
    EXCLUSIVE,
    HERMITE_SCHEMA,
    INCLUSIVE,
    HermiteOrderRejected,
    certify_hermite,
    classical_hermite,
    classical_spec,
    generalized_hermite,
    parse_hermite_doc,
)
from .oracle import analyze, cross_check
from .polygon import build_polygon
from .schur import find_schur_prime, find_schur_prime_from
from .suite import run_suite
from .valuation import ratio_str
from .zpoly import (
    IntPoly,
    format_poly,
    parse_poly_text,
    phi_expand,
    poly_from_literal,
    poly_to_literal,
)

app = FastAPI(title="phicert", version="0.1.0")

DEFAULT_PRIME_BUDGET = int(os.environ.get("PHI_IRRED_PRIME_BUDGET", "25"))

PolyInput = Union[str, list[str | int]]


def _bad(code: str, message: str, status: int = 422) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message})


def _poly(value: PolyInput) -> IntPoly:
    try:
        if isinstance(value, str):
            return parse_poly_text(value)
        return poly_from_literal(value)
    except ValueError as exc:
        raise _bad("invalid_polynomial", str(exc)) from exc


class CertifyRequest(BaseModel):
    instance: dict[str, Any]
    verify: bool = False
    cross_check: bool = False
    check_polygons: bool = False
    diagnose_steps: bool = False
    prime_budget: Optional[int] = Field(default=None, ge=1)


class CertifyResponse(BaseModel):
    verdict: str
    certificate: Optional[dict[str, Any]] = None
    verification: Optional[dict[str, Any]] = None
    cross_check: Optional[dict[str, Any]] = None
    odd_factor: Optional[list[str]] = None
    rejection: Optional[str] = None


@app.post("/certify", response_model=CertifyResponse)
def certify_endpoint(req: CertifyRequest) -> CertifyResponse:
    doc = req.instance
    budget = req.prime_budget or DEFAULT_PRIME_BUDGET
    schema = doc.get("schema") if isinstance(doc, dict) else None
    try:
        if schema == HERMITE_SCHEMA:
            spec = parse_hermite_doc(doc)
            try:
                result = certify_hermite(spec)
            except HermiteOrderRejected as exc:
                return CertifyResponse(
                    verdict="HYPOTHESIS_FAILED", rejection=str(exc)
                )
            inst, cert = result.instance, result.certificate
            odd = (
                poly_to_literal(result.odd_factor)
                if result.odd_factor is not None
                else None
            )
        else:
            inst = parse_instance(doc)
            cert = certify(
                inst,
                check_polygons=req.check_polygons,
                diagnose_steps=req.diagnose_steps,
            )
            odd = None
    except PolynomialLeadingCoefficientError as exc:
        raise _bad("polynomial_leading_coefficient", str(exc))
    except ValueError as exc:
        raise _bad("invalid_instance", str(exc))

    verification = (
        verify_certificate(inst, cert).to_json() if req.verify else None
    )
    cross = (
        cross_check(inst, cert, prime_budget=budget).to_json()
        if req.cross_check
        else None
    )
    return CertifyResponse(
        verdict=cert.verdict,
        certificate=cert.to_json(),
        verification=verification,
        cross_check=cross,
        odd_factor=odd,
    )


class PolygonRequest(BaseModel):
    f: PolyInput
    phi: PolyInput
    p: int


class PolygonResponse(BaseModel):
    points: list[list[int]]
    vertices: list[int]
    slopes: list[str]
    rightmost_slope: str


@app.post("/polygon", response_model=PolygonResponse)
def polygon_endpoint(req: PolygonRequest) -> PolygonResponse:
    f, phi = _poly(req.f), _poly(req.phi)
    try:
        poly = build_polygon(f, phi, req.p)
    except ValueError as exc:
        raise _bad("invalid_polygon_input", str(exc))
    data = poly.to_json()
    return PolygonResponse(
        points=data["points"],
        vertices=data["vertices"],
        slopes=data["slopes"],
        rightmost_slope=ratio_str(poly.rightmost_slope),
    )


class ExpandRequest(BaseModel):
    f: PolyInput
    phi: PolyInput


class ExpandResponse(BaseModel):
    terms: list[list[str]]


@app.post("/expand", response_model=ExpandResponse)
def expand_endpoint(req: ExpandRequest) -> ExpandResponse:
    f, phi = _poly(req.f), _poly(req.phi)
    try:
        expansion = phi_expand(f, phi)
    except ValueError as exc:
        raise _bad("invalid_expansion_input", str(exc))
    return ExpandResponse(terms=[poly_to_literal(t) for t in expansion.terms])


class HermiteRequest(BaseModel):
    m: int
    mode: Literal["classical", "corollary", "spec"] = "classical"
    phi: Optional[PolyInput] = None
    spec: Optional[dict[str, Any]] = None
    certify: bool = False


class HermiteResponse(BaseModel):
    polynomial: list[str]
    text: str
    verdict: Optional[str] = None
    certificate: Optional[dict[str, Any]] = None
    odd_factor: Optional[list[str]] = None
    rejection: Optional[str] = None


@app.post("/hermite", response_model=HermiteResponse)
def hermite_endpoint(req: HermiteRequest) -> HermiteResponse:
    try:
        if req.mode == "spec":
            if req.spec is None:
                raise _bad("invalid_hermite_input", "mode=spec requires a spec document")
            spec = parse_hermite_doc(req.spec)
        else:
            if req.m < 0:
                raise _bad("invalid_hermite_input", "m must be nonnegative")
            phi = _poly(req.phi) if req.phi is not None else None
            if req.mode == "classical" and phi is None:
                if req.m < 3 or not req.certify:
                    # plain printing; no spec object needed
                    poly = classical_hermite(req.m)
                    if not req.certify:
                        return HermiteResponse(
                            polynomial=poly_to_literal(poly), text=format_poly(poly)
                        )
                spec = classical_spec(req.m)
            else:
                spec = classical_spec(req.m, phi if phi is not None else _poly("x"))
    except PolynomialLeadingCoefficientError as exc:
        raise _bad("polynomial_leading_coefficient", str(exc))
    except ValueError as exc:
        raise _bad("invalid_hermite_input", str(exc))

    poly = generalized_hermite(spec)
    base = HermiteResponse(polynomial=poly_to_literal(poly), text=format_poly(poly))
    if not req.certify:
        return base
    bound_mode = EXCLUSIVE if req.mode == "corollary" else INCLUSIVE
    try:
        result = certify_hermite(spec, bound_mode=bound_mode)
    except HermiteOrderRejected as exc:
        base.verdict = "HYPOTHESIS_FAILED"
        base.rejection = str(exc)
        return base
    base.verdict = result.certificate.verdict
    base.certificate = result.certificate.to_json()
    if result.odd_factor is not None:
        base.odd_factor = poly_to_literal(result.odd_factor)
    return base


class SchurRequest(BaseModel):
    k: int
    n: Optional[int] = None
    start: Optional[int] = None


class SchurResponse(BaseModel):
    witness: Optional[dict[str, str]] = None
    window: list[str]


@app.post("/schur", response_model=SchurResponse)
def schur_endpoint(req: SchurRequest) -> SchurResponse:
    try:
        if (req.n is None) == (req.start is None):
            raise ValueError("provide exactly one of n or start")
        if req.n is not None:
            witness = find_schur_prime(req.n, req.k)
            start = 2 * req.n + 1
        else:
            witness = find_schur_prime_from(req.start, req.k)
            start = req.start
    except ValueError as exc:
        raise _bad("invalid_schur_input", str(exc))
    window = [str(w) for w in range(start, start + 2 * req.k, 2)]
    return SchurResponse(
        witness=None
        if witness is None
        else {"p": str(witness.p), "divides": str(witness.divides)},
        window=window,
    )


class OracleRequest(BaseModel):
    f: PolyInput
    phi: Optional[PolyInput] = None
    prime_budget: Optional[int] = Field(default=None, ge=1)


class OracleResponse(BaseModel):
    verdict: str
    roots: list[str]
    known_factors: Optional[list[list[str]]] = None
    sieve: dict[str, Any]


@app.post("/oracle", response_model=OracleResponse)
def oracle_endpoint(req: OracleRequest) -> OracleResponse:
    f = _poly(req.f)
    phi = _poly(req.phi) if req.phi is not None else None
    budget = req.prime_budget or DEFAULT_PRIME_BUDGET
    try:
        verdict, roots, factors, sieve = analyze(f, phi, budget)
    except ValueError as exc:
        raise _bad("invalid_oracle_input", str(exc))
    return OracleResponse(
        verdict=verdict,
        roots=[str(r) for r in roots],
        known_factors=None
        if factors is None
        else [poly_to_literal(g) for g in factors],
        sieve=sieve.to_json(),
    )


class SuiteResponse(BaseModel):
    rows: list[dict[str, Any]]
    all_pass: bool


@app.get("/paper-examples", response_model=SuiteResponse)
def suite_endpoint() -> SuiteResponse:
    return SuiteResponse(**run_suite())


@app.get("/healthz")
def healthz() -> dict[str, str]:
    return {"status": "ok"}
