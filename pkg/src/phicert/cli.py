"""Command-line front end.

Every subcommand is a thin client of the HTTP service: by default requests
go to an in-process ASGI transport (no socket, no server to start), and
``--server URL`` points the same commands at a remote instance instead.

Exit codes for ``certify`` (and ``hermite --certify``):
    0  IRREDUCIBLE
    1  input or internal error
    2  HYPOTHESIS_FAILED
    3  INCONCLUSIVE
"""

from __future__ import annotations

import json
import os
import sys
import warnings
from typing import Any, Optional

import click
import httpx

EXIT_BY_VERDICT = {"IRREDUCIBLE": 0, "HYPOTHESIS_FAILED": 2, "INCONCLUSIVE": 3}


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server.rstrip("/"), timeout=600.0)
    from .service import app

    with warnings.catch_warnings():
        # in-process transport; the suggested httpx2 backend is not a hard dep
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

        return TestClient(app)


def _call(server: Optional[str], method: str, path: str, payload: Any = None) -> dict:
    try:
        with _client(server) as client:
            resp = client.request(method, path, json=payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(1)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail")
        except ValueError:
            detail = resp.text
        click.echo(f"error: {json.dumps(detail, sort_keys=True)}", err=True)
        sys.exit(1)
    return resp.json()


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _load_instance(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        click.echo(f"error: cannot read instance file {path}: {exc}", err=True)
        sys.exit(1)


def _budget(value: Optional[int]) -> int:
    if value is not None:
        return value
    return int(os.environ.get("PHI_IRRED_PRIME_BUDGET", "25"))


@click.group()
def main() -> None:
    """Exact irreducibility certificates for scaled Hermite-type polynomials."""


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--verify", is_flag=True, help="Independently replay the certificate.")
@click.option(
    "--cross-check", is_flag=True, help="Run the reducibility oracle against the verdict."
)
@click.option("--check-polygons", is_flag=True, help="Rebuild each reference polygon.")
@click.option("--diagnose-steps", is_flag=True, help="Record step analysis even on hypothesis failure.")
@click.option("--json-out", type=click.Path(dir_okay=False), help="Write the certificate JSON here.")
@click.option("--prime-budget", type=int, default=None, help="Oracle prime budget.")
@click.option("--server", default=None, help="Remote service URL (default: in-process).")
def certify(
    instance: str,
    verify: bool,
    cross_check: bool,
    check_polygons: bool,
    diagnose_steps: bool,
    json_out: Optional[str],
    prime_budget: Optional[int],
    server: Optional[str],
) -> None:
    """Certify the instance in INSTANCE (a phi-irred/1 or phi-hermite/1 file)."""
    doc = _load_instance(instance)
    data = _call(
        server,
        "POST",
        "/certify",
        {
            "instance": doc,
            "verify": verify,
            "cross_check": cross_check,
            "check_polygons": check_polygons,
            "diagnose_steps": diagnose_steps,
            "prime_budget": _budget(prime_budget),
        },
    )
    verdict = data["verdict"]
    click.echo(f"verdict: {verdict}")
    if data.get("rejection"):
        click.echo(f"rejected: {data['rejection']}")
    if data.get("odd_factor") is not None:
        click.echo(f"odd-order split factor: {data['odd_factor']}")
    if verify and data.get("verification") is not None:
        rep = data["verification"]
        click.echo(f"replay: {'ok' if rep['ok'] else 'FAILED'}")
        for diff in rep["diffs"]:
            click.echo(f"  diff: {diff}")
        if not rep["ok"]:
            sys.exit(1)
    if cross_check and data.get("cross_check") is not None:
        rep = data["cross_check"]
        click.echo(f"oracle: {rep['verdict']}")
        if rep["contradiction"]:
            click.echo("CONTRADICTION between certificate and oracle", err=True)
            sys.exit(1)
    if json_out and data.get("certificate") is not None:
        with open(json_out, "w") as fh:
            fh.write(_dump(data["certificate"]) + "\n")
        click.echo(f"certificate written to {json_out}")
    elif data.get("certificate") is not None and verdict != "IRREDUCIBLE":
        # surface the failing parts without requiring --json-out
        hyp = data["certificate"]["hypotheses"]
        if not hyp["pass"]:
            click.echo(f"hypotheses: {_dump(hyp)}")
    sys.exit(EXIT_BY_VERDICT.get(verdict, 1))


@main.command()
@click.argument("f")
@click.option("--phi", required=True, help='phi, inline syntax (e.g. "x^2-x+5").')
@click.option("--p", "prime", required=True, type=int, help="The prime.")
@click.option("--tsv", is_flag=True, help="Tab-separated points instead of JSON.")
@click.option("--server", default=None)
def polygon(f: str, phi: str, prime: int, tsv: bool, server: Optional[str]) -> None:
    """Newton polygon of F with respect to PHI and a prime."""
    data = _call(server, "POST", "/polygon", {"f": f, "phi": phi, "p": prime})
    if tsv:
        for i, v in data["points"]:
            click.echo(f"{i}\t{v}")
        click.echo(f"# slopes: {', '.join(data['slopes'])}")
    else:
        click.echo(_dump(data))


@main.command()
@click.argument("f")
@click.option("--phi", required=True, help="phi, inline syntax.")
@click.option("--server", default=None)
def expand(f: str, phi: str, server: Optional[str]) -> None:
    """phi-expansion of F: coefficients b_0 .. b_n with deg b_i < deg phi."""
    data = _call(server, "POST", "/expand", {"f": f, "phi": phi})
    click.echo(_dump(data))


@main.command()
@click.option("--m", type=int, help="Order of the polynomial.")
@click.option("--phi", default=None, help="Substitute phi (inline syntax).")
@click.option(
    "--classical", "mode", flag_value="classical", default=True, help="H_m itself."
)
@click.option(
    "--corollary", "mode", flag_value="corollary", help="H_m(phi(x)) composition."
)
@click.option(
    "--spec", "spec_path", type=click.Path(exists=True, dir_okay=False),
    help="Full phi-hermite/1 spec file.",
)
@click.option("--certify", "do_certify", is_flag=True, help="Also certify irreducibility.")
@click.option("--json-out", type=click.Path(dir_okay=False))
@click.option("--server", default=None)
def hermite(
    m: Optional[int],
    phi: Optional[str],
    mode: str,
    spec_path: Optional[str],
    do_certify: bool,
    json_out: Optional[str],
    server: Optional[str],
) -> None:
    """Print (and optionally certify) a classical or generalized Hermite polynomial."""
    if spec_path is not None:
        payload = {
            "m": 0,
            "mode": "spec",
            "spec": _load_instance(spec_path),
            "certify": do_certify,
        }
        payload["m"] = payload["spec"].get("m", 0)
    elif m is not None:
        payload = {"m": m, "mode": mode, "phi": phi, "certify": do_certify}
    else:
        click.echo("error: provide --m or --spec", err=True)
        sys.exit(1)
    data = _call(server, "POST", "/hermite", payload)
    click.echo(data["text"])
    if data.get("rejection"):
        click.echo(f"rejected: {data['rejection']}")
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(_dump(data) + "\n")
    if do_certify:
        verdict = data.get("verdict") or "INCONCLUSIVE"
        click.echo(f"verdict: {verdict}")
        if data.get("odd_factor") is not None:
            click.echo(f"odd-order split factor: {data['odd_factor']}")
        sys.exit(EXIT_BY_VERDICT.get(verdict, 1))


@main.command()
@click.option("--n", type=int, default=None, help="Window starts at 2n+1.")
@click.option("--start", type=int, default=None, help="Explicit odd window start.")
@click.option("--k", type=int, required=True, help="Number of consecutive odd members.")
@click.option("--server", default=None)
def schur(n: Optional[int], start: Optional[int], k: int, server: Optional[str]) -> None:
    """Find a prime > 2k+1 dividing one of k consecutive odd numbers."""
    data = _call(server, "POST", "/schur", {"n": n, "start": start, "k": k})
    window = ", ".join(data["window"])
    if data["witness"] is None:
        click.echo(f"window {{{window}}}: no witness (exceptional case)")
    else:
        w = data["witness"]
        click.echo(f"window {{{window}}}: p = {w['p']} divides {w['divides']}")


@main.command()
@click.argument("f")
@click.option("--phi", default=None, help="Enable known-shape factor detection.")
@click.option("--prime-budget", type=int, default=None)
@click.option("--server", default=None)
def oracle(
    f: str, phi: Optional[str], prime_budget: Optional[int], server: Optional[str]
) -> None:
    """Independent reducibility evidence for F: roots, known shapes, degree sieve."""
    data = _call(
        server,
        "POST",
        "/oracle",
        {"f": f, "phi": phi, "prime_budget": _budget(prime_budget)},
    )
    click.echo(_dump(data))


@main.command(name="paper-examples")
@click.option("--server", default=None)
@click.option("--json-out", type=click.Path(dir_okay=False))
def paper_examples(server: Optional[str], json_out: Optional[str]) -> None:
    """Run the built-in example gallery end to end."""
    data = _call(server, "GET", "/paper-examples")
    width = max(len(r["name"]) for r in data["rows"])
    for row in data["rows"]:
        mark = "PASS" if row["pass"] else "FAIL"
        click.echo(f"{mark}  {row['name']:<{width}}  {row['actual']}")
        if row.get("note"):
            click.echo(f"      note: {row['note']}")
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(_dump(data) + "\n")
    click.echo("all pass" if data["all_pass"] else "FAILURES present")
    sys.exit(0 if data["all_pass"] else 1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
