"""Command-line interface: ``hodgering {decompose,classify,ranks,verify}``.

Every command writes exactly one JSON document to stdout.  Exit status is 0
on success, 1 for invalid input (the JSON document is then an error object)
and 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bordism, chernhodge, hodge, poincare
from .classify import Functional, classify
from .errors import InputError, InternalInvariantError
from .serialize import dumps, encode_number
from .verify import run_all

MAX_DEGREE_ENV = "HODGERING_MAX_DEGREE"


def _degree_cap() -> int | None:
    raw = os.environ.get(MAX_DEGREE_ENV)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{MAX_DEGREE_ENV} must be an integer, got {raw!r}") from None


def _check_degree(n: int, what: str = "degree"):
    cap = _degree_cap()
    if cap is not None and n > cap:
        raise InputError(f"{what} {n} exceeds {MAX_DEGREE_ENV}={cap}")


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from None


def _coefficients(poly) -> dict:
    return {k: encode_number(v) for k, v in poly.named_terms().items()}


def cmd_decompose(args) -> dict:
    obj = _read_json(args.input)
    if not isinstance(obj, dict):
        raise InputError("input must be a JSON object")
    basis = args.basis
    if basis in ("abc", "els"):
        H = hodge.HodgePolynomial.from_json(obj)
        _check_degree(H.dimension)
        if basis == "abc":
            q = hodge.decompose_ABC(H)
        else:
            S = hodge.HodgePolynomial.from_json(obj["surface"]) if "surface" in obj else None
            q = hodge.decompose_ELS(H, S)
        n = H.dimension
    else:
        P = poincare.PoincarePolynomial.from_json(obj)
        _check_degree(P.dimension)
        n = P.dimension
        q = poincare.decompose_WXYZ(P).polynomial() if basis == "wxyz" else poincare.decompose_LECP2(P)
    return {"basis": basis, "dimension": n, "coefficients": _coefficients(q), "polynomial": str(q)}


def cmd_classify(args) -> dict:
    phi = Functional.from_json(_read_json(args.input))
    _check_degree(phi.dimension)
    return classify(phi).to_json()


def cmd_ranks(args) -> dict:
    N = args.max_degree
    if N < 0:
        raise InputError("--max-degree must be non-negative")
    _check_degree(N, "--max-degree")
    return {
        "max_degree": N,
        "H": [len(hodge.hodge_basis(n)) for n in range(N + 1)],
        "P": [len(poincare.e_basis(n)) for n in range(N + 1)],
        "Hir": [len(bordism.hir_basis(n)) for n in range(N + 1)],
        "CH": [chernhodge.ch_subspace(n).rank for n in range(N + 1)],
    }


def cmd_verify(args) -> dict:
    N = args.max_degree
    if N < 0 or args.samples < 1:
        raise InputError("--max-degree must be non-negative and --samples positive")
    _check_degree(N, "--max-degree")
    results = run_all(N, args.samples, args.seed)
    return {
        "max_degree": N,
        "samples": args.samples,
        "passed": all(r.passed for r in results),
        "results": [r.to_json() for r in results],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodgering", description="Exact Hodge, Poincaré and Chern-Hodge ring computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="express an element through ring generators")
    p.add_argument("--basis", choices=("abc", "els", "wxyz", "lecp2"), required=True)
    p.add_argument("-i", "--input", default="-", help="JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", help="classify a linear functional, with certificates")
    p.add_argument("-i", "--input", default="-", help="JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ranks", help="rank table of the graded pieces")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_ranks)

    p = sub.add_parser("verify", help="check the structure theorems up to a degree")
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def _error(kind: str, message: str) -> str:
    return dumps({"error": {"type": kind, "message": message}})


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except InputError as exc:
        print(f"hodgering: {exc}", file=sys.stderr)
        print(_error(type(exc).__name__, str(exc)))
        return 1
    except InternalInvariantError as exc:
        print(f"hodgering: internal invariant failed: {exc}", file=sys.stderr)
        print(_error("InternalInvariantError", str(exc)))
        return 2
    print(dumps(result))
    if args.command == "verify" and not result["passed"]:
        print("hodgering: some checks failed", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
