"""Command-line interface.

Every subcommand reads a state file (``-`` for stdin) and prints one line
of JSON. Exit codes: 0 ok, 2 unreadable input, 3 invalid state,
4 decomposition impossible for this state.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import report
from .canonical import canonical_form, erasing_states, reconstruct
from .classify import classify
from .decompositions import product_plus_biseparable, set2_form, two_product
from .exceptions import DegenerateInput, NotDecomposable, NotNormalized
from .invariants import invariants, invariants_direct, invariants_from_canonical
from .linalg import DEFAULT_TOL
from .states import PARTIES, ThreeQubitState, fidelity, permute_parties

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID_STATE = 3
EXIT_IMPOSSIBLE = 4

_PARTY_FIRST = {"A": "ABC", "B": "BAC", "C": "CAB"}


class CliError(Exception):
    def __init__(self, code: int, body: dict):
        super().__init__(body.get("message", ""))
        self.code = code
        self.body = body


def _emit(obj, out) -> None:
    out.write(report.dumps(obj) + "\n")


def load_state(path: str, normalize: bool = False) -> ThreeQubitState:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_PARSE, {"error": "ParseError", "message": str(exc)}) from exc
    try:
        return report.state_from_dict(data, normalize=normalize)
    except (NotNormalized, DegenerateInput) as exc:
        raise CliError(EXIT_INVALID_STATE,
                       {"error": type(exc).__name__, "message": str(exc)}) from exc
    except (ValueError, TypeError) as exc:
        raise CliError(EXIT_PARSE, {"error": "ParseError", "message": str(exc)}) from exc


def cmd_canon(args, state):
    s = permute_parties(state, _PARTY_FIRST[args.party])
    cf = canonical_form(s, args.tol)
    out = report.canonical_to_dict(cf)
    out["party"] = args.party
    out["reconstruction_residual"] = abs(1.0 - fidelity(reconstruct(cf), s))
    return out


def cmd_invariants(args, state):
    return report.invariants_to_dict(invariants(state, canonical_form(state, args.tol)))


def cmd_classify(args, state):
    return report.classification_to_dict(classify(canonical_form(state), args.tol))


def cmd_erase(args, state):
    dirs = erasing_states(state, args.party, DEFAULT_TOL)
    return {
        "kind": "erasing_directions",
        "party": args.party,
        "directions": [report.erasing_to_dict(d) for d in dirs],
        "probabilities": [float(d.probability) for d in dirs],
    }


def cmd_two_product(args, state):
    try:
        return report.two_product_to_dict(two_product(state, args.tol))
    except NotDecomposable as exc:
        raise CliError(EXIT_IMPOSSIBLE, {
            "error": "NotDecomposable",
            "type": exc.type_label,
            "reason": exc.reason,
            "message": str(exc),
        }) from exc


def cmd_biseparable_split(args, state):
    return report.biseparable_to_dict(product_plus_biseparable(canonical_form(state, args.tol)))


def cmd_set2(args, state):
    return report.set2_to_dict(set2_form(canonical_form(state, args.tol), args.tol))


def verify_checks(state: ThreeQubitState, tol: float = DEFAULT_TOL) -> dict[str, dict]:
    """Self-consistency battery for a single state."""
    checks: dict[str, dict] = {}

    def add(name, residual, limit):
        checks[name] = {"residual": float(residual), "limit": limit,
                        "pass": bool(residual <= limit)}

    cf = canonical_form(state, tol)
    add("round_trip", abs(1.0 - fidelity(reconstruct(cf), state)), 1e-8)
    add("lambda_normalization", abs(float(np.sum(cf.mu)) - 1.0), 1e-9)
    add("phi_range", max(0.0, -cf.phi, cf.phi - math.pi), 0.0)
    direct = invariants_direct(state)
    closed = invariants_from_canonical(cf)
    for i, (a, b) in enumerate(zip(direct.I, closed.I), start=1):
        add(f"dual_path_I{i}", abs(a - b), 1e-9)
    add("hdet_vs_mu0mu4", abs(abs(direct.hdet) ** 2 - cf.mu[0] ** 2 * cf.mu[4] ** 2), 1e-10)
    for party in PARTIES:
        dets = [abs(d.residual_det) for d in erasing_states(state, party, tol)]
        add(f"erasing_det_{party}", max(dets), 1e-10)
    inv = invariants(state, cf)
    lo = [0.5, 0.5, 0.5, 0.25, 0.0]
    hi = [1.0, 1.0, 1.0, 1.0, 1.0 / 16]
    worst = max(max(l - x, x - h, 0.0) for x, l, h in zip(inv.I, lo, hi))
    add("bounds_I", worst, 1e-9)
    worst_j = max(max(-x, x - 0.25, 0.0) for x in inv.J[:4])
    add("bounds_J", worst_j, 1e-9)
    return checks


def cmd_verify(args, state):
    checks = verify_checks(state, args.tol)
    ok = all(c["pass"] for c in checks.values())
    out = {"kind": "verify", "pass": ok, "checks": checks}
    if not ok:
        raise CliError(1, out)
    return out


def cmd_random(args, out):
    rng = np.random.default_rng(args.seed)
    for i in range(args.count):
        z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        s = ThreeQubitState(z / np.linalg.norm(z), label=f"haar seed={args.seed} index={i}")
        _emit(report.state_to_dict(s), out)


COMMANDS = {
    "canon": cmd_canon,
    "invariants": cmd_invariants,
    "classify": cmd_classify,
    "erase": cmd_erase,
    "two-product": cmd_two_product,
    "biseparable-split": cmd_biseparable_split,
    "set2": cmd_set2,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threequbit",
        description="Canonical form, invariants and classification of three-qubit pure states.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None,
                        help="zero threshold (default 1e-10; classify uses 1e-8)")
    common.add_argument("--normalize", action="store_true",
                        help="rescale the input instead of rejecting a non-unit norm")
    common.add_argument("--json", action="store_true", default=True,
                        help="JSON output (the only format)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", help="state file, or - for stdin")
        if name in ("canon", "erase"):
            p.add_argument("--party", choices=PARTIES, default="A")
    p = sub.add_parser("random", parents=[common], help="emit Haar-random state files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_PARSE
    if args.tol is None:
        args.tol = 1e-8 if args.command == "classify" else DEFAULT_TOL
    if args.command == "random":
        cmd_random(args, out)
        return EXIT_OK
    try:
        state = load_state(args.file, args.normalize)
        result = COMMANDS[args.command](args, state)
    except CliError as exc:
        _emit(exc.body, out)
        return exc.code
    _emit(result, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
