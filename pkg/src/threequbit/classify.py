"""Entanglement-type classification from the canonical form.

Patterns are tested most specific first:
1, 2a-{A,B,C}, 2b, 3a, 3b, 4a, 4b, 4c, 5, generic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canonical import CanonicalForm, canonical_form
from .invariants import invariants_from_canonical, invariants_J
from .states import StateLike

DEFAULT_CLASSIFY_TOL = 1e-8

TYPE_LABELS = ("1", "2a-A", "2a-B", "2a-C", "2b", "3a", "3b", "4a", "4b", "4c", "5", "generic")

_MU_PATTERNS = {
    "1": "a single mu_i equal to 1",
    "2a-A": "party A unentangled",
    "2a-B": "party B unentangled",
    "2a-C": "party C unentangled",
    "2b": "mu0 and mu4 only",
    "3a": "mu1 = mu4 = 0",
    "3b": "two of mu1, mu2, mu3 vanish",
    "4a": "mu4 = 0",
    "4b": "mu2 = 0 or mu3 = 0",
    "4c": "mu1 = 0",
    "5": "phi = 0 or pi",
    "generic": "all five terms, 0 < phi < pi",
}


@dataclass
class Classification:
    type_label: str
    matched_mu_pattern: str
    j_signature: list[str]
    tol: float
    boundary: bool = False
    identity_residuals: dict[str, float] = field(default_factory=dict)


def _sqrt_j123(j) -> float:
    return math.sqrt(max(j[0] * j[1] * j[2], 0.0))


def type_identities(cf: CanonicalForm, type_label: str) -> dict[str, float]:
    """Residuals of every identity attached to ``type_label``.

    Each value is zero when the identity holds exactly.
    """
    j = invariants_J(cf)[:5]
    j1, j2, j3, j4, j5 = j
    mu = cf.mu
    root = _sqrt_j123(j)
    res: dict[str, float] = {}
    if type_label == "1":
        res["max|J|"] = max(abs(x) for x in j)
    elif type_label.startswith("2a"):
        keep = {"2a-A": 0, "2a-B": 1, "2a-C": 2}[type_label]
        res["max|J| except survivor"] = max(abs(x) for i, x in enumerate(j) if i != keep)
    elif type_label == "2b":
        res["max|J| except J4"] = max(abs(j1), abs(j2), abs(j3), abs(j5))
    elif type_label == "3a":
        res["J4"] = abs(j4)
        res["J1J2+J1J3+J2J3 - sqrt(J1J2J3)"] = abs(j1 * j2 + j1 * j3 + j2 * j3 - root)
        res["sqrt(J1J2J3) - J5/2"] = abs(root - j5 / 2)
    elif type_label == "3b":
        small = sorted((1, 2, 3), key=lambda i: mu[i])[:2]
        for i in small:
            res[f"J{i}"] = abs(j[i - 1])
        res["J5"] = abs(j5)
    elif type_label == "4a":
        res["J4"] = abs(j4)
        res["sqrt(J1J2J3) - J5/2"] = abs(root - j5 / 2)
    elif type_label == "4b":
        i = 2 if mu[2] <= mu[3] else 3
        res[f"J{i}"] = abs(j[i - 1])
        res["J5"] = abs(j5)
    elif type_label == "4c":
        res["J1(J2+J3+J4)+J2J3 - sqrt(J1J2J3)"] = abs(j1 * (j2 + j3 + j4) + j2 * j3 - root)
        res["sqrt(J1J2J3) - J5/2"] = abs(root - j5 / 2)
    elif type_label == "5":
        # holds up to the sign of J5: for phi = 0 and l1 l4 > l2 l3, J5 < 0
        res["J1J2J3 - (J5/2)^2"] = abs(j1 * j2 * j3 - (j5 / 2) ** 2)
    elif type_label != "generic":
        raise ValueError(f"unknown type label {type_label!r}")
    return res


def verify_type_identities(cf: CanonicalForm, type_label: str) -> dict:
    res = type_identities(cf, type_label)
    return {
        "type": type_label,
        "residuals": res,
        "max_residual": max(res.values(), default=0.0),
    }


def _j_signature(j, tol: float) -> list[str]:
    sig = [f"J{i + 1}{'>0' if abs(x) > tol else '=0'}" for i, x in enumerate(j)]
    return sig


def classify(cf: CanonicalForm, tol: float = DEFAULT_CLASSIFY_TOL) -> Classification:
    mu = np.asarray(cf.mu, dtype=float)
    j = invariants_J(cf)[:5]
    nz_mu = mu > tol
    nz_j = [abs(x) > tol for x in j]
    phi_gap = min(cf.phi, abs(math.pi - cf.phi))

    label = _match(cf, mu, nz_mu, nz_j, phi_gap, tol)

    watched = list(mu) + [abs(x) for x in j] + [phi_gap]
    boundary = any(tol / 10 <= q <= 10 * tol for q in watched)
    sig = _j_signature(j, tol)
    ids = type_identities(cf, label)
    sig += [f"{k} ~ 0" for k, v in ids.items() if v <= 10 * tol]
    return Classification(label, _MU_PATTERNS[label], sig, tol, boundary, ids)


def _match(cf, mu, nz_mu, nz_j, phi_gap, tol) -> str:
    if np.any(np.abs(mu - 1.0) <= tol):
        return "1"
    if not any(nz_j):
        closed = invariants_from_canonical(cf)
        if all(abs(x - 1.0) <= tol for x in (closed.I1, closed.I2, closed.I3)):
            return "1"
    survivors = [i for i in range(5) if nz_j[i]]
    if len(survivors) == 1 and survivors[0] < 3:
        return ("2a-A", "2a-B", "2a-C")[survivors[0]]
    if survivors == [3]:
        return "2b"
    if not nz_mu[1] and not nz_mu[4] and sum(nz_mu[[0, 2, 3]]) >= 2:
        return "3a"
    zero_123 = [i for i in (1, 2, 3) if not nz_mu[i]]
    if len(zero_123) == 2 and nz_mu[0] and nz_mu[4]:
        return "3b"
    if not nz_mu[4]:
        return "4a"
    if not nz_mu[2] or not nz_mu[3]:
        return "4b"
    if not nz_mu[1]:
        return "4c"
    if phi_gap <= tol and nz_mu.all():
        return "5"
    return "generic"


def classify_state(state: StateLike, tol: float = DEFAULT_CLASSIFY_TOL) -> Classification:
    return classify(canonical_form(state), tol)
