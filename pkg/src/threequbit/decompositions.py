"""Alternative decompositions built on top of the canonical form.

* ``two_product``: the state as a real combination of two (nonorthogonal)
  product states.
* ``product_plus_biseparable``: ``cos t|000> + sin t|1>(cos w|0'0''> + sin w|1'1''>)``.
* ``set2_form``: a rotation of party C that moves the support onto
  ``{000, 001, 100, 110, 111}``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .canonical import CanonicalForm, canonical_form
from .classify import classify
from .exceptions import NotDecomposable
from .linalg import DEFAULT_TOL, dagger, svd2
from .states import (
    PARTIES,
    StateLike,
    ThreeQubitState,
    _local,
    as_state,
    permute_parties,
    reduced_density,
)

SET2_SUPPORT = (0, 1, 4, 6, 7)


@dataclass(eq=False)
class TwoProductDecomposition:
    alpha: float
    beta: float
    ket1: tuple[np.ndarray, np.ndarray, np.ndarray]
    ket2: tuple[np.ndarray, np.ndarray, np.ndarray]
    trivial: bool = False

    def vector(self) -> np.ndarray:
        return self.alpha * _kron3(self.ket1) + self.beta * _kron3(self.ket2)


def _kron3(kets) -> np.ndarray:
    return np.kron(np.kron(kets[0], kets[1]), kets[2])


def _rank1_factors(r: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    """Factor a rank-1 matrix as ``scale * outer(u, v)`` with unit ``u``, ``v``."""
    rows = np.linalg.norm(r, axis=1)
    cols = np.linalg.norm(r, axis=0)
    if rows.max() >= cols.max():
        v = r[int(np.argmax(rows))]
        v = v / np.linalg.norm(v)
        u = r @ np.conj(v)
    else:
        u = r[:, int(np.argmax(cols))]
        u = u / np.linalg.norm(u)
        v = np.conj(u) @ r
    scale = float(np.linalg.norm(u) * np.linalg.norm(v))
    return u / np.linalg.norm(u), v / np.linalg.norm(v), scale


def _to_original(cf: CanonicalForm, kets, phase: complex):
    """Map canonical-frame local kets back; absorb ``phase`` into party A."""
    a, b, c = kets
    a = dagger(cf.uA) @ a * (cmath.exp(-1j * cf.omega) * phase)
    return (a, dagger(cf.uB) @ b, dagger(cf.uC) @ c)


def two_product_coefficients(cf: CanonicalForm) -> tuple[float, float]:
    """``(alpha, beta)`` from the closed forms in the canonical parameters."""
    from .invariants import invariants_J

    m0, m1, m2, m3, m4 = cf.mu
    j1, _, _, j4, _, _ = invariants_J(cf)
    l4 = cf.lambdas[4]
    alpha = math.sqrt(j1 + j4) / l4
    beta = math.sqrt(m2 * m3 + m4 * (m4 + m2 + m3)) / l4
    return alpha, beta


def _bipartite_split(state: ThreeQubitState, party: str) -> TwoProductDecomposition:
    """Schmidt split for a state where ``party`` is unentangled."""
    order = {"A": "ABC", "B": "BAC", "C": "CAB"}[party]
    s = permute_parties(state, order)
    x = np.linalg.eigh(reduced_density(s, "A"))[1][:, -1]
    rest = np.tensordot(np.conj(x), s.tensor, axes=(0, 0))
    u1, d, u2 = svd2(rest)
    left, right = dagger(u1), dagger(u2)
    kets = []
    for i in range(2):
        parts = {party: x, order[1]: left[:, i], order[2]: right[i]}
        kets.append(tuple(parts[p] for p in PARTIES))
    return TwoProductDecomposition(float(d[0, 0].real), float(d[1, 1].real),
                                   kets[0], kets[1], trivial=True)


def two_product(state: StateLike, tol: float = DEFAULT_TOL,
                cf: CanonicalForm | None = None) -> TwoProductDecomposition:
    """Write ``state = alpha|abc> + beta|a'b'c'>`` with real ``alpha, beta >= 0``.

    Raises ``NotDecomposable`` for genuinely tripartite states with a
    vanishing hyperdeterminant.
    """
    s = as_state(state)
    if cf is None:
        cf = canonical_form(s, tol)
    label = classify(cf).type_label
    if label == "1":
        kets = tuple(np.linalg.eigh(reduced_density(s, p))[1][:, -1] for p in PARTIES)
        ov = np.vdot(_kron3(kets), s.amplitudes)
        kets = (kets[0] * ov / abs(ov), kets[1], kets[2])
        return TwoProductDecomposition(1.0, 0.0, kets, kets, trivial=True)
    if label.startswith("2a"):
        return _bipartite_split(s, label[-1])

    lam = cf.lambdas
    if cf.mu[4] < tol:
        raise NotDecomposable(
            f"type {label} state has I5 = 0 and is genuinely tripartite",
            type_label=label, reason="I5=0 genuinely tripartite",
        )

    l0, l1, l2, l3, l4 = lam
    coef = (l1 * l4 * cmath.exp(1j * cf.phi) - l2 * l3) / l4
    first = np.array([l0, coef])
    alpha = float(np.linalg.norm(first))
    e0 = np.array([1.0, 0.0], dtype=np.complex128)
    e1 = np.array([0.0, 1.0], dtype=np.complex128)
    ket1 = _to_original(cf, (first / alpha, e0, e0), 1.0)

    residual = np.array([[l2 * l3 / l4, l2], [l3, l4]], dtype=np.complex128)
    b, c, beta = _rank1_factors(residual)
    # the factorization phase goes into the A factor
    ph = np.vdot(np.outer(b, c).ravel(), residual.ravel()) / beta
    ket2 = _to_original(cf, (e1, b, c), ph)
    return TwoProductDecomposition(alpha, beta, ket1, ket2)


@dataclass(eq=False)
class ProductBiseparableForm:
    theta: float
    omega_angle: float
    a0: np.ndarray
    a1: np.ndarray
    b0: np.ndarray
    c0: np.ndarray
    b0p: np.ndarray
    b1p: np.ndarray
    c0pp: np.ndarray
    c1pp: np.ndarray
    global_phase: float

    def vector(self) -> np.ndarray:
        ct, st = math.cos(self.theta), math.sin(self.theta)
        cw, sw = math.cos(self.omega_angle), math.sin(self.omega_angle)
        v = ct * _kron3((self.a0, self.b0, self.c0)) + st * (
            cw * _kron3((self.a1, self.b0p, self.c0pp))
            + sw * _kron3((self.a1, self.b1p, self.c1pp))
        )
        return cmath.exp(1j * self.global_phase) * v


def product_plus_biseparable(cf: CanonicalForm) -> ProductBiseparableForm:
    cf.validate()
    u1, d, u2 = svd2(cf.m1)
    s0, s1 = float(d[0, 0].real), float(d[1, 1].real)
    theta = math.acos(min(1.0, max(0.0, cf.lambdas[0])))
    omega_angle = math.atan2(s1, s0) if s0 > 0 else 0.0
    ua, ub, uc = dagger(cf.uA), dagger(cf.uB), dagger(cf.uC)
    left, right = dagger(u1), dagger(u2)
    return ProductBiseparableForm(
        theta=theta,
        omega_angle=omega_angle,
        a0=ua[:, 0],
        a1=ua[:, 1],
        b0=ub[:, 0],
        c0=uc[:, 0],
        b0p=ub @ left[:, 0],
        b1p=ub @ left[:, 1],
        c0pp=uc @ right[0],
        c1pp=uc @ right[1],
        global_phase=-cf.omega,
    )


@dataclass(eq=False)
class Set2Form:
    coefficients: np.ndarray
    uC: np.ndarray
    rotated: bool
    off_support: float = 0.0

    @property
    def amplitudes(self) -> np.ndarray:
        v = np.zeros(8, dtype=np.complex128)
        v[list(SET2_SUPPORT)] = self.coefficients
        return v

    def canonical_amplitudes(self) -> np.ndarray:
        """Undo the party-C rotation."""
        return _local(self.amplitudes, np.eye(2), np.eye(2), dagger(self.uC), 0.0)


def set2_form(cf: CanonicalForm, tol: float = DEFAULT_TOL) -> Set2Form:
    lam = cf.lambdas
    v = cf.amplitudes
    n2 = cf.mu[1] + cf.mu[2]
    if n2 < tol:
        return Set2Form(v[list(SET2_SUPPORT)], np.eye(2, dtype=np.complex128), False)
    n = math.sqrt(n2)
    zero_p = np.array([lam[1] * cmath.exp(1j * cf.phi), lam[2]]) / n
    one_p = np.array([-np.conj(zero_p[1]), np.conj(zero_p[0])])
    uc = np.array([np.conj(zero_p), np.conj(one_p)])
    out = _local(v, np.eye(2), np.eye(2), uc, 0.0)
    outside = np.delete(out, list(SET2_SUPPORT))
    return Set2Form(out[list(SET2_SUPPORT)], uc, True, float(np.linalg.norm(outside)))
