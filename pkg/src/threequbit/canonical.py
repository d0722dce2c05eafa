"""Five-term canonical form of a three-qubit pure state.

Every state is brought by local unitaries to

    l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>

with ``l_i >= 0`` and ``0 <= phi <= pi``. The party-A rotation is fixed by
a root of ``det(u0 T0 + u1 T1) = 0``; an SVD of the rotated first slice
fixes B and C; diagonal phases make four of the coefficients real.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import InvalidCanonicalForm
from .linalg import (
    DEFAULT_TOL,
    DOUBLE,
    IDENTICALLY_ZERO,
    ProjectiveRoot,
    complete_unitary,
    dagger,
    det2,
    is_unitary,
    pencil_roots,
    svd2,
    to_special_unitary,
)
from .states import (
    StateLike,
    ThreeQubitState,
    _local,
    as_state,
    pencil,
    permute_parties,
)

CONTINUUM = "continuum"

# indices of l0, l1 e^{i phi}, l2, l3, l4 in the amplitude vector
CANONICAL_SLOTS = (0, 4, 5, 6, 7)

PHASE_TOL = 1e-9
TIE_TOL = 1e-9
ZERO_LAMBDA = 1e-8

# rows of the gauge system: amplitude |1jk> picks up x + j*b + k*c
_GAUGE_ROWS = np.array([[1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1]], dtype=float)


@dataclass(eq=False)
class CanonicalForm:
    lambdas: np.ndarray
    phi: float
    uA: np.ndarray
    uB: np.ndarray
    uC: np.ndarray
    omega: float
    root: ProjectiveRoot
    root_count: int | str
    root_choice: str = "unique"
    # M1 block before gauge fixing; kept for the cross-root identities
    m1_raw: np.ndarray | None = field(default=None, repr=False)

    @property
    def mu(self) -> np.ndarray:
        return self.lambdas ** 2

    @property
    def amplitudes(self) -> np.ndarray:
        return canonical_vector(self.lambdas, self.phi)

    @property
    def m1(self) -> np.ndarray:
        l = self.lambdas
        return np.array([[l[1] * cmath.exp(1j * self.phi), l[2]], [l[3], l[4]]])

    def validate(self, tol: float = 1e-9) -> None:
        lam = np.asarray(self.lambdas, dtype=float)
        if lam.shape != (5,) or np.any(lam < 0):
            raise InvalidCanonicalForm("lambdas must be five nonnegative reals")
        if abs(float(np.sum(lam ** 2)) - 1.0) > tol:
            raise InvalidCanonicalForm("squared lambdas must sum to 1")
        if not -tol <= self.phi <= math.pi + tol:
            raise InvalidCanonicalForm(f"phi={self.phi} outside [0, pi]")
        for name in ("uA", "uB", "uC"):
            if not is_unitary(getattr(self, name), 1e-9):
                raise InvalidCanonicalForm(f"{name} is not unitary")


def canonical_vector(lambdas, phi: float) -> np.ndarray:
    v = np.zeros(8, dtype=np.complex128)
    v[list(CANONICAL_SLOTS)] = lambdas
    v[4] *= cmath.exp(1j * phi)
    return v


def _gauge_phases(m1: np.ndarray, tol: float) -> tuple[float, float, float]:
    """Angles ``(x, b, c)`` on |1>_A, |1>_B, |1>_C that make M1 real.

    With all four entries nonzero only m01, m10, m11 can be fixed and the
    leftover phase lands on m00. Otherwise every nonzero entry is fixed.
    """
    entries = m1.reshape(4)
    nonzero = np.abs(entries) > tol
    if not nonzero.any():
        return 0.0, 0.0, 0.0
    rows = nonzero.copy()
    if rows.all():
        rows[0] = False
    target = -np.angle(entries[rows])
    sol, *_ = np.linalg.lstsq(_GAUGE_ROWS[rows], target, rcond=None)
    return tuple(float(s) for s in sol)


def _candidate(amps: np.ndarray, t0, t1, root: ProjectiveRoot, root_count,
               tol: float) -> CanonicalForm:
    a_root = complete_unitary(root.u0, root.u1)
    t0p = root.u0 * t0 + root.u1 * t1
    t1p = -np.conj(root.u1) * t0 + np.conj(root.u0) * t1
    scale = np.linalg.norm(t0) + np.linalg.norm(t1)

    if np.linalg.norm(t0p) <= tol * scale:
        # party A unentangled: the whole state sits in the M1 block
        u1, _, u2 = svd2(t1p)
    else:
        u1, _, u2 = svd2(t0p)
    m1 = u1 @ t1p @ u2

    x, b, c = _gauge_phases(m1, tol)
    ua = np.diag([1.0, cmath.exp(1j * x)]) @ a_root
    ub = np.diag([1.0, cmath.exp(1j * b)]) @ u1
    uc = np.diag([1.0, cmath.exp(1j * c)]) @ u2.T
    ua, da = to_special_unitary(ua)
    ub, db = to_special_unitary(ub)
    uc, dc = to_special_unitary(uc)
    omega = math.remainder(da + db + dc, 2 * math.pi)

    out = _local(amps, ua, ub, uc, omega)
    lambdas = np.abs(out[list(CANONICAL_SLOTS)])
    lambdas = lambdas / np.linalg.norm(lambdas)
    phi = cmath.phase(out[4]) % (2 * math.pi) if lambdas[1] > tol else 0.0
    return CanonicalForm(lambdas, phi, ua, ub, uc, omega, root, root_count,
                         m1_raw=m1)


def canonical_candidates(state: StateLike, tol: float = DEFAULT_TOL):
    """All candidate forms, one per pencil root, before root selection.

    ``phi`` is left in ``[0, 2 pi)``.
    """
    s = as_state(state)
    t0, t1 = pencil(s)
    roots = pencil_roots(t0, t1, tol)
    if roots[0].multiplicity == IDENTICALLY_ZERO:
        count = CONTINUUM
    elif roots[0].multiplicity == DOUBLE:
        count = 1
    else:
        count = 2
    return [_candidate(s.amplitudes, t0, t1, r, count, tol) for r in roots]


def _in_range(phi: float) -> bool:
    return phi <= math.pi + PHASE_TOL or phi >= 2 * math.pi - PHASE_TOL


def _interior(phi: float) -> bool:
    return PHASE_TOL < phi < math.pi - PHASE_TOL


def _tie_key(cf: CanonicalForm):
    # fewer terms first, so a four-term form beats a five-term one
    l = cf.lambdas
    zeros = float(np.sum(l <= ZERO_LAMBDA))
    return (zeros, l[0], l[4], l[1], l[2], l[3])


def _prefer(a: CanonicalForm, b: CanonicalForm) -> CanonicalForm:
    for x, y in zip(_tie_key(a), _tie_key(b)):
        if abs(x - y) > TIE_TOL:
            return a if x > y else b
    return a


def select_candidate(candidates: list[CanonicalForm]) -> CanonicalForm:
    interior = [cf for cf in candidates if _interior(cf.phi)]
    if len(candidates) == 1:
        chosen, how = candidates[0], "unique"
    elif len(interior) == 1:
        chosen, how = interior[0], "phase-range"
    else:
        pool = [cf for cf in candidates if _in_range(cf.phi)] or candidates
        chosen = pool[0]
        for cf in pool[1:]:
            chosen = _prefer(chosen, cf)
        how = "tie-break"
    chosen.root_choice = how
    if chosen.phi >= 2 * math.pi - PHASE_TOL or chosen.phi <= PHASE_TOL:
        chosen.phi = 0.0
    elif chosen.phi > math.pi:
        chosen.phi = math.pi
    return chosen


def canonical_form(state: StateLike, tol: float = DEFAULT_TOL) -> CanonicalForm:
    """Canonical form of ``state`` together with the unitaries reaching it.

    ``exp(i omega) (uA x uB x uC) |state>`` equals the canonical vector.
    """
    return select_candidate(canonical_candidates(state, tol))


def reconstruct(cf: CanonicalForm) -> ThreeQubitState:
    cf.validate()
    v = _local(cf.amplitudes, dagger(cf.uA), dagger(cf.uB), dagger(cf.uC), -cf.omega)
    return ThreeQubitState(v / np.linalg.norm(v))


@dataclass(eq=False)
class ErasingDirection:
    """Projecting ``party`` on ``ket`` leaves the other two in a product.

    ``residual`` is the unnormalized ``<ket|psi>`` over the remaining two
    parties, in their original order.
    """

    party: str
    ket: np.ndarray
    residual: np.ndarray
    probability: float
    degenerate: bool = False
    multiplicity: str = "simple"

    @property
    def residual_det(self) -> complex:
        return det2(self.residual.reshape(2, 2))


_PARTY_FIRST = {"A": "ABC", "B": "BAC", "C": "CAB"}


def erasing_states(state: StateLike, party: str = "A",
                   tol: float = DEFAULT_TOL) -> list[ErasingDirection]:
    s = permute_parties(as_state(state), _PARTY_FIRST[party])
    t0, t1 = pencil(s)
    out = []
    for r in pencil_roots(t0, t1, tol):
        residual = (r.u0 * t0 + r.u1 * t1).reshape(4)
        prob = float(np.vdot(residual, residual).real)
        out.append(ErasingDirection(
            party=party,
            ket=np.conj(r.vector),
            residual=residual,
            probability=prob,
            degenerate=r.multiplicity == IDENTICALLY_ZERO or prob <= tol,
            multiplicity=r.multiplicity,
        ))
    return out
