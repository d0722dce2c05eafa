"""Three-qubit pure states: construction, slicing, local action, partial traces.

Amplitude ``t[4*i + 2*j + k]`` multiplies the basis ket ``|ijk>``, with
party A carrying the most significant index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .exceptions import DegenerateInput, NotNormalized, NotUnitary
from .linalg import DEFAULT_TOL, is_unitary

PARTIES = ("A", "B", "C")
INGEST_NORM_TOL = 1e-6
STATE_NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ThreeQubitState:
    amplitudes: np.ndarray
    label: str | None = None

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(8).copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        if abs(np.linalg.norm(amps) - 1.0) > STATE_NORM_TOL:
            raise NotNormalized(f"state norm {np.linalg.norm(amps):.3e} is not 1")

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes as a ``(2, 2, 2)`` array indexed ``[i, j, k]``."""
        return self.amplitudes.reshape(2, 2, 2)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)

    def __repr__(self):
        return f"ThreeQubitState({np.array2string(self.amplitudes, precision=4)})"


StateLike = Union[ThreeQubitState, Sequence[complex], np.ndarray]


class CoefficientPencil(NamedTuple):
    T0: np.ndarray
    T1: np.ndarray


def from_amplitudes(vec, normalize: bool = False, label: str | None = None) -> ThreeQubitState:
    """Build a state from 8 amplitudes.

    Without ``normalize`` the vector must already have unit norm to
    within 1e-6; it is then rescaled exactly. A vector already of unit
    norm to rounding is kept bit-for-bit, so parse/serialize is lossless.
    """
    v = np.asarray(vec, dtype=np.complex128)
    if v.shape != (8,):
        raise ValueError(f"expected 8 amplitudes, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("amplitudes must be finite")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise DegenerateInput("zero vector is not a state")
    if not normalize and abs(norm - 1.0) > INGEST_NORM_TOL:
        raise NotNormalized(f"norm {norm!r} differs from 1 by more than {INGEST_NORM_TOL}")
    if abs(norm - 1.0) > 4 * np.finfo(float).eps:
        v = v / norm
    return ThreeQubitState(v, label)


def as_state(s: StateLike) -> ThreeQubitState:
    if isinstance(s, ThreeQubitState):
        return s
    return from_amplitudes(s)


def pencil(state: StateLike) -> CoefficientPencil:
    t = as_state(state).tensor
    return CoefficientPencil(t[0].copy(), t[1].copy())


def from_pencil(t0, t1) -> ThreeQubitState:
    return from_amplitudes(np.concatenate([np.ravel(t0), np.ravel(t1)]), normalize=True)


def _local(state_amps: np.ndarray, a, b, c, phase: float) -> np.ndarray:
    t = state_amps.reshape(2, 2, 2)
    out = np.einsum("ip,jq,kr,pqr->ijk", a, b, c, t)
    return np.exp(1j * phase) * out.reshape(8)


def apply_local(state: StateLike, a, b, c, phase: float = 0.0,
                tol: float = DEFAULT_TOL) -> ThreeQubitState:
    """``exp(i phase) (A x B x C) |state>``."""
    s = as_state(state)
    mats = [np.asarray(m, dtype=np.complex128) for m in (a, b, c)]
    for name, m in zip(PARTIES, mats):
        if m.shape != (2, 2) or not is_unitary(m, tol):
            raise NotUnitary(f"factor on party {name} is not unitary")
    out = _local(s.amplitudes, *mats, phase)
    return ThreeQubitState(out / np.linalg.norm(out))


def reduced_density(state: StateLike, party: str) -> np.ndarray:
    t = as_state(state).tensor
    spec = {"A": "ijk,ljk->il", "B": "ijk,imk->jm", "C": "ijk,ijm->km"}[party]
    return np.einsum(spec, t, t.conj())


def reduced_density_ab(state: StateLike) -> np.ndarray:
    t = as_state(state).tensor
    return np.einsum("ijk,lmk->ijlm", t, t.conj()).reshape(4, 4)


def partial_trace_ab(rho_ab: np.ndarray, keep: str) -> np.ndarray:
    """Trace one qubit out of a 4x4 A-B density matrix."""
    r = np.asarray(rho_ab).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("ijlj->il", r)
    if keep == "B":
        return np.einsum("ijim->jm", r)
    raise ValueError(f"keep must be 'A' or 'B', not {keep!r}")


def purity(rho: np.ndarray) -> float:
    return float(np.real(np.trace(rho @ rho)))


def haar_random(seed=None) -> ThreeQubitState:
    """Haar-random pure state from 8 normalized complex Gaussians."""
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    return ThreeQubitState(z / np.linalg.norm(z))


def haar_unitary(seed=None, dim: int = 2) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def overlap(s1: StateLike, s2: StateLike) -> complex:
    return complex(np.vdot(as_state(s1).amplitudes, as_state(s2).amplitudes))


def fidelity(s1: StateLike, s2: StateLike) -> float:
    return abs(overlap(s1, s2)) ** 2


def _party_axes(permutation) -> tuple[int, int, int]:
    axes = tuple(PARTIES.index(p) if isinstance(p, str) else int(p) for p in permutation)
    if sorted(axes) != [0, 1, 2]:
        raise ValueError(f"{permutation!r} is not a permutation of the three parties")
    return axes


def permute_parties(state: StateLike, permutation) -> ThreeQubitState:
    """Reorder parties: new party ``n`` is old party ``permutation[n]``.

    ``permutation`` holds party letters (``"CBA"``) or axis indices.
    """
    axes = _party_axes(permutation)
    t = as_state(state).tensor.transpose(axes)
    return ThreeQubitState(t.reshape(8))


def basis_state(bits: str) -> ThreeQubitState:
    v = np.zeros(8, dtype=np.complex128)
    v[int(bits, 2)] = 1.0
    return ThreeQubitState(v, label=f"|{bits}>")


def ghz() -> ThreeQubitState:
    v = np.zeros(8, dtype=np.complex128)
    v[0] = v[7] = 1 / np.sqrt(2)
    return ThreeQubitState(v, label="GHZ")


def w_state() -> ThreeQubitState:
    v = np.zeros(8, dtype=np.complex128)
    v[1] = v[2] = v[4] = 1 / np.sqrt(3)
    return ThreeQubitState(v, label="W")


def product_state(a, b, c) -> ThreeQubitState:
    v = np.kron(np.kron(a, b), c)
    return from_amplitudes(v, normalize=True)
