"""Closed-form 2x2 complex matrix primitives.

Everything here works on numpy arrays of shape ``(2, 2)`` and dtype
``complex128``. Nothing calls an iterative solver: the singular value
decomposition, the roots of the pencil determinant and the unitary
completion are all written out explicitly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-10

SIMPLE = "simple"
DOUBLE = "double"
IDENTICALLY_ZERO = "identically-zero-quadratic"

_LEADING_EPS = 1e-14


def as_mat2(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    return m


def det2(m: np.ndarray) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conj(m).T


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    return bool(np.max(np.abs(m @ dagger(m) - np.eye(m.shape[0]))) < tol)


def is_diagonal(m, tol: float = DEFAULT_TOL) -> bool:
    m = as_mat2(m)
    return abs(m[0, 1]) < tol and abs(m[1, 0]) < tol


def _orthogonal_complement(v: np.ndarray) -> np.ndarray:
    return np.array([-np.conj(v[1]), np.conj(v[0])])


def svd2(m):
    """Singular value decomposition of a 2x2 complex matrix.

    Returns ``(U1, D, U2)`` with ``U1 @ m @ U2 == D``, both ``U1`` and
    ``U2`` unitary and ``D = diag(s0, s1)`` real with ``s0 >= s1 >= 0``.

    The right singular vectors come from the closed-form eigenvectors of
    ``m^H m``; the left ones are ``m v / |m v|`` and its complement. The
    singular values are read off as ``|u_i^H m v_i|`` rather than as square
    roots of eigenvalues, which keeps the small one accurate.
    """
    m = as_mat2(m)
    scale = float(np.max(np.abs(m)))
    # componentwise division: complex / subnormal overflows in numpy
    ms = (m.real / scale + 1j * (m.imag / scale)) if scale > 0.0 else m
    h = dagger(ms) @ ms
    p, r = h[0, 0].real, h[1, 1].real
    q = complex(h[0, 1])
    chi = cmath.phase(q) if q != 0 else 0.0
    theta = 0.5 * math.atan2(2.0 * abs(q), p - r)
    c, s = math.cos(theta), math.sin(theta)
    e = cmath.exp(-1j * chi)
    v = np.array([[c, -s], [s * e, c * e]], dtype=np.complex128)

    mv0 = ms @ v[:, 0]
    n0 = float(np.linalg.norm(mv0))
    if n0 > 0.0:
        u0 = mv0 / n0
    else:
        u0 = np.array([1.0, 0.0], dtype=np.complex128)
    u1 = _orthogonal_complement(u0)
    z = complex(np.vdot(u1, ms @ v[:, 1]))
    if z != 0:
        u1 = u1 * cmath.exp(1j * cmath.phase(z))
    u = np.column_stack([u0, u1])
    s0 = n0 * scale if scale > 0.0 else 0.0
    s1 = min(abs(z), n0) * scale if scale > 0.0 else 0.0
    d = np.diag([s0, s1]).astype(np.complex128)
    return dagger(u), d, v


@dataclass(frozen=True)
class ProjectiveRoot:
    """A point ``(u0 : u1)`` of the projective line.

    Stored normalized, with the first component of modulus above 1e-14
    made real and positive.
    """

    u0: complex
    u1: complex
    multiplicity: str = SIMPLE

    @classmethod
    def from_pair(cls, u0: complex, u1: complex, multiplicity: str = SIMPLE):
        u0, u1 = complex(u0), complex(u1)
        norm = math.hypot(abs(u0), abs(u1))
        if norm == 0.0:
            raise ValueError("(0, 0) is not a projective point")
        u0, u1 = u0 / norm, u1 / norm
        lead = u0 if abs(u0) > _LEADING_EPS else u1
        ph = cmath.exp(-1j * cmath.phase(lead))
        u0, u1 = u0 * ph, u1 * ph
        if abs(u0) > _LEADING_EPS:
            u0 = complex(u0.real, 0.0)
        else:
            u1 = complex(u1.real, 0.0)
        return cls(u0, u1, multiplicity)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.u0, self.u1], dtype=np.complex128)

    def distance(self, other: "ProjectiveRoot") -> float:
        """Chordal distance, ``sqrt(1 - |<self|other>|^2)``."""
        ov = abs(np.vdot(self.vector, other.vector))
        return math.sqrt(max(0.0, 1.0 - ov * ov))


def pencil_coefficients(t0, t1):
    """Coefficients ``(a, b, c)`` of ``det(u0 T0 + u1 T1)``.

    The determinant equals ``c u0^2 + b u0 u1 + a u1^2`` with
    ``a = det T1``, ``c = det T0`` and ``b = det(T0 + T1) - a - c``.
    """
    t0, t1 = as_mat2(t0), as_mat2(t1)
    a = det2(t1)
    c = det2(t0)
    b = det2(t0 + t1) - a - c
    return a, b, c


def pencil_discriminant(t0, t1) -> complex:
    a, b, c = pencil_coefficients(t0, t1)
    return b * b - 4.0 * a * c


def pencil_roots(t0, t1, tol: float = DEFAULT_TOL) -> list[ProjectiveRoot]:
    """Projective roots of ``det(u0 T0 + u1 T1) = 0``.

    Returns two simple roots, one double root, or, when the quadratic
    vanishes identically, the representatives ``(1, 0)`` and ``(0, 1)``.
    Thresholds are relative to ``(|T0| + |T1|)^2``.
    """
    t0, t1 = as_mat2(t0), as_mat2(t1)
    a, b, c = pencil_coefficients(t0, t1)
    scale = (np.linalg.norm(t0) + np.linalg.norm(t1)) ** 2
    if scale == 0.0 or max(abs(a), abs(b), abs(c)) <= tol * scale:
        return [
            ProjectiveRoot.from_pair(1, 0, IDENTICALLY_ZERO),
            ProjectiveRoot.from_pair(0, 1, IDENTICALLY_ZERO),
        ]

    disc = b * b - 4.0 * a * c
    if abs(disc) <= tol * scale * scale:
        if abs(c) >= abs(a):
            return [ProjectiveRoot.from_pair(-b, 2.0 * c, DOUBLE)]
        return [ProjectiveRoot.from_pair(2.0 * a, -b, DOUBLE)]

    sq = cmath.sqrt(disc)
    qp, qm = -(b + sq) / 2.0, -(b - sq) / 2.0
    q = qp if abs(qp) >= abs(qm) else qm
    # roots of c x^2 + b x + a in x = u0/u1 are q/c and a/q
    roots = [
        ProjectiveRoot.from_pair(q, c, SIMPLE),
        ProjectiveRoot.from_pair(a, q, SIMPLE),
    ]
    return sorted(roots, key=lambda r: (-abs(r.u0), r.u1.real, r.u1.imag))


def complete_unitary(u0: complex, u1: complex, tol: float = 1e-12) -> np.ndarray:
    """Special unitary with first row ``(u0, u1)``."""
    u0, u1 = complex(u0), complex(u1)
    if abs(abs(u0) ** 2 + abs(u1) ** 2 - 1.0) > tol:
        raise ValueError("row must be normalized")
    return np.array(
        [[u0, u1], [-u1.conjugate(), u0.conjugate()]], dtype=np.complex128
    )


def to_special_unitary(u: np.ndarray) -> tuple[np.ndarray, float]:
    """Split ``u = exp(i delta) s`` with ``det s = 1``; returns ``(s, delta)``."""
    delta = cmath.phase(det2(u)) / 2.0
    return u * cmath.exp(-1j * delta), delta
