"""Local-unitary invariants I1..I5 and J1..J5.

The I's are computed two independent ways: directly from reduced density
matrices and the Cayley hyperdeterminant, and from closed forms in the
canonical parameters. The J's are polynomial in the canonical parameters.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, fields

import numpy as np

from .canonical import CanonicalForm, canonical_form
from .states import (
    StateLike,
    as_state,
    purity,
    reduced_density,
    reduced_density_ab,
)

# pencil discriminant b^2 - 4ac divided by Hdet, fixed numerically
DISCRIMINANT_TO_HDET = 1.0


@dataclass
class InvariantSet:
    I1: float
    I2: float
    I3: float
    I4: float
    I5: float
    J1: float | None = None
    J2: float | None = None
    J3: float | None = None
    J4: float | None = None
    J5: float | None = None
    delta: float | None = None
    hdet: complex | None = None

    @property
    def I(self) -> tuple[float, ...]:
        return (self.I1, self.I2, self.I3, self.I4, self.I5)

    @property
    def J(self) -> tuple[float, ...]:
        return (self.J1, self.J2, self.J3, self.J4, self.J5)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def hyperdeterminant(state: StateLike) -> complex:
    """Cayley's hyperdeterminant of the 2x2x2 amplitude tensor."""
    t = as_state(state).amplitudes
    t000, t001, t010, t011, t100, t101, t110, t111 = (complex(x) for x in t)
    return (
        t000**2 * t111**2 + t001**2 * t110**2 + t010**2 * t101**2 + t100**2 * t011**2
        - 2 * (t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111
               + t000 * t011 * t100 * t111 + t001 * t010 * t101 * t110
               + t001 * t011 * t110 * t100 + t010 * t011 * t101 * t100)
        + 4 * (t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111)
    )


def three_tangle(state: StateLike) -> float:
    return 4.0 * abs(hyperdeterminant(state))


def invariants_direct(state: StateLike) -> InvariantSet:
    s = as_state(state)
    rho_a = reduced_density(s, "A")
    rho_b = reduced_density(s, "B")
    rho_c = reduced_density(s, "C")
    rho_ab = reduced_density_ab(s)
    i4 = float(np.real(np.trace(np.kron(rho_a, rho_b) @ rho_ab)))
    h = hyperdeterminant(s)
    return InvariantSet(purity(rho_a), purity(rho_b), purity(rho_c), i4, abs(h) ** 2, hdet=h)


def delta(cf: CanonicalForm) -> float:
    l = cf.lambdas
    return abs(l[1] * l[4] * cmath.exp(1j * cf.phi) - l[2] * l[3]) ** 2


def invariants_from_canonical(cf: CanonicalForm) -> InvariantSet:
    m0, m1, m2, m3, m4 = (float(x) for x in cf.mu)
    d = delta(cf)
    return InvariantSet(
        I1=1 - 2 * m0 * (1 - m0 - m1),
        I2=1 - 2 * m0 * (1 - m0 - m1 - m2) - 2 * d,
        I3=1 - 2 * m0 * (1 - m0 - m1 - m3) - 2 * d,
        I4=1 + m0 * (m2 * m3 - m1 * m4 - 2 * m2 - 3 * m3 - 3 * m4) - (2 - m0) * d,
        I5=m0 ** 2 * m4 ** 2,
        delta=d,
    )


def invariants_J(cf: CanonicalForm) -> tuple[float, float, float, float, float, float]:
    """``(J1, J2, J3, J4, J5, delta)``."""
    m0, m1, m2, m3, m4 = (float(x) for x in cf.mu)
    d = delta(cf)
    return d, m0 * m2, m0 * m3, m0 * m4, m0 * (d + m2 * m3 - m1 * m4), d


def invariants(state: StateLike, cf: CanonicalForm | None = None) -> InvariantSet:
    """Direct I's plus J's and delta from the canonical form."""
    s = as_state(state)
    if cf is None:
        cf = canonical_form(s)
    inv = invariants_direct(s)
    inv.J1, inv.J2, inv.J3, inv.J4, inv.J5, inv.delta = invariants_J(cf)
    return inv
