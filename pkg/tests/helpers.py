"""Shared state generators for the test suite."""

import math

import numpy as np

from threequbit.canonical import canonical_vector
from threequbit.states import apply_local, haar_unitary

# which lambdas are nonzero, and whether phi is drawn at random
TYPE_PATTERNS = {
    "1": ([0], False),
    "2a-A": ([1, 4], False),
    "2a-B": ([0, 2], False),
    "2a-C": ([0, 3], False),
    "2b": ([0, 4], False),
    "3a": ([0, 2, 3], False),
    "3b": ([0, 1, 4], True),
    "4a": ([0, 1, 2, 3], True),
    "4b": ([0, 1, 3, 4], True),
    "4c": ([0, 2, 3, 4], False),
    "5": ([0, 1, 2, 3, 4], False),
    "generic": ([0, 1, 2, 3, 4], True),
}


def random_local_unitaries(seed):
    return haar_unitary(seed + 1), haar_unitary(seed + 2), haar_unitary(seed + 3)


def canonical_params(label, seed):
    rng = np.random.default_rng(seed)
    nz, random_phi = TYPE_PATTERNS[label]
    lam = np.zeros(5)
    lam[nz] = np.sqrt(rng.dirichlet(np.ones(len(nz))))
    phi = rng.uniform(0.2, math.pi - 0.2) if random_phi else 0.0
    return lam, phi


def typed_state(label, seed):
    """A state of the given type, hidden behind random local unitaries."""
    lam, phi = canonical_params(label, seed)
    rng = np.random.default_rng(seed + 7)
    return apply_local(canonical_vector(lam, phi), *random_local_unitaries(seed),
                       rng.uniform(0, 2 * math.pi))


def hdet_brute(amps):
    """Hyperdeterminant as the discriminant of det(x T0 + T1) in x.

    Computed from the polynomial coefficients found by sampling the
    determinant at three points; independent of the explicit monomial list.
    """
    t = np.asarray(amps).reshape(2, 2, 2)
    xs = np.array([0.0, 1.0, -1.0])
    vals = [np.linalg.det(x * t[0] + t[1]) for x in xs]
    c2, c1, c0 = np.linalg.solve(np.vander(xs, 3), vals)
    return c1 * c1 - 4 * c2 * c0
