"""Input checking for batches of states."""

from __future__ import annotations

import numpy as np

from .exceptions import DegenerateInput, NotNormalized
from .states import INGEST_NORM_TOL


def check_states(X, normalize: bool = False, norm_tol: float = INGEST_NORM_TOL) -> np.ndarray:
    """Validate a batch of three-qubit amplitude vectors.

    Parameters
    ----------
    X : array-like of shape (n_samples, 8) or (8,)
        Complex amplitudes, index ``4i + 2j + k``. A real array of shape
        ``(n_samples, 16)`` is read as interleaved ``[re, im]`` pairs.
    normalize : bool
        Rescale rows to unit norm instead of rejecting them.

    Returns
    -------
    ndarray of shape (n_samples, 8), complex128
    """
    X = np.asarray(X)
    if X.ndim == 1:
        X = X[np.newaxis, :]
    if X.ndim != 2:
        raise ValueError(f"expected a 2D array, got {X.ndim}D")
    if X.shape[1] == 16 and not np.iscomplexobj(X):
        X = X[:, 0::2] + 1j * X[:, 1::2]
    if X.shape[1] != 8:
        raise ValueError(f"expected 8 amplitudes per row, got {X.shape[1]}")
    X = X.astype(np.complex128)
    if not np.all(np.isfinite(X)):
        raise ValueError("input contains NaN or infinity")
    norms = np.linalg.norm(X, axis=1)
    if np.any(norms == 0.0):
        raise DegenerateInput(f"row {int(np.argmin(norms))} is the zero vector")
    if not normalize:
        bad = np.flatnonzero(np.abs(norms - 1.0) > norm_tol)
        if bad.size:
            raise NotNormalized(f"row {bad[0]} has norm {norms[bad[0]]!r}")
    return X / norms[:, np.newaxis]
