"""scikit-learn compatible wrappers.

The computations are stateless, so ``fit`` only validates its input and
records ``n_features_in_``. The wrappers exist so batches of states can
flow through ``Pipeline``, ``FunctionTransformer`` and friends.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .canonical import canonical_form
from .classify import DEFAULT_CLASSIFY_TOL, TYPE_LABELS, classify
from .invariants import invariants
from .linalg import DEFAULT_TOL
from .states import ThreeQubitState
from .validation import check_states


class _StateEstimator(BaseEstimator):
    def fit(self, X, y=None):
        check_states(X, normalize=self.normalize)
        self.n_features_in_ = 8
        return self

    def _forms(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_states(X, normalize=self.normalize)
        return X, [canonical_form(ThreeQubitState(x), self.tol) for x in X]


class CanonicalFormTransformer(TransformerMixin, _StateEstimator):
    """Map each state to ``[l0, l1, l2, l3, l4, phi]``."""

    def __init__(self, tol=DEFAULT_TOL, normalize=False):
        self.tol = tol
        self.normalize = normalize

    def transform(self, X):
        _, forms = self._forms(X)
        return np.array([[*cf.lambdas, cf.phi] for cf in forms])

    def inverse_transform(self, Xt):
        """Canonical-frame amplitude vectors (the local unitaries are not kept)."""
        Xt = np.asarray(Xt, dtype=float)
        out = np.zeros((Xt.shape[0], 8), dtype=np.complex128)
        out[:, [0, 4, 5, 6, 7]] = Xt[:, :5]
        out[:, 4] *= np.exp(1j * Xt[:, 5])
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array(["lambda0", "lambda1", "lambda2", "lambda3", "lambda4", "phi"])


class InvariantTransformer(TransformerMixin, _StateEstimator):
    """Map each state to ``[I1..I5, J1..J5]``."""

    def __init__(self, tol=DEFAULT_TOL, normalize=False):
        self.tol = tol
        self.normalize = normalize

    def transform(self, X):
        X, forms = self._forms(X)
        rows = []
        for x, cf in zip(X, forms):
            inv = invariants(ThreeQubitState(x), cf)
            rows.append([*inv.I, *inv.J])
        return np.array(rows, dtype=float)

    def get_feature_names_out(self, input_features=None):
        return np.array([f"I{i}" for i in range(1, 6)] + [f"J{i}" for i in range(1, 6)])


class EntanglementTypeClassifier(ClassifierMixin, _StateEstimator):
    """Label states with their entanglement type. There is nothing to learn."""

    def __init__(self, tol=DEFAULT_CLASSIFY_TOL, canonical_tol=DEFAULT_TOL, normalize=False):
        self.tol = tol
        self.canonical_tol = canonical_tol
        self.normalize = normalize

    def fit(self, X, y=None):
        super().fit(X, y)
        self.classes_ = np.array(TYPE_LABELS)
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        X = check_states(X, normalize=self.normalize)
        return np.array([
            classify(canonical_form(ThreeQubitState(x), self.canonical_tol), self.tol).type_label
            for x in X
        ])
