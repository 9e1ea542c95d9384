"""scikit-learn compatible wrappers.

Rows of ``X`` are weight vectors ``(w_2, ..., w_n)`` or spectra
``(mu_2, ..., mu_n)``; ``n_features_in_`` is therefore ``n - 1``.  These
estimators let the closed-form spectral map sit inside a ``Pipeline``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, validate_data

from .cospectral import WeightAlphabet, reconstruct
from .spectral import Spectrum


def _suffix_sums(X: np.ndarray) -> np.ndarray:
    """Column ``k`` holds the sum of columns ``k+1..`` of ``X``."""
    out = np.zeros_like(X)
    out[:, :-1] = np.cumsum(X[:, ::-1], axis=1)[:, ::-1][:, 1:]
    return out


class ThresholdSpectrumTransformer(TransformerMixin, BaseEstimator):
    """Map weight vectors to nontrivial Laplacian eigenvalues and back.

    The transform is fixed; ``fit`` only records the number of features.

    Parameters
    ----------
    include_zero : bool, default=False
        Prepend the trivial eigenvalue 0 as an extra first column. Output
        with this column cannot be passed to ``inverse_transform``.
    """

    def __init__(self, include_zero: bool = False):
        self.include_zero = include_zero

    def fit(self, X, y=None):
        validate_data(self, X, dtype=np.float64, ensure_min_features=1)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = validate_data(self, X, dtype=np.float64, reset=False)
        idx = np.arange(2, X.shape[1] + 2, dtype=np.float64)
        mu = idx * X + _suffix_sums(X)
        if self.include_zero:
            mu = np.hstack([np.zeros((mu.shape[0], 1)), mu])
        return mu

    def inverse_transform(self, X):
        check_is_fitted(self, "n_features_in_")
        mu = check_array(X, dtype=np.float64)
        if mu.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} spectrum columns, got {mu.shape[1]}")
        W = np.empty_like(mu)
        suffix = np.zeros(mu.shape[0])
        for k in range(mu.shape[1] - 1, -1, -1):
            W[:, k] = (mu[:, k] - suffix) / (k + 2)
            suffix += W[:, k]
        return W


class ThreeWeightReconstructor(BaseEstimator):
    """Predict weight vectors from spectra over an alphabet of at most three values.

    ``fit`` learns the alphabet from the training weights ``y`` when
    ``alphabet`` is not given; ``predict`` reconstructs one weight vector
    per row of spectra.
    """

    def __init__(self, alphabet=None, tol: float = 1e-9):
        self.alphabet = alphabet
        self.tol = tol

    def fit(self, X, y=None):
        validate_data(self, X, dtype=np.float64, ensure_min_features=1)
        if self.alphabet is not None:
            values = list(self.alphabet)
        elif y is not None:
            values = np.unique(check_array(y, dtype=np.float64, ensure_2d=False)).tolist()
        else:
            raise ValueError("either pass alphabet= or provide training weights y")
        self.alphabet_ = WeightAlphabet(tuple(float(v) for v in values))
        return self

    def predict(self, X):
        check_is_fitted(self, "alphabet_")
        X = validate_data(self, X, dtype=np.float64, reset=False)
        rows = [reconstruct(Spectrum(tuple(row.tolist())), self.alphabet_, tol=self.tol) for row in X]
        return np.array([w.weights for w in rows], dtype=np.float64).reshape(X.shape)

    def score(self, X, y):
        """Fraction of rows whose weight vector is recovered exactly."""
        y = check_array(y, dtype=np.float64)
        return float(np.mean(np.all(self.predict(X) == y, axis=1)))
