"""Multinomial (softmax) logistic regression model functions.

The parameter matrix W is c x (1+d); row k scores class k. The objective
is the log-likelihood ln L (a sum over samples, not an average), which is
maximized, so the gradient returned here is an ascent direction.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError
from .linalg import ensure_matrix, matmul, transpose

__all__ = [
    "logits",
    "softmax_rows",
    "log_likelihood",
    "gradient",
    "predict",
    "predict_accuracy",
]


def logits(x, w) -> np.ndarray:
    """Score matrix Z = X W^T, shape (n, c)."""
    return matmul(x, transpose(w))


def softmax_rows(z) -> np.ndarray:
    """Row-wise softmax, computed with the row maximum subtracted first.

    The shift leaves the exact-arithmetic result unchanged and prevents
    overflow for large scores. Rows sum to 1 up to roundoff.
    """
    z = ensure_matrix(z, "logits")
    shifted = z - z.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def _log_sum_exp_rows(z: np.ndarray) -> np.ndarray:
    m = z.max(axis=1)
    return m + np.log(np.exp(z - m[:, None]).sum(axis=1))


def log_likelihood(x, y_onehot, w) -> float:
    """ln L = sum_i [ z_{i, y_i} - ln sum_k exp(z_{i,k}) ], always <= 0."""
    z = logits(x, w)
    y_onehot = ensure_matrix(y_onehot, "one-hot labels")
    if y_onehot.shape != z.shape:
        raise ShapeError(f"one-hot labels {y_onehot.shape} do not match logits {z.shape}")
    true_logit = (z * y_onehot).sum(axis=1)
    return float(np.sum(true_logit - _log_sum_exp_rows(z)))


def gradient(x, y_onehot, p) -> np.ndarray:
    """Ascent gradient of ln L in matrix form: (Y - P)^T X, shape c x (1+d)."""
    y_onehot = ensure_matrix(y_onehot, "one-hot labels")
    p = ensure_matrix(p, "probabilities")
    if y_onehot.shape != p.shape:
        raise ShapeError(f"one-hot labels {y_onehot.shape} do not match probabilities {p.shape}")
    return matmul(transpose(y_onehot - p), x)


def predict(x, w) -> np.ndarray:
    """Predicted class index per row; ties break to the lowest index."""
    return np.argmax(logits(x, w), axis=1)


def predict_accuracy(x, labels, w) -> float:
    """Fraction of rows whose predicted class matches ``labels``."""
    labels = np.asarray(labels, dtype=np.int64)
    return float(np.mean(predict(x, w) == labels))
