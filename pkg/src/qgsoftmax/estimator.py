"""Scikit-learn style estimator wrapping the training pipeline."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from .datasets import Dataset, one_hot
from .model import logits as _logits, softmax_rows
from .optimizers import TrainConfig, train

__all__ = ["SoftmaxRegression"]


class SoftmaxRegression(BaseEstimator, ClassifierMixin):
    """Multinomial logistic regression fit by full-batch quadratic-gradient ascent.

    Parameters
    ----------
    optimizer : str, default "NAGQG"
        One of "SFHNewton", "NAG", "NAGQG", "Adagrad", "AdagradQG".
    iterations : int, default 30
        Number of full-batch updates.
    epsilon : float, default 1e-8
        Small positive constant used in the preconditioner and the
        adaptive denominator.
    base_lr : float, default 0.01
        Learning rate of the plain (non-preconditioned) baselines.
    normalize : bool, default True
        Min-max scale each feature into [0, 1] on fit and apply the same
        bounds, clamped, at predict time. Disable only if the input is
        already scaled to [0, 1], which the preconditioner bound assumes.
    adagrad_numerator : float, default 1.01
        Numerator of the adaptive step size of the Adagrad variants.

    Attributes
    ----------
    classes_ : ndarray
        Sorted original class labels.
    weights_ : ndarray of shape (n_classes, 1 + n_features)
        Parameter matrix; column 0 multiplies the bias.
    history_ : list of IterationRecord
        Per-iteration log-likelihood and training accuracy, iteration 0
        included.
    """

    def __init__(self, optimizer="NAGQG", iterations=30, epsilon=1e-8,
                 base_lr=0.01, normalize=True, adagrad_numerator=1.01):
        self.optimizer = optimizer
        self.iterations = iterations
        self.epsilon = epsilon
        self.base_lr = base_lr
        self.normalize = normalize
        self.adagrad_numerator = adagrad_numerator

    def fit(self, X, y):
        X, y = check_X_y(X, y, dtype=np.float64)
        self.classes_, y_idx = np.unique(y, return_inverse=True)
        if self.classes_.size < 2:
            raise ValueError("fit needs at least 2 distinct classes")
        self.n_features_in_ = X.shape[1]
        if self.normalize:
            self.feature_min_ = X.min(axis=0)
            self.feature_max_ = X.max(axis=0)
        else:
            self.feature_min_ = np.zeros(X.shape[1])
            self.feature_max_ = np.ones(X.shape[1])

        x = self._with_bias(X)
        dataset = Dataset(
            x=x,
            labels=y_idx.astype(np.int64),
            c=int(self.classes_.size),
            norm_bounds=np.column_stack([self.feature_min_, self.feature_max_]),
            label_mapping={v: i for i, v in enumerate(self.classes_)},
        )
        config = TrainConfig(
            kind=self.optimizer,
            iterations=self.iterations,
            epsilon=self.epsilon,
            base_lr=self.base_lr,
            adagrad_numerator=self.adagrad_numerator,
        )
        self.weights_, self.history_ = train(dataset, one_hot(dataset.labels, dataset.c), config)
        self.n_iter_ = self.iterations
        return self

    def _with_bias(self, X: np.ndarray) -> np.ndarray:
        if self.normalize:
            span = self.feature_max_ - self.feature_min_
            safe = np.where(span > 0, span, 1.0)
            X = np.where(span > 0, (X - self.feature_min_) / safe, 0.0)
            X = np.clip(X, 0.0, 1.0)
        return np.hstack([np.ones((X.shape[0], 1)), X])

    def _validated(self, X) -> np.ndarray:
        check_is_fitted(self, "weights_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return self._with_bias(X)

    def decision_function(self, X) -> np.ndarray:
        """Class scores X W^T, shape (n_samples, n_classes)."""
        return _logits(self._validated(X), self.weights_)

    def predict_proba(self, X) -> np.ndarray:
        return softmax_rows(self.decision_function(X))

    def predict(self, X) -> np.ndarray:
        scores = self.decision_function(X)
        return self.classes_[np.argmax(scores, axis=1)]
