"""Full-batch ascent optimizers for the softmax log-likelihood.

Five optimizers share one stepping interface:

- ``SFHNewton``: naive quadratic-gradient ascent, W += B * g.
- ``NAGQG`` / ``NAG``: Nesterov-accelerated ascent; the enhanced variant
  steps along the quadratic gradient B * g, the plain baseline along
  base_lr * g. Both evaluate the gradient at the auxiliary point V.
- ``AdagradQG`` / ``Adagrad``: per-coordinate adaptive ascent with the
  squared-step accumulator; same enhanced/plain split.

The plain baselines reuse the enhanced update rules verbatim with the
preconditioner replaced by the constant base_lr, so the preconditioner is
the only difference between each pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .datasets import Dataset
from .errors import ShapeError
from .model import log_likelihood, predict_accuracy, softmax_rows, logits, gradient
from .precond import Preconditioner, build_preconditioner, quadratic_gradient

__all__ = [
    "KINDS",
    "TrainConfig",
    "IterationRecord",
    "Optimizer",
    "SfhNewtonOptimizer",
    "NagOptimizer",
    "AdagradOptimizer",
    "make_optimizer",
    "train",
]

KINDS = ("SFHNewton", "NAG", "NAGQG", "Adagrad", "AdagradQG")


@dataclass
class TrainConfig:
    """Hyperparameters for one training run."""

    kind: str = "NAGQG"
    iterations: int = 30
    epsilon: float = 1e-8
    base_lr: float = 0.01
    adagrad_numerator: float = 1.01  # the adaptive-step numerator (1.0 + 0.01)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown optimizer kind {self.kind!r}; expected one of {KINDS}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.base_lr <= 0:
            raise ValueError(f"base_lr must be positive, got {self.base_lr}")


@dataclass
class IterationRecord:
    """Metrics sampled after an update (iteration 0 is the initial state)."""

    iteration: int
    loss: float  # log-likelihood, <= 0
    accuracy: float


def _next_alpha(alpha: float) -> float:
    return 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * alpha * alpha))


class Optimizer:
    """Shared state: parameter matrix W, sample count, iteration counter."""

    kind: str = ""
    needs_preconditioner = False

    def __init__(self, c: int, n_feat_cols: int, n_samples: int, config: TrainConfig,
                 precond: Optional[Preconditioner] = None):
        if self.needs_preconditioner:
            if precond is None:
                raise ValueError(f"{self.kind} requires a preconditioner")
            if precond.b.shape != (c, n_feat_cols):
                raise ShapeError(
                    f"preconditioner {precond.b.shape} does not match parameters "
                    f"{(c, n_feat_cols)}"
                )
        self.w = np.zeros((c, n_feat_cols))
        self.n_samples = n_samples
        self.config = config
        self.precond = precond
        self.count = 1

    @property
    def gradient_point(self) -> np.ndarray:
        """Parameters at which the caller should evaluate the gradient."""
        return self.w

    def _direction(self, g: np.ndarray) -> np.ndarray:
        if self.precond is not None:
            return quadratic_gradient(self.precond, g)
        return self.config.base_lr * g

    def _check(self, g) -> np.ndarray:
        g = np.asarray(g, dtype=np.float64)
        if g.shape != self.w.shape:
            raise ShapeError(f"gradient {g.shape} does not match parameters {self.w.shape}")
        return g

    def step(self, g) -> None:
        raise NotImplementedError


class SfhNewtonOptimizer(Optimizer):
    kind = "SFHNewton"
    needs_preconditioner = True

    def step(self, g) -> None:
        g = self._check(g)
        self.w = self.w + quadratic_gradient(self.precond, g)
        self.count += 1


class NagOptimizer(Optimizer):
    """Nesterov-accelerated ascent; gradient is evaluated at V, not W."""

    kind = "NAG"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.v = np.zeros_like(self.w)
        self.alpha0 = 0.01
        self.alpha1 = _next_alpha(self.alpha0)

    @property
    def gradient_point(self) -> np.ndarray:
        return self.v

    def step(self, g) -> None:
        g = self._check(g)
        s = self._direction(g)
        eta = (1.0 - self.alpha0) / self.alpha1
        gamma = 1.0 / (self.n_samples * self.count)
        w_temp = self.w + (1.0 + gamma) * s
        self.w = (1.0 - eta) * w_temp + eta * self.v
        self.v = w_temp
        self.alpha0 = self.alpha1
        self.alpha1 = _next_alpha(self.alpha0)
        self.count += 1


class NagQGOptimizer(NagOptimizer):
    kind = "NAGQG"
    needs_preconditioner = True


class AdagradOptimizer(Optimizer):
    """Adaptive ascent with the running sum of squared steps."""

    kind = "Adagrad"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.gt = np.zeros_like(self.w)

    def step(self, g) -> None:
        g = self._check(g)
        s = self._direction(g)
        self.gt = self.gt + s * s
        gamma = self.config.adagrad_numerator / np.sqrt(self.config.epsilon + self.gt)
        self.w = self.w + gamma * s
        self.count += 1


class AdagradQGOptimizer(AdagradOptimizer):
    kind = "AdagradQG"
    needs_preconditioner = True


_OPTIMIZERS = {
    "SFHNewton": SfhNewtonOptimizer,
    "NAG": NagOptimizer,
    "NAGQG": NagQGOptimizer,
    "Adagrad": AdagradOptimizer,
    "AdagradQG": AdagradQGOptimizer,
}


def make_optimizer(config: TrainConfig, c: int, n_feat_cols: int, n_samples: int,
                   precond: Optional[Preconditioner] = None) -> Optimizer:
    """Instantiate the optimizer named by ``config.kind`` at W = 0."""
    cls = _OPTIMIZERS[config.kind]
    if not cls.needs_preconditioner:
        precond = None
    return cls(c, n_feat_cols, n_samples, config, precond)


def train(dataset: Dataset, y_onehot: np.ndarray, config: TrainConfig,
          precond: Optional[Preconditioner] = None):
    """Run ``config.iterations`` full-batch updates from W = 0.

    Returns ``(w, records)`` where records holds one IterationRecord per
    iteration 0..iterations; iteration 0 is the untouched initial state and
    every later record is measured after its update. The preconditioner is
    built once up front when the optimizer needs one and none is supplied.

    The run is sequential by construction: each iteration consumes the
    previous state. Distinct runs share nothing and may go in parallel.
    """
    y_onehot = np.asarray(y_onehot, dtype=np.float64)
    if y_onehot.shape != (dataset.n, dataset.c):
        raise ShapeError(
            f"one-hot labels {y_onehot.shape} do not match dataset {(dataset.n, dataset.c)}"
        )
    needs = _OPTIMIZERS[config.kind].needs_preconditioner
    if needs and precond is None:
        precond = build_preconditioner(dataset.x, dataset.c, config.epsilon)
    opt = make_optimizer(config, dataset.c, dataset.x.shape[1], dataset.n, precond)

    def snapshot(iteration: int) -> IterationRecord:
        return IterationRecord(
            iteration=iteration,
            loss=log_likelihood(dataset.x, y_onehot, opt.w),
            accuracy=predict_accuracy(dataset.x, dataset.labels, opt.w),
        )

    records = [snapshot(0)]
    for k in range(1, config.iterations + 1):
        p = softmax_rows(logits(dataset.x, opt.gradient_point))
        opt.step(gradient(dataset.x, y_onehot, p))
        records.append(snapshot(k))
    return opt.w, records
