"""Fixed diagonal preconditioner for quadratic-gradient training.

The bound matrix is Hbar = -(1/2) X^T X, a (1+d) x (1+d) matrix that lower
bounds the log-likelihood Hessian for [0, 1]-scaled data. The reciprocal of
(epsilon + absolute column sum of Hbar) gives one positive coefficient per
feature column, replicated across all c class rows. The quadratic gradient
is the elementwise product of that matrix with the ordinary gradient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .linalg import ensure_matrix, hadamard

__all__ = ["Preconditioner", "build_preconditioner", "quadratic_gradient"]


@dataclass(frozen=True)
class Preconditioner:
    """Strictly positive c x (1+d) coefficient matrix; all rows identical."""

    b: np.ndarray
    epsilon: float


def _gram_sequential(x: np.ndarray) -> np.ndarray:
    # X^T X accumulated one sample at a time in plain Python floats. The
    # summation order is part of the construction contract: the result must
    # be bit-reproducible against a straightforward scalar re-evaluation,
    # which BLAS kernels (blocking, FMA) do not guarantee.
    m = x.shape[1]
    cols = [x[:, j].tolist() for j in range(m)]
    out = np.empty((m, m))
    for a in range(m):
        col_a = cols[a]
        for b in range(a, m):
            col_b = cols[b]
            acc = 0.0
            for u, v in zip(col_a, col_b):
                acc += u * v
            out[a, b] = acc
            out[b, a] = acc
    return out


def build_preconditioner(x, c: int, epsilon: float = 1e-8) -> Preconditioner:
    """Build the c x (1+d) preconditioner from the feature matrix.

    Entry (i, j) is 1 / (epsilon + sum_k |Hbar[k][j]|) with
    Hbar = -(1/2) X^T X; every class row i carries the same values.
    Computed once per training run, before iteration starts.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    x = ensure_matrix(x, "features")
    gram = _gram_sequential(x)
    m = x.shape[1]
    row = np.empty(m)
    for j in range(m):
        acc = epsilon
        for i in range(m):
            acc += abs(-0.5 * gram[i, j])
        row[j] = 1.0 / acc
    return Preconditioner(b=np.tile(row, (c, 1)), epsilon=epsilon)


def quadratic_gradient(precond: Preconditioner, g) -> np.ndarray:
    """Elementwise product of the preconditioner with the gradient."""
    g = ensure_matrix(g, "gradient")
    if g.shape != precond.b.shape:
        raise ShapeError(f"gradient {g.shape} does not match preconditioner {precond.b.shape}")
    return hadamard(precond.b, g)
