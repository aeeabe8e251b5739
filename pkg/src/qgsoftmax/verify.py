"""Independent brute-force oracles used by the test suite.

Nothing here is needed for training. These routines deliberately avoid the
fast paths elsewhere in the package so that tests can cross-check results
through a second, slower route: coordinate-wise finite differences, an
explicit Kronecker-structured Hessian, a cyclic Jacobi eigensolver, and a
Gauss-Jordan inverse for tiny matrices.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ShapeError, SingularMatrixError
from .linalg import ensure_matrix, kronecker

__all__ = [
    "flat_index",
    "finite_diff_gradient",
    "finite_diff_hessian",
    "assemble_hessian",
    "symmetric_eigenvalues",
    "min_eigenvalue_symmetric",
    "invert_small",
]


def flat_index(class_idx: int, feat_idx: int, n_feat_cols: int) -> int:
    """Row-major position of W[class_idx, feat_idx] in the flattened vector."""
    return class_idx * n_feat_cols + feat_idx


def finite_diff_gradient(f, w, h: float = 1e-5) -> np.ndarray:
    """Central-difference gradient of a scalar function of a matrix."""
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    w = ensure_matrix(w, "parameters")
    out = np.empty_like(w)
    for i in range(w.shape[0]):
        for j in range(w.shape[1]):
            plus = w.copy()
            minus = w.copy()
            plus[i, j] += h
            minus[i, j] -= h
            out[i, j] = (f(plus) - f(minus)) / (2.0 * h)
    return out


def finite_diff_hessian(grad_fn, w, h: float = 1e-4) -> np.ndarray:
    """Central differences of a gradient function, one column per coordinate."""
    w = ensure_matrix(w, "parameters")
    size = w.size
    out = np.empty((size, size))
    for q in range(size):
        plus = w.copy()
        minus = w.copy()
        plus.flat[q] += h
        minus.flat[q] -= h
        out[:, q] = (grad_fn(plus) - grad_fn(minus)).ravel() / (2.0 * h)
    return out


def assemble_hessian(x, p) -> np.ndarray:
    """Exact log-likelihood Hessian at the parameters that produced ``p``.

    Built sample by sample as (p_i p_i^T - diag(p_i)) kron (x_i^T x_i) and
    summed, giving a symmetric matrix of order c(1+d) in the row-major
    flattening of W. Only intended for the tiny instances tests use.
    """
    x = ensure_matrix(x, "features")
    p = ensure_matrix(p, "probabilities")
    if p.shape[0] != x.shape[0]:
        raise ShapeError(f"probabilities {p.shape} do not match features {x.shape}")
    n, c = p.shape
    m = x.shape[1]
    out = np.zeros((c * m, c * m))
    for i in range(n):
        row = x[i : i + 1, :]
        coeff = np.outer(p[i], p[i]) - np.diag(p[i])
        out += kronecker(coeff, row.T @ row)
    return out


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt((off * off).sum()))


def symmetric_eigenvalues(m, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps rotate every off-diagonal pair in a fixed order until the
    off-diagonal Frobenius norm drops to ``tol``. Deterministic, and sized
    for matrices up to order ~50.
    """
    a = ensure_matrix(m, "matrix").copy()
    n = a.shape[0]
    if a.shape[1] != n:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    if n and float(np.abs(a - a.T).max()) > 1e-10:
        raise ValueError("matrix is not symmetric within 1e-10")
    a = 0.5 * (a + a.T)
    converged = False
    for _ in range(max_sweeps):
        if _off_diagonal_norm(a) <= tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                cos = 1.0 / math.sqrt(t * t + 1.0)
                sin = t * cos
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = cos * col_p - sin * col_q
                a[:, q] = sin * col_p + cos * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = cos * row_p - sin * row_q
                a[q, :] = sin * row_p + cos * row_q
    if not converged and _off_diagonal_norm(a) > tol:
        raise RuntimeError(f"Jacobi sweep limit hit with off-diagonal norm {_off_diagonal_norm(a):.3e}")
    return np.sort(np.diag(a))


def min_eigenvalue_symmetric(m, tol: float = 1e-12) -> float:
    """Smallest eigenvalue of a symmetric matrix (cyclic Jacobi)."""
    return float(symmetric_eigenvalues(m, tol=tol)[0])


def invert_small(m, pivot_tol: float = 1e-12) -> np.ndarray:
    """Gauss-Jordan inverse with partial pivoting for matrices up to order 8."""
    a = ensure_matrix(m, "matrix").copy()
    n = a.shape[0]
    if a.shape[1] != n:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    if n > 8:
        raise ValueError(f"invert_small handles order <= 8, got {n}")
    aug = np.hstack([a, np.eye(n)])
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(aug[col:, col])))
        if abs(aug[pivot_row, col]) < pivot_tol:
            raise SingularMatrixError(f"pivot {aug[pivot_row, col]:.3e} below {pivot_tol:.0e}")
        if pivot_row != col:
            aug[[col, pivot_row]] = aug[[pivot_row, col]]
        aug[col] /= aug[col, col]
        for row in range(n):
            if row != col and aug[row, col] != 0.0:
                aug[row] -= aug[row, col] * aug[col]
    return aug[:, n:]
