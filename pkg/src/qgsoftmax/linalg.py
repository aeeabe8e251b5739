"""Dense float64 matrix primitives used by every other module.

All operations take array-likes, work on 2-D row-major float64 arrays and
return new arrays. Result finiteness is enforced by assertions, so it is
checked in normal runs and stripped under ``python -O``.
"""

from __future__ import annotations

import numpy as np

from .errors import ShapeError

__all__ = ["ensure_matrix", "matmul", "transpose", "hadamard", "kronecker"]


def ensure_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D C-contiguous float64 array or raise ShapeError."""
    out = np.ascontiguousarray(a, dtype=np.float64)
    if out.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got {out.ndim}-D")
    return out


def matmul(a, b) -> np.ndarray:
    """Matrix product a @ b."""
    a = ensure_matrix(a, "left operand")
    b = ensure_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    out = a @ b
    assert np.isfinite(out).all()
    return out


def transpose(a) -> np.ndarray:
    """Transpose, returned as a fresh row-major array."""
    return np.ascontiguousarray(ensure_matrix(a).T)


def hadamard(a, b) -> np.ndarray:
    """Elementwise product of two equal-shaped matrices."""
    a = ensure_matrix(a, "left operand")
    b = ensure_matrix(b, "right operand")
    if a.shape != b.shape:
        raise ShapeError(f"elementwise product needs equal shapes, got {a.shape} and {b.shape}")
    out = a * b
    assert np.isfinite(out).all()
    return out


def kronecker(a, b) -> np.ndarray:
    """Kronecker product: block matrix with (i, j) block a[i, j] * b."""
    a = ensure_matrix(a, "left operand")
    b = ensure_matrix(b, "right operand")
    out = (a[:, None, :, None] * b[None, :, None, :]).reshape(
        a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    )
    assert np.isfinite(out).all()
    return out
