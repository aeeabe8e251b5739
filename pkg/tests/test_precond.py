import numpy as np
import pytest

from qgsoftmax.linalg import hadamard, kronecker
from qgsoftmax.errors import ShapeError
from qgsoftmax.model import logits, softmax_rows
from qgsoftmax.precond import Preconditioner, build_preconditioner, quadratic_gradient
from qgsoftmax.verify import assemble_hessian, min_eigenvalue_symmetric
from conftest import random_model_instance


def scalar_loop_preconditioner(x, c, epsilon):
    """Brute-force re-evaluation of the construction with plain scalar loops.

    Independent of the production code path; the summation order (samples
    in file order, then bound-matrix rows in ascending order) is the same,
    so results must agree bit for bit.
    """
    rows = np.asarray(x, dtype=np.float64).tolist()
    n = len(rows)
    m = len(rows[0])
    xtx = [[0.0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            acc = 0.0
            for k in range(n):
                acc += rows[k][a] * rows[k][b]
            xtx[a][b] = acc
    hbar = [[-0.5 * xtx[i][j] for j in range(m)] for i in range(m)]
    bbar = [[0.0] * m for _ in range(c)]
    for j in range(m):
        bbar[0][j] = epsilon
        for i in range(m):
            bbar[0][j] += abs(hbar[i][j])
        for i in range(1, c):
            bbar[i][j] = bbar[0][j]
        for i in range(c):
            bbar[i][j] = 1.0 / bbar[i][j]
    return np.array(bbar)


class TestBuild:
    def test_two_sample_hand_computation(self):
        x = np.array([[1.0, 0.5], [1.0, 1.0]])
        pre = build_preconditioner(x, c=3, epsilon=1e-8)
        # X^T X = [[2, 1.5], [1.5, 1.25]], absolute half-column sums 1.75 and 1.375
        assert pre.b[0, 0] == 1.0 / ((1e-8 + 1.0) + 0.75)
        assert pre.b[0, 1] == 1.0 / ((1e-8 + 0.75) + 0.625)
        assert pre.b[0] == pytest.approx([1 / 1.75, 1 / 1.375], rel=1e-7)

    def test_single_sample_single_column(self):
        pre = build_preconditioner(np.array([[1.0]]), c=4, epsilon=1e-3)
        assert pre.b.shape == (4, 1)
        assert np.all(pre.b == 1.0 / (1e-3 + 0.5))

    def test_rows_replicated_and_positive(self, rng):
        x = np.hstack([np.ones((17, 1)), rng.random((17, 5))])
        pre = build_preconditioner(x, c=6)
        assert np.all(pre.b > 0)
        for i in range(6):
            assert np.array_equal(pre.b[i], pre.b[0])

    def test_matches_scalar_loop_reconstruction_bitwise(self, rng):
        for _ in range(10):
            n, d, c = int(rng.integers(1, 40)), int(rng.integers(0, 6)), int(rng.integers(2, 7))
            x = np.hstack([np.ones((n, 1)), rng.random((n, d))])
            pre = build_preconditioner(x, c, epsilon=1e-8)
            assert np.array_equal(pre.b, scalar_loop_preconditioner(x, c, 1e-8))

    def test_reciprocal_dominates_diagonal_curvature(self, rng):
        # 1/b - epsilon is the absolute column sum of -X^T X / 2, which is
        # at least the column's own diagonal entry, itself nonnegative.
        x = np.hstack([np.ones((30, 1)), rng.random((30, 4))])
        pre = build_preconditioner(x, c=3, epsilon=1e-8)
        gram = x.T @ x
        recovered = 1.0 / pre.b[0] - 1e-8
        diag = 0.5 * np.diag(gram)
        assert np.all(recovered >= diag - 1e-9)
        assert np.all(diag >= 0)

    def test_epsilon_must_be_positive(self):
        with pytest.raises(ValueError, match="positive"):
            build_preconditioner(np.ones((2, 2)), c=2, epsilon=0.0)


class TestQuadraticGradient:
    def test_zero_gradient(self, rng):
        x = np.hstack([np.ones((5, 1)), rng.random((5, 2))])
        pre = build_preconditioner(x, c=3)
        assert np.array_equal(quadratic_gradient(pre, np.zeros((3, 3))), np.zeros((3, 3)))

    def test_all_ones_coefficients_pass_through(self, rng):
        pre = Preconditioner(b=np.ones((3, 4)), epsilon=1e-8)
        g = rng.standard_normal((3, 4))
        assert np.array_equal(quadratic_gradient(pre, g), g)

    def test_is_elementwise_product(self, rng):
        x = np.hstack([np.ones((8, 1)), rng.random((8, 3))])
        pre = build_preconditioner(x, c=2)
        g = rng.standard_normal((2, 4))
        assert np.array_equal(quadratic_gradient(pre, g), hadamard(pre.b, g))

    def test_preserves_gradient_signs(self, rng):
        x = np.hstack([np.ones((8, 1)), rng.random((8, 3))])
        pre = build_preconditioner(x, c=2)
        g = rng.standard_normal((2, 4))
        g[0, 0] = 0.0
        assert np.array_equal(np.sign(quadratic_gradient(pre, g)), np.sign(g))

    def test_shape_mismatch(self, rng):
        x = np.hstack([np.ones((5, 1)), rng.random((5, 2))])
        pre = build_preconditioner(x, c=3)
        with pytest.raises(ShapeError):
            quadratic_gradient(pre, np.zeros((2, 3)))


class TestCurvatureBound:
    def test_shifted_hessian_is_positive_semidefinite(self, rng):
        # (1/2) I_c kron X^T X added to the log-likelihood Hessian must not
        # have eigenvalues below roundoff level: the fixed bound really is
        # a lower bound, which is what guarantees monotone ascent.
        for _ in range(8):
            n, d, c = int(rng.integers(2, 7)), int(rng.integers(1, 3)), int(rng.integers(2, 4))
            x, _, _, w = random_model_instance(rng, n, d, c)
            hess = assemble_hessian(x, softmax_rows(logits(x, w)))
            shifted = 0.5 * kronecker(np.eye(c), x.T @ x) + hess
            assert min_eigenvalue_symmetric(shifted) >= -1e-8
