"""Quadratic-gradient training for multinomial (softmax) logistic regression.

The package trains softmax regression by full-batch ascent on the
log-likelihood, preconditioned elementwise by the reciprocal absolute
column sums of the fixed curvature bound -(1/2) X^T X. It ships the
enhanced NAG and Adagrad optimizers built on that quadratic gradient, the
plain baselines they are compared against, a LIBSVM loader, brute-force
verification oracles, a scikit-learn style estimator, and a benchmark CLI.
"""

from .datasets import (
    Dataset,
    RawDataset,
    dump_libsvm,
    load_dataset,
    normalize_and_bias,
    one_hot,
    parse_libsvm,
    remap_labels,
)
from .errors import ParseError, ShapeError, SingularMatrixError
from .estimator import SoftmaxRegression
from .model import gradient, log_likelihood, logits, predict, predict_accuracy, softmax_rows
from .optimizers import KINDS, IterationRecord, TrainConfig, make_optimizer, train
from .precond import Preconditioner, build_preconditioner, quadratic_gradient

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "RawDataset",
    "parse_libsvm",
    "dump_libsvm",
    "remap_labels",
    "normalize_and_bias",
    "one_hot",
    "load_dataset",
    "ShapeError",
    "ParseError",
    "SingularMatrixError",
    "SoftmaxRegression",
    "logits",
    "softmax_rows",
    "log_likelihood",
    "gradient",
    "predict",
    "predict_accuracy",
    "Preconditioner",
    "build_preconditioner",
    "quadratic_gradient",
    "KINDS",
    "TrainConfig",
    "IterationRecord",
    "make_optimizer",
    "train",
    "__version__",
]
