"""Shared fixtures: random instances, synthetic datasets, benchmark files.

The real LIBSVM benchmark files are looked up under ``data/`` at the repo
root (override with the QGSOFTMAX_DATA environment variable). Tests that
need them skip with a pointer to scripts/fetch_datasets.py when a file is
absent. Synthetic datasets with the same shapes are generated in-process
so the training mechanics are always exercised.
"""

import os
from pathlib import Path

import numpy as np
import pytest

from qgsoftmax.datasets import RawDataset, normalize_and_bias, one_hot

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = Path(os.environ.get("QGSOFTMAX_DATA", REPO_ROOT / "data"))

# name -> (rows, features, classes)
BENCHMARK_CHARACTERISTICS = {
    "iris.scale": (150, 4, 3),
    "segment.scale": (2310, 19, 7),
    "shuttle.scale": (43500, 9, 7),
    "shuttle.scale.t": (14500, 9, 7),
    "vehicle.scale": (846, 18, 4),
}


def require_benchmark_file(name: str) -> Path:
    path = DATA_DIR / name
    if not path.is_file():
        pytest.skip(
            f"benchmark file {name} not found under {DATA_DIR}; "
            "run scripts/fetch_datasets.py to download it"
        )
    return path


@pytest.fixture
def benchmark_file():
    return require_benchmark_file


def make_overlapping_raw(n, d, c, seed=42, noise=0.45, spread=0.35) -> RawDataset:
    """Non-separable class blobs in [0, 1]^d with labels 1..c.

    The overlap matters: perfectly separable data lets the unpreconditioned
    baselines drive the log-likelihood toward 0 no matter how wild their
    steps are, which is not how the benchmark datasets behave.
    """
    rng = np.random.default_rng(seed)
    centers = 0.5 + spread * (rng.random((c, d)) - 0.5)
    labels = np.arange(n) % c
    rng.shuffle(labels)
    feats = np.clip(centers[labels] + noise * rng.standard_normal((n, d)), 0.0, 1.0)
    return RawDataset(labels=(labels + 1).astype(np.float64), features=feats)


def random_model_instance(rng, n, d, c, zero_w=False):
    """Random (x, labels, y_onehot, w): [0, 1] features plus bias column."""
    x = np.hstack([np.ones((n, 1)), rng.random((n, d))])
    labels = rng.integers(0, c, n)
    w = np.zeros((c, 1 + d)) if zero_w else rng.standard_normal((c, 1 + d))
    return x, labels, one_hot(labels, c), w


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


@pytest.fixture(scope="session")
def vehicle_like():
    return normalize_and_bias(make_overlapping_raw(846, 18, 4))


@pytest.fixture(scope="session")
def segment_like():
    return normalize_and_bias(make_overlapping_raw(2310, 19, 7))
