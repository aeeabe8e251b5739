"""LIBSVM multiclass file loading and preprocessing.

The pipeline is: parse the sparse text format into a dense feature matrix,
remap the original labels to contiguous class indices by ascending value,
min-max scale every feature into [0, 1], prepend the all-ones bias column,
and (separately) one-hot encode the class indices.

Feature indices in the text format are 1-based and strictly increasing per
line; absent indices are exactly 0. Lines whose first non-blank character
is '#' are comments. Both LF and CRLF line endings are accepted.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, TextIO, Union

import numpy as np

from .errors import ParseError, ShapeError

__all__ = [
    "RawDataset",
    "Dataset",
    "parse_libsvm",
    "dump_libsvm",
    "remap_labels",
    "normalize_and_bias",
    "one_hot",
    "load_dataset",
]


@dataclass
class RawDataset:
    """Parsed but unprocessed data: original labels and dense features."""

    labels: np.ndarray  # (n,) original numeric labels
    features: np.ndarray  # (n, d) dense, absent entries exactly 0

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]


@dataclass
class Dataset:
    """Training-ready data: [0, 1] features with bias column, class indices."""

    x: np.ndarray  # (n, 1 + d); column 0 is all ones
    labels: np.ndarray  # (n,) class indices in [0, c)
    c: int
    norm_bounds: np.ndarray  # (d, 2) per-feature (min, max) used for scaling
    label_mapping: dict = field(default_factory=dict)  # original label -> class index

    @property
    def n(self) -> int:
        return self.x.shape[0]


def _lines(source: Union[str, bytes, TextIO, Iterable[str]]) -> Iterable[str]:
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        return io.StringIO(source)
    return source


def parse_libsvm(source, n_features: Optional[int] = None) -> RawDataset:
    """Parse LIBSVM text into a RawDataset.

    Parameters
    ----------
    source : str, bytes, file object, or iterable of lines
        The text to parse.
    n_features : int, optional
        Lower bound on the feature count; the result has
        ``max(n_features, largest index seen)`` columns.
    """
    labels = []
    rows = []
    max_index = 0
    for lineno, line in enumerate(_lines(source), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        try:
            label = float(tokens[0])
        except ValueError:
            raise ParseError(lineno, f"non-numeric label {tokens[0]!r}") from None
        entries = []
        prev_index = 0
        for token in tokens[1:]:
            idx_text, sep, val_text = token.partition(":")
            if not sep:
                raise ParseError(lineno, f"malformed feature token {token!r}")
            try:
                index = int(idx_text)
            except ValueError:
                raise ParseError(lineno, f"non-integer feature index {idx_text!r}") from None
            if index < 1:
                raise ParseError(lineno, f"feature index {index} out of range (indices are 1-based)")
            if index <= prev_index:
                raise ParseError(
                    lineno, f"feature index {index} not strictly increasing after {prev_index}"
                )
            try:
                value = float(val_text)
            except ValueError:
                raise ParseError(lineno, f"non-numeric feature value {val_text!r}") from None
            entries.append((index, value))
            prev_index = index
        labels.append(label)
        rows.append(entries)
        max_index = max(max_index, prev_index)

    d = max(max_index, n_features or 0)
    features = np.zeros((len(rows), d))
    for i, entries in enumerate(rows):
        for index, value in entries:
            features[i, index - 1] = value
    return RawDataset(labels=np.asarray(labels, dtype=np.float64), features=features)


def dump_libsvm(raw: RawDataset, target: Union[str, Path, TextIO]) -> None:
    """Write a RawDataset back out in LIBSVM text form (zeros omitted)."""
    own = isinstance(target, (str, Path))
    stream = open(target, "w", newline="\n") if own else target
    try:
        for label, row in zip(raw.labels, raw.features):
            lab = str(int(label)) if float(label).is_integer() else repr(float(label))
            parts = [lab]
            for j, value in enumerate(row):
                if value != 0.0:
                    parts.append(f"{j + 1}:{float(value)!r}")
            stream.write(" ".join(parts) + "\n")
    finally:
        if own:
            stream.close()


def remap_labels(raw: RawDataset):
    """Map the distinct original labels, in ascending order, onto 0..c-1.

    Returns (mapping, class_indices); rejects single-class input.
    """
    uniques = np.unique(raw.labels)
    if uniques.size < 2:
        raise ValueError(f"need at least 2 distinct labels, got {uniques.size}")
    mapping = {float(orig): i for i, orig in enumerate(uniques)}
    class_indices = np.searchsorted(uniques, raw.labels).astype(np.int64)
    return mapping, class_indices


def normalize_and_bias(raw: RawDataset, bounds: Optional[np.ndarray] = None) -> Dataset:
    """Min-max scale features into [0, 1] and prepend the bias column.

    With ``bounds`` given (held-out data), the supplied per-feature
    (min, max) pairs are applied and out-of-range results are clamped to
    [0, 1]. Otherwise bounds come from the data itself. Constant features
    scale to 0.
    """
    if raw.n == 0:
        raise ValueError("dataset is empty")
    if bounds is None:
        bounds = np.column_stack([raw.features.min(axis=0), raw.features.max(axis=0)])
    else:
        bounds = np.asarray(bounds, dtype=np.float64)
        if bounds.shape != (raw.d, 2):
            raise ShapeError(f"expected bounds of shape ({raw.d}, 2), got {bounds.shape}")
    lo = bounds[:, 0]
    span = bounds[:, 1] - lo
    safe_span = np.where(span > 0, span, 1.0)
    scaled = np.where(span > 0, (raw.features - lo) / safe_span, 0.0)
    scaled = np.clip(scaled, 0.0, 1.0)
    x = np.hstack([np.ones((raw.n, 1)), scaled])
    mapping, class_indices = remap_labels(raw)
    return Dataset(
        x=x,
        labels=class_indices,
        c=len(mapping),
        norm_bounds=bounds,
        label_mapping=mapping,
    )


def one_hot(labels, c: int) -> np.ndarray:
    """Encode class indices as an (n, c) 0/1 matrix with one 1 per row."""
    labels = np.asarray(labels, dtype=np.int64)
    if labels.size and (labels.min() < 0 or labels.max() >= c):
        bad = labels.min() if labels.min() < 0 else labels.max()
        raise ValueError(f"label {bad} outside [0, {c})")
    out = np.zeros((labels.shape[0], c))
    out[np.arange(labels.shape[0]), labels] = 1.0
    return out


def load_dataset(
    path: Union[str, Path],
    n_features: Optional[int] = None,
    bounds: Optional[np.ndarray] = None,
) -> Dataset:
    """Parse a LIBSVM file and return it normalized with the bias column."""
    with open(path, "r", encoding="utf-8") as handle:
        raw = parse_libsvm(handle, n_features=n_features)
    return normalize_and_bias(raw, bounds=bounds)
