"""Benchmark CLI: train every optimizer of a suite and emit per-iteration CSVs.

For each dataset the runner loads, scales and one-hot encodes once, builds
the preconditioner once, trains every optimizer of the requested suite from
the same all-zero start, then writes one LOSS and one PREC file per suite:

    <dataset>_<metric>_<suite>.csv

The adagrad suite columns are ``Iterations,SFHNewton,Adagrad,AdagradQG``
and the nag suite columns ``Iterations,SFHN,NAG,NAGQG``. Values carry six
significant digits, lines end in LF, and row 0 is the shared untrained
state, so identical inputs reproduce the files byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np

from .datasets import load_dataset, one_hot
from .optimizers import TrainConfig, train
from .precond import build_preconditioner

__all__ = ["SUITE_COLUMNS", "ExperimentSpec", "ExperimentRecord", "ExperimentResult",
           "run_experiment", "emit_csv", "main"]

# suite name -> ordered (optimizer kind, CSV column key) pairs
SUITE_COLUMNS = {
    "adagrad": (("SFHNewton", "SFHNewton"), ("Adagrad", "Adagrad"), ("AdagradQG", "AdagradQG")),
    "nag": (("SFHNewton", "SFHN"), ("NAG", "NAG"), ("NAGQG", "NAGQG")),
}


@dataclass
class ExperimentSpec:
    """One dataset's benchmark configuration."""

    dataset_path: Union[str, Path]
    iterations: int = 30
    suite: str = "all"  # "adagrad", "nag", or "all"
    epsilon: float = 1e-8
    base_lr: float = 0.01
    out_dir: Union[str, Path] = "."
    n_features: Optional[int] = None

    def __post_init__(self):
        if self.suite not in ("adagrad", "nag", "all"):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")

    @property
    def suites(self) -> tuple:
        return ("adagrad", "nag") if self.suite == "all" else (self.suite,)

    @property
    def kinds(self) -> tuple:
        seen = []
        for suite in self.suites:
            for kind, _ in SUITE_COLUMNS[suite]:
                if kind not in seen:
                    seen.append(kind)
        return tuple(seen)


@dataclass
class ExperimentRecord:
    """Aligned metrics for one iteration across every optimizer run."""

    iteration: int
    loss_by_optimizer: Dict[str, float] = field(default_factory=dict)
    prec_by_optimizer: Dict[str, float] = field(default_factory=dict)


@dataclass
class ExperimentResult:
    records: List[ExperimentRecord]
    final_weights: Dict[str, np.ndarray]
    n: int
    c: int
    d: int


def run_experiment(spec: ExperimentSpec) -> ExperimentResult:
    """Train every optimizer the spec's suite needs on one dataset."""
    try:
        dataset = load_dataset(spec.dataset_path, n_features=spec.n_features)
    except OSError as exc:
        raise OSError(f"{spec.dataset_path}: {exc}") from exc
    except ValueError as exc:  # includes ParseError
        raise ValueError(f"{spec.dataset_path}: {exc}") from exc
    y_onehot = one_hot(dataset.labels, dataset.c)
    precond = build_preconditioner(dataset.x, dataset.c, spec.epsilon)

    records = [ExperimentRecord(iteration=i) for i in range(spec.iterations + 1)]
    final_weights: Dict[str, np.ndarray] = {}
    for kind in spec.kinds:
        config = TrainConfig(kind=kind, iterations=spec.iterations,
                             epsilon=spec.epsilon, base_lr=spec.base_lr)
        w, run_records = train(dataset, y_onehot, config, precond=precond)
        final_weights[kind] = w
        for rec, run_rec in zip(records, run_records):
            rec.loss_by_optimizer[kind] = run_rec.loss
            rec.prec_by_optimizer[kind] = run_rec.accuracy
    return ExperimentResult(records=records, final_weights=final_weights,
                            n=dataset.n, c=dataset.c, d=dataset.x.shape[1] - 1)


def _fmt(value: float) -> str:
    return format(value, ".6g")


def emit_csv(records: List[ExperimentRecord], metric: str, suite: str,
             out_dir: Union[str, Path], dataset_name: str) -> Path:
    """Write one metric's CSV for one suite; returns the file path."""
    if not records:
        raise ValueError("no records to write")
    if metric not in ("LOSS", "PREC"):
        raise ValueError(f"unknown metric {metric!r}")
    columns = SUITE_COLUMNS[suite]
    path = Path(out_dir) / f"{dataset_name}_{metric}_{suite}.csv"
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("Iterations," + ",".join(key for _, key in columns) + "\n")
        for rec in records:
            values = rec.loss_by_optimizer if metric == "LOSS" else rec.prec_by_optimizer
            handle.write(str(rec.iteration) + ","
                         + ",".join(_fmt(values[kind]) for kind, _ in columns) + "\n")
    return path


def _dump_weights(path: Path, blocks) -> None:
    # One file, one "# <dataset> <optimizer>" comment per block,
    # rows = classes, space-separated entries.
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for dataset_name, kind, w in blocks:
            handle.write(f"# {dataset_name} {kind}\n")
            for row in w:
                handle.write(" ".join(repr(float(v)) for v in row) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgsoftmax",
        description="Benchmark quadratic-gradient softmax training on LIBSVM datasets.",
    )
    parser.add_argument("--dataset", action="append", required=True, metavar="PATH",
                        help="LIBSVM file to train on (repeatable)")
    parser.add_argument("--iterations", type=int, default=30, help="full-batch iterations")
    parser.add_argument("--suite", choices=("adagrad", "nag", "all"), default="all",
                        help="optimizer suite to run")
    parser.add_argument("--epsilon", type=float, default=1e-8,
                        help="small positive constant of the preconditioner/denominator")
    parser.add_argument("--base-lr", type=float, default=0.01,
                        help="learning rate of the plain baselines")
    parser.add_argument("--out", default=".", metavar="DIR", help="output directory for CSVs")
    parser.add_argument("--features", type=int, default=None, metavar="N",
                        help="minimum feature count when files underreport the dimension")
    parser.add_argument("--dump-weights", default=None, metavar="PATH",
                        help="write the final weights of every run to one plain-text file")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create output directory {out_dir}: {exc}", file=sys.stderr)
        return 1

    summary_rows = []
    weight_blocks = []
    try:
        for dataset_path in args.dataset:
            spec = ExperimentSpec(
                dataset_path=dataset_path,
                iterations=args.iterations,
                suite=args.suite,
                epsilon=args.epsilon,
                base_lr=args.base_lr,
                out_dir=out_dir,
                n_features=args.features,
            )
            result = run_experiment(spec)
            name = Path(dataset_path).name
            for suite in spec.suites:
                for metric in ("LOSS", "PREC"):
                    emit_csv(result.records, metric, suite, out_dir, name)
            last = result.records[-1]
            for kind in spec.kinds:
                summary_rows.append((name, kind, last.loss_by_optimizer[kind],
                                     last.prec_by_optimizer[kind]))
                weight_blocks.append((name, kind, result.final_weights[kind]))
            print(f"{name}: n={result.n}, d={result.d}, c={result.c}, "
                  f"iterations={spec.iterations}, suites={','.join(spec.suites)}")

        print()
        print(f"{'dataset':<24} {'optimizer':<12} {'LOSS':>14} {'PREC':>10}")
        for name, kind, loss, prec in summary_rows:
            print(f"{name:<24} {kind:<12} {_fmt(loss):>14} {_fmt(prec):>10}")

        if args.dump_weights:
            _dump_weights(Path(args.dump_weights), weight_blocks)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
