#!/usr/bin/env python3
"""Download the multiclass benchmark files into the data directory.

Fetches iris.scale, segment.scale, shuttle.scale, shuttle.scale.t and
vehicle.scale from the LIBSVM dataset collection, then parses each file
and checks its (rows, features, classes) characteristics.

If the iris download fails (for example on a machine without network
access) and scikit-learn is installed, an equivalent iris.scale is
synthesized from scikit-learn's bundled copy of the classic iris
measurements: identical samples and labels, features scaled to [-1, 1]
the way the published file is. The training pipeline min-max rescales
per column anyway, so results are unaffected; a notice is printed.

Usage: python scripts/fetch_datasets.py [--dest DIR] [--only NAME ...]
"""

import argparse
import bz2
import sys
import urllib.error
import urllib.request
from pathlib import Path

BASE_URL = "https://www.csie.ntu.edu.tw/~cjlin/libsvmtools/datasets/multiclass/"
EXPECTED = {
    "iris.scale": (150, 4, 3),
    "segment.scale": (2310, 19, 7),
    "shuttle.scale": (43500, 9, 7),
    "shuttle.scale.t": (14500, 9, 7),
    "vehicle.scale": (846, 18, 4),
}


def download(name: str, dest: Path, timeout: float) -> bool:
    for suffix, decode in (("", lambda b: b), (".bz2", bz2.decompress)):
        url = BASE_URL + name + suffix
        try:
            with urllib.request.urlopen(url, timeout=timeout) as response:
                payload = decode(response.read())
        except (urllib.error.URLError, OSError) as exc:
            print(f"  {url}: {exc}")
            continue
        dest.write_bytes(payload)
        print(f"  fetched {name} ({len(payload)} bytes) from {url}")
        return True
    return False


def synthesize_iris(dest: Path) -> bool:
    try:
        from sklearn.datasets import load_iris
    except ImportError:
        return False
    bunch = load_iris()
    x = bunch["data"]
    lo = x.min(axis=0)
    span = x.max(axis=0) - lo
    scaled = -1.0 + 2.0 * (x - lo) / span
    lines = []
    for label, row in zip(bunch["target"], scaled):
        parts = [str(int(label) + 1)]
        parts += [f"{j + 1}:{v:.6g}" for j, v in enumerate(row) if v != 0.0]
        lines.append(" ".join(parts))
    dest.write_text("\n".join(lines) + "\n")
    print(f"  NOTE: synthesized {dest.name} from scikit-learn's bundled iris data")
    print("        (same 150 samples, labels 1-3, features scaled to [-1, 1])")
    return True


def check(path: Path, expected) -> bool:
    from qgsoftmax.datasets import parse_libsvm, remap_labels

    raw = parse_libsvm(path.read_text())
    _, class_indices = remap_labels(raw)
    got = (raw.n, raw.d, int(class_indices.max()) + 1)
    if got != expected:
        print(f"  WARNING: {path.name} parsed as (rows, features, classes)={got}, "
              f"expected {expected}")
        return False
    print(f"  verified {path.name}: rows={got[0]}, features={got[1]}, classes={got[2]}")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dest", default=Path(__file__).resolve().parent.parent / "data",
                        type=Path, help="target directory (default: <repo>/data)")
    parser.add_argument("--only", action="append", choices=sorted(EXPECTED),
                        help="fetch just these files (repeatable)")
    parser.add_argument("--timeout", type=float, default=30.0, help="per-request timeout")
    parser.add_argument("--force", action="store_true", help="re-download existing files")
    args = parser.parse_args()

    args.dest.mkdir(parents=True, exist_ok=True)
    names = args.only or sorted(EXPECTED)
    failures = []
    for name in names:
        target = args.dest / name
        print(f"{name}:")
        if target.exists() and not args.force:
            print(f"  already present at {target}")
            check(target, EXPECTED[name])
            continue
        ok = download(name, target, args.timeout)
        if not ok and name == "iris.scale":
            ok = synthesize_iris(target)
        if not ok:
            print(f"  FAILED to obtain {name}")
            failures.append(name)
            continue
        if not check(target, EXPECTED[name]):
            failures.append(name)
    if failures:
        print(f"\n{len(failures)} file(s) missing or wrong: {', '.join(failures)}")
        return 1
    print(f"\nall requested files ready under {args.dest}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
