#!/usr/bin/env python3
"""Writes the classification datasets shipped under data/.

- iris_binary.csv: the 100 setosa/versicolor rows of the classic Iris data
  (via scikit-learn), labels +1 (setosa) and -1 (versicolor).
- synthetic16.csv: two 16-dimensional Gaussian blobs with labels 0/1, sized
  like a downsampled 4x4-image binary task. Fixed seed, fully reproducible.

Usage: python3 scripts/gen_datasets.py [outdir]
"""

import sys
from pathlib import Path

import numpy as np
from sklearn.datasets import load_iris


def write_iris(outdir: Path):
    iris = load_iris()
    rows = iris.data[:100]  # classes 0 (setosa) and 1 (versicolor)
    labels = ["+1" if t == 0 else "-1" for t in iris.target[:100]]
    path = outdir / "iris_binary.csv"
    with open(path, "w") as out:
        out.write("f0,f1,f2,f3,label\n")
        for row, label in zip(rows, labels):
            out.write(",".join(f"{x:.1f}" for x in row) + f",{label}\n")
    print(f"{path}: {len(rows)} rows")


def write_synthetic16(outdir: Path, n_per_class=30, seed=20240612):
    rng = np.random.default_rng(seed)
    # Mimics a downsampled image task: the class signal lives in the first
    # eight pixels, the rest are near-dead background (as the corners of real
    # downsampled digits are). Angles stay within a quarter turn so the
    # rotation encoding does not wrap.
    rows = []
    for label, sign in ((0, -1.0), (1, 1.0)):
        for _ in range(n_per_class):
            signal = sign * rng.uniform(0.3, 0.6, size=8) + rng.normal(0.0, 0.08, size=8)
            background = rng.normal(0.0, 0.02, size=8)
            rows.append((np.concatenate([signal, background]), label))
    order = rng.permutation(len(rows))
    path = outdir / "synthetic16.csv"
    with open(path, "w") as out:
        out.write(",".join(f"f{i}" for i in range(16)) + ",label\n")
        for i in order:
            s, label = rows[i]
            out.write(",".join(f"{x:.6f}" for x in s) + f",{label}\n")
    print(f"{path}: {len(rows)} rows")


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("data")
    outdir.mkdir(parents=True, exist_ok=True)
    write_iris(outdir)
    write_synthetic16(outdir)


if __name__ == "__main__":
    main()
