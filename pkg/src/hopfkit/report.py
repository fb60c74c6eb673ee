"""Figure and table rendering for classification reports.

Writes a delimited invariant table plus two summary figures into a target
directory.  The Agg backend is forced at import time so rendering works in
headless runs.
"""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .catalog import ClassificationReport

CSV_NAME = "fingerprints.csv"
PROFILE_FIGURE = "coradical_profiles.png"
INVARIANT_FIGURE = "invariant_summary.png"

_CSV_FIELDS = (
    "entry",
    "p",
    "dim",
    "dim_primitives",
    "commutative",
    "cocommutative",
    "local",
    "min_alg_generators",
    "coradical_dims",
)


def write_fingerprint_csv(report: ClassificationReport, path: str) -> None:
    """One row per catalog entry, aligned with all_ids order."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(_CSV_FIELDS)
        for label, fp in report.fingerprints:
            writer.writerow(
                [
                    label,
                    fp.p,
                    fp.dim,
                    fp.dim_primitives,
                    str(fp.commutative).lower(),
                    str(fp.cocommutative).lower(),
                    str(fp.local).lower(),
                    "" if fp.min_alg_generators is None else fp.min_alg_generators,
                    " ".join(str(d) for d in fp.coradical_dims),
                ]
            )


def plot_coradical_profiles(report: ClassificationReport, path: str) -> None:
    """Filtration growth curves, one panel per family.

    Filtrations that stabilize below the full dimension (the non-connected
    entries) are drawn dashed.
    """
    by_family = {}
    for label, fp in report.fingerprints:
        by_family.setdefault(label.split("-")[0], []).append((label, fp))
    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex="col")
    for ax, family in zip(axes.flat, ("D1", "D2", "L1", "L2")):
        for label, fp in by_family[family]:
            dims = fp.coradical_dims
            style = "-" if dims[-1] == fp.dim else "--"
            ax.plot(range(len(dims)), dims, style, marker="o", ms=3, label=label)
        ax.set_title(f"family {family} (p = {report.p})")
        ax.set_xlabel("filtration step")
        ax.set_ylabel("dimension")
        ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_invariant_summary(report: ClassificationReport, path: str) -> None:
    """Primitive dimensions and minimal generator counts as grouped bars."""
    labels = [label for label, _ in report.fingerprints]
    prim = [fp.dim_primitives for _, fp in report.fingerprints]
    gens = [np.nan if fp.min_alg_generators is None else fp.min_alg_generators
            for _, fp in report.fingerprints]
    x = np.arange(len(labels))
    fig, ax = plt.subplots(figsize=(10, 3.5))
    ax.bar(x - 0.2, prim, width=0.4, label="dim primitives")
    ax.bar(x + 0.2, gens, width=0.4, label="min generators")
    ax.set_xticks(x)
    ax.set_xticklabels(labels, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("count")
    ax.set_title(f"catalog invariants at p = {report.p}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(report: ClassificationReport, outdir: str) -> list[str]:
    """Render the CSV and both figures into outdir, returning written paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []
    for name, render in (
        (CSV_NAME, write_fingerprint_csv),
        (PROFILE_FIGURE, plot_coradical_profiles),
        (INVARIANT_FIGURE, plot_invariant_summary),
    ):
        path = os.path.join(outdir, name)
        render(report, path)
        written.append(path)
    return written
