"""Report rendering for reproduction runs: delimited results plus figures."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .repro import CaseResult


def write_report(results: list[CaseResult], directory: str | Path) -> tuple[Path, Path]:
    """Write cases.csv and summary.png into directory; returns their paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    csv_path = directory / "cases.csv"
    with open(csv_path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["case", "passed", "status", "elapsed_ms", "detail"])
        for r in results:
            writer.writerow([r.name, r.passed, r.status, f"{r.elapsed_ms:.1f}", r.detail])

    png_path = directory / "summary.png"
    fig, ax = plt.subplots(figsize=(8, 0.45 * max(len(results), 4) + 1.2))
    names = [r.name for r in results]
    times = [max(r.elapsed_ms, 0.01) for r in results]
    colors = ["#2a9d4e" if r.passed else "#c0392b" for r in results]
    ypos = range(len(results))
    ax.barh(ypos, times, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("elapsed (ms, log scale)")
    passed = sum(r.passed for r in results)
    ax.set_title(f"reproduction cases: {passed}/{len(results)} passed")
    for y, r in zip(ypos, results):
        ax.text(
            max(r.elapsed_ms, 0.01) * 1.15, y,
            "PASS" if r.passed else "FAIL",
            va="center", fontsize=8,
            color="#2a9d4e" if r.passed else "#c0392b",
        )
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return csv_path, png_path
