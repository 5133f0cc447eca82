"""Figures written next to the tabular/JSON output of the CLI."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STATUS_COLOURS = {"pass": "tab:green", "fail": "tab:red", "info": "tab:orange", "skip": "tab:gray"}


def _figure(width: float = 8.0, height: float | None = None):
    golden = (math.sqrt(5) - 1.0) / 2.0
    return plt.subplots(figsize=(width, height or width * golden))


def plot_table(rows: Sequence[tuple[Sequence[int], int]], kind: str, n: int, path) -> Path:
    """Bar chart of the values over all compositions, log scale."""
    fig, ax = _figure(max(6.0, min(24.0, 0.12 * len(rows))))
    values = [v for _, v in rows]
    ax.bar(range(len(rows)), values, color="tab:blue", width=0.8)
    ax.set_yscale("log")
    ax.set_xlabel("composition (lexicographic index)")
    ax.set_ylabel(f"{kind}_c")
    ax.set_title(f"type {kind} mixed Eulerian numbers, n = {n}")
    if len(rows) <= 40:
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels(["".join(map(str, c)) for c, _ in rows], rotation=90, fontsize=7)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_report(records: Sequence[dict], path) -> Path:
    """Horizontal bars of cases checked per identity, coloured by status."""
    fig, ax = _figure(8.0, max(3.0, 0.28 * len(records) + 1))
    labels = [r["identity"] for r in records]
    checked = [max(r["params"].get("checked", 0), 1) for r in records]
    colours = [STATUS_COLOURS.get(r["status"], "black") for r in records]
    ax.barh(range(len(records)), checked, color=colours)
    ax.set_yticks(range(len(records)))
    ax.set_yticklabels(labels, fontsize=7)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("cases checked")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in STATUS_COLOURS.values()]
    ax.legend(handles, list(STATUS_COLOURS), loc="lower right", fontsize=7)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
