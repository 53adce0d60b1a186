"""Figure rendering for the CLI report path.

Opt-in via --plot-dir: figures land as PNG files next to the delimited
output and never touch the CSV/JSON bytes.  Uses the object interface of
matplotlib (no state machine, no display), so headless runs are safe.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from matplotlib.figure import Figure

from .core import HalfIntFamily, capital_lambda_grid


def _fig(title: str, xlabel: str, ylabel: str, height: float = 4.5):
    fig = Figure(figsize=(7.5, height), dpi=140)
    ax = fig.subplots()
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.grid(True, alpha=0.3)
    return fig, ax


def plot_eval(rows: Sequence[tuple], path: str) -> str:
    """Curves for the eval command: one line per populated column."""
    labels = {1: "lambda", 2: "Lambda", 3: "modified L", 4: "S"}
    fig, ax = _fig("function values", "x", "value")
    for idx, label in labels.items():
        pts = [(r[0], r[idx]) for r in rows if r[idx] is not None]
        if pts:
            ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label, linewidth=1.4)
    ax.legend()
    fig.savefig(path)
    return path


def plot_zeros(mu: float, entries: Sequence, path: str) -> str:
    """The unmodified function with the located zeros marked."""
    fam = HalfIntFamily(mu)
    last = entries[-1].eta if entries else 4.0 * math.pi
    xs = np.linspace(0.0, 1.05 * last, 800)
    vals = capital_lambda_grid(fam, xs)
    fig, ax = _fig(f"family mu = {mu:g}", "x", "Lambda")
    ax.plot(xs, vals, linewidth=1.2)
    ax.axhline(0.0, color="black", linewidth=0.8)
    if entries:
        ax.plot(
            [e.eta for e in entries], [0.0] * len(entries),
            "o", markersize=4, color="crimson", label="located zeros",
        )
        ax.legend()
    fig.savefig(path)
    return path


def plot_rayleigh(rows: Sequence[tuple], path: str) -> str:
    """Both power-sum routes on a log scale; visual agreement check."""
    ms = [r[0] for r in rows]
    fig, ax = _fig("reciprocal-square power sums", "m", "alpha^(2m)")
    ax.semilogy(ms, [r[1] for r in rows], "o-", label="newton-girard", linewidth=1.4)
    ax.semilogy(ms, [r[2] for r in rows], "s--", label="zero sum + tail", linewidth=1.2)
    ax.legend()
    fig.savefig(path)
    return path


def plot_verify(labeled_margins: Sequence[tuple[str, float, str]], path: str) -> str:
    """Worst margin per verification row on a symlog axis.

    labeled_margins: (label, worst_margin, status) triples; NaN margins
    (not-applicable rows) are drawn at zero in gray.
    """
    n = max(1, len(labeled_margins))
    fig, ax = _fig("worst certification margins", "margin", "", height=max(3.0, 0.18 * n))
    colors = {"pass": "seagreen", "fail": "crimson", "not_applicable": "silver"}
    ys = range(len(labeled_margins))
    vals = [0.0 if math.isnan(m) else m for _, m, _ in labeled_margins]
    cols = [colors.get(s, "steelblue") for _, _, s in labeled_margins]
    ax.barh(list(ys), vals, color=cols)
    ax.set_xscale("symlog", linthresh=1e-12)
    ax.set_yticks(list(ys))
    ax.set_yticklabels([lab for lab, _, _ in labeled_margins], fontsize=5)
    ax.invert_yaxis()
    fig.savefig(path)
    return path
