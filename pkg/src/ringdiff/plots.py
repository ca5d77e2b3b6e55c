"""Matplotlib rendering of the figures emitted alongside CSV output."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

# stable element ids and no timestamps, so repeated runs emit identical SVG
matplotlib.rcParams["svg.hashsalt"] = "ringdiff"

_FIGSIZE = (6.4, 4.0)


def save_series_figure(path, x, curves, *, xlabel, ylabel, title):
    """Render line series (label, y-array) against a common x-axis to SVG."""
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for label, y in curves:
        ax.plot(x, y, lw=1.0, label=label if label else None)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(curves) > 1 and any(label for label, _ in curves):
        ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
