"""Figures for the search report, written next to the JSON-lines output."""
from __future__ import annotations

from collections import Counter
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _style(ax, title, xlabel, ylabel):
    ax.set_title(title, fontsize=11)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)


def plot_class_sizes(result, path):
    sizes = Counter(len(c.members) for c in result.search.classes)
    fig, ax = plt.subplots(figsize=(5, 3.2))
    if sizes:
        xs = sorted(sizes)
        ax.bar([str(x) for x in xs], [sizes[x] for x in xs], color="0.35")
    else:
        ax.text(0.5, 0.5, "no psi-cospectral classes", ha="center", va="center",
                transform=ax.transAxes)
    _style(ax, "Classes of graphs with equal psi", "class size", "classes")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_verdicts(result, path):
    summary = result.summary()
    kinds = summary["verdict_kinds"]
    fig, ax = plt.subplots(figsize=(5, 3.2))
    if kinds:
        labels = list(kinds)
        colors = ["tab:blue" if k == "degree-similar" else "tab:red" for k in labels]
        ax.barh(labels, [kinds[k] for k in labels], color=colors)
    else:
        ax.text(0.5, 0.5, "no pairs classified", ha="center", va="center",
                transform=ax.transAxes)
    _style(ax, "Pair verdicts (equal psi)", "pairs", "")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_screening(result, path):
    s = result.summary()
    stages = ["graphs", "candidate_buckets", "psi_classes", "pairs", "not_degree_similar_pairs"]
    labels = ["graphs", "fp buckets", "psi classes", "pairs", "not deg-sim"]
    vals = [s[k] for k in stages]
    fig, ax = plt.subplots(figsize=(5.5, 3.2))
    ax.bar(labels, [max(v, 0.8) for v in vals], color="0.5")
    ax.set_yscale("log")
    for i, v in enumerate(vals):
        ax.text(i, max(v, 0.8), str(v), ha="center", va="bottom", fontsize=8)
    _style(ax, "Screening funnel", "", "count (log)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_search_figures(result, outdir) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    paths = [out / "class_sizes.png", out / "verdicts.png", out / "screening.png"]
    plot_class_sizes(result, paths[0])
    plot_verdicts(result, paths[1])
    plot_screening(result, paths[2])
    return paths
