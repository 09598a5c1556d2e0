"""Figure rendering for the report-producing CLI paths.

Renders to files only (Agg backend); the CLI writes these alongside its
delimited text output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_hilbert_figure(counts, path: str, title: str = "Hilbert function") -> None:
    """Dimension-per-length plot for a quotient of a principal projective."""
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    xs = list(range(len(counts)))
    ax.plot(xs, list(counts), marker="o", markersize=3.5, linewidth=1.0)
    ax.set_xlabel("length m")
    ax.set_ylabel("dimension")
    ax.set_title(title)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_generator_degree_figure(dims, new_generators, path: str, title: str = "Generator degrees") -> None:
    """Per-degree ideal dimensions with the new-generator counts highlighted."""
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    degrees = sorted(dims)
    ax.bar(
        degrees,
        [dims[e] for e in degrees],
        color="#c8d6e5",
        label="ideal dimension",
    )
    ax.bar(
        degrees,
        [new_generators.get(e, 0) for e in degrees],
        color="#d63031",
        label="new generators",
    )
    ax.set_xlabel("degree e")
    ax.set_ylabel("dimension")
    ax.set_xticks(degrees)
    ax.set_title(title)
    ax.legend(frameon=False)
    ax.spines["right"].set_visible(False)
    ax.spines["top"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
