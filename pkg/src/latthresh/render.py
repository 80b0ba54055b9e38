"""Matplotlib rendering of Hasse diagrams to image files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .finite_lattice import FiniteLattice


def _ranks(lattice: FiniteLattice) -> dict[str, int]:
    # Longest chain from the bottom, computed over covering edges.
    covers = lattice.covers()
    rank = {e: 0 for e in lattice.elements}
    changed = True
    while changed:
        changed = False
        for a, b in covers:
            if rank[b] < rank[a] + 1:
                rank[b] = rank[a] + 1
                changed = True
    return rank


def hasse_positions(lattice: FiniteLattice) -> dict[str, tuple[float, float]]:
    rank = _ranks(lattice)
    layers: dict[int, list[str]] = {}
    for e in lattice.elements:
        layers.setdefault(rank[e], []).append(e)
    pos = {}
    for r, layer in layers.items():
        layer.sort()
        width = len(layer)
        for i, e in enumerate(layer):
            pos[e] = (i - (width - 1) / 2.0, float(r))
    return pos


def save_hasse_figure(lattice: FiniteLattice, path: str, title: str | None = None) -> None:
    """Draw the Hasse diagram (covering edges, labelled nodes) and save it."""
    pos = hasse_positions(lattice)
    fig, ax = plt.subplots(figsize=(max(4, len(lattice) * 0.6), max(3, len(pos) * 0.4)))
    for a, b in lattice.covers():
        (x0, y0), (x1, y1) = pos[a], pos[b]
        ax.plot([x0, x1], [y0, y1], color="0.5", zorder=1)
    for e, (x, y) in pos.items():
        ax.scatter([x], [y], s=300, color="white", edgecolors="black", zorder=2)
        ax.annotate(e, (x, y), ha="center", va="center", fontsize=8, zorder=3)
    ax.set_axis_off()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
