"""Render sweep tables to image files.

One-axis tables become line plots (one line per value column); two-axis
tables become heatmaps of the first value column.  The renderer only
looks at the table, so anything `run_sweep` or `run_preset` produces
can be drawn next to its CSV.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .sweep import SweepTable

__all__ = ["render_table"]


def render_table(table: SweepTable, path: str | Path,
                 title: str | None = None) -> Path:
    """Draw the table and save it; the format follows the file suffix."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    axis_names = table.header[:table.n_axes]
    value_names = table.header[table.n_axes:]

    if table.n_axes == 1:
        x = table.column(axis_names[0])
        for name in value_names:
            ax.plot(x, table.column(name), label=name)
        ax.set_xlabel(axis_names[0])
        ax.set_xlim(x[0], x[-1])
        if len(value_names) > 1:
            ax.legend()
        else:
            ax.set_ylabel(value_names[0])
    else:
        x = np.unique(table.column(axis_names[0]))
        y = np.unique(table.column(axis_names[1]))
        z = table.column(value_names[0]).reshape(len(x), len(y))
        mesh = ax.pcolormesh(x, y, z.T, shading="nearest", cmap="viridis")
        ax.set_xlabel(axis_names[0])
        ax.set_ylabel(axis_names[1])
        fig.colorbar(mesh, ax=ax, label=value_names[0])

    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
