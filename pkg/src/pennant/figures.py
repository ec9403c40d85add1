"""Matplotlib rendering for the report path.

Produces a raster/vector figure of a diagram for inclusion in reports.
Uses the object-oriented API with an Agg canvas directly, so it works
headless and never touches the global pyplot state.
"""

from __future__ import annotations

from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .diagram import PennantDiagram
from .render import SECTOR_FILL, SECTOR_STROKE, SEED_COLOR
from .weighting import logb


def render_figure(diagram: PennantDiagram, width_in: float = 12.0, height_in: float = 7.0) -> Figure:
    """Draw the pennant as a matplotlib Figure."""
    fig = Figure(figsize=(width_in, height_in))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot()

    xs = [p.x for p in diagram.points] + [diagram.seed_x]
    ys = [p.y for p in diagram.points] + [diagram.seed_y]
    xspan = max(xs) - min(xs) or 1.0
    yspan = max(ys) - min(ys) or 1.0
    ax.set_xlim(min(xs) - 0.05 * xspan, max(xs) + 0.05 * xspan)
    ax.set_ylim(min(ys) - 0.05 * yspan, max(ys) + 0.05 * yspan)

    base, n = diagram.params.log_base, diagram.n_docs
    y_ab = logb(n / (diagram.params.alpha * diagram.seed_df), base)
    y_bc = logb(n / (diagram.params.gamma * diagram.seed_df), base)
    ax.axhspan(y_ab, ax.get_ylim()[1], facecolor=SECTOR_FILL["A"], zorder=0)
    ax.axhspan(y_bc, y_ab, facecolor=SECTOR_FILL["B"], zorder=0)
    ax.axhspan(ax.get_ylim()[0], y_bc, facecolor=SECTOR_FILL["C"], zorder=0)

    for pt in diagram.points:
        color = SECTOR_STROKE[pt.sector]
        ax.plot(pt.x, pt.y, "o", ms=5, color=color, zorder=3)
        if pt.dominant:
            ax.plot(pt.x, pt.y, "o", ms=14, mfc="none", mec=color, zorder=3)
        ax.annotate(
            pt.term,
            (pt.x, pt.y),
            textcoords="offset points",
            xytext=(-7, -3),
            ha="right",
            fontsize=8,
            color=color,
            zorder=4,
        )

    ax.plot(diagram.seed_x, diagram.seed_y, "o", ms=8, color=SEED_COLOR, zorder=5)
    ax.plot(diagram.seed_x, diagram.seed_y, "o", ms=16, mfc="none", mec=SEED_COLOR, zorder=5)
    ax.annotate(
        diagram.seed,
        (diagram.seed_x, diagram.seed_y),
        textcoords="offset points",
        xytext=(-11, -4),
        ha="right",
        fontsize=10,
        fontweight="bold",
        color=SEED_COLOR,
        zorder=5,
    )

    ax.set_xlabel("tf weight of co-count with seed (cognitive effects →)")
    ax.set_ylabel("idf weight of total count (ease of processing →)")
    ax.set_title(f"pennant: {diagram.seed} (N={diagram.n_docs}, min_co={diagram.params.min_co})")
    return fig


def save_figure(diagram: PennantDiagram, path: str | Path, dpi: int = 150) -> None:
    """Render and write the figure; format follows the file extension."""
    fig = render_figure(diagram)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
