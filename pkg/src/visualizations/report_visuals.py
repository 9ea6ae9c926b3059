"""
Report figures.

This module contains the two figures the CLI can save with --plot. Each
function draws a single chart on a fresh figure and returns it; nothing is
shown interactively.
"""

import logging

import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns

from ..utils.config import COLORS

logger = logging.getLogger(__name__)


def plot_level_cardinalities(sizes, title="Level cardinalities"):
    """
    Bar chart of |X_n| per level, one bar group per object.

    Args:
        sizes: DataFrame with columns object, n, size

    Returns:
        matplotlib Figure
    """
    base = [COLORS["primary"], COLORS["warning"], COLORS["success"], COLORS["neutral"]]
    palette = [base[k % len(base)] for k in range(sizes["object"].nunique())]
    fig, ax = plt.subplots(figsize=(12, 6))
    sns.barplot(data=sizes, x="n", y="size", hue="object", palette=palette, ax=ax)

    # Value labels on bars
    for container in ax.containers:
        ax.bar_label(container, fmt="%d", fontsize=10, color=COLORS["neutral"])

    ax.set_xlabel("Level n", fontsize=12, weight="bold")
    ax.set_ylabel("Elements", fontsize=12, weight="bold")
    ax.set_title(title, fontsize=14, weight="bold", pad=15)
    ax.spines['top'].set_visible(False)
    ax.spines['right'].set_visible(False)
    ax.set_axisbelow(True)
    fig.tight_layout()
    return fig


def plot_check_matrix(report, row="axiom", column="n", title="Checks passed"):
    """
    Heatmap of the pass fraction per (row, column) cell of a check report.

    Args:
        report: DataFrame with a boolean passed column

    Returns:
        matplotlib Figure
    """
    matrix = (
        report.assign(passed=report["passed"].astype(float))
        .pivot_table(index=row, columns=column, values="passed", aggfunc="mean")
    )
    fig, ax = plt.subplots(figsize=(12, max(3, 0.5 * len(matrix) + 2)))
    cmap = sns.blend_palette([COLORS["danger"], COLORS["warning"], COLORS["success"]], as_cmap=True)
    sns.heatmap(matrix, vmin=0, vmax=1, cmap=cmap, annot=True, fmt=".2f",
                linewidths=1, linecolor="white", cbar_kws={"label": "fraction passed"}, ax=ax)
    ax.set_xlabel(column, fontsize=12, weight="bold")
    ax.set_ylabel(row, fontsize=12, weight="bold")
    ax.set_title(title, fontsize=14, weight="bold", pad=15)
    fig.tight_layout()
    return fig


def save_report_figure(report, path):
    """
    Saves the figure that fits the report: level sizes when it has a
    "sizes" section, otherwise the first section with axiom and n columns.

    Returns:
        The path written, or None when no section can be drawn
    """
    frames = dict(report.sections)
    fig = None
    if "sizes" in frames and not frames["sizes"].empty:
        fig = plot_level_cardinalities(frames["sizes"], f"{report.command}: level cardinalities")
    else:
        for title, frame in report.sections:
            if {"axiom", "n", "passed"} <= set(frame.columns) and not frame.empty:
                fig = plot_check_matrix(frame, title=f"{report.command}: {title}")
                break
    if fig is None:
        logger.warning("no drawable section in the %s report", report.command)
        return None
    fig.savefig(path, dpi=150)
    plt.close(fig)
    logger.info("saved figure to %s", path)
    return path


def sizes_frame(objects):
    """Long-format sizes table from (name, TSimplicialObject) pairs."""
    rows = [
        {"object": name, "n": n, "size": len(level)}
        for name, X in objects
        for n, level in enumerate(X.levels)
    ]
    return pd.DataFrame(rows, columns=["object", "n", "size"])
