"""
Configuration and constants for the T-simplicial toolkit.

This module contains:
- Truncation depth and enumeration bounds shared by every construction
- Logging setup used by the command-line front end
- Color scheme and Matplotlib settings for report figures
- Display options for pandas report tables
"""

import logging

import pandas as pd
import matplotlib.pyplot as plt
import seaborn as sns

# Truncation depth of every tower unless --depth overrides it
DEFAULT_DEPTH = 4

# Exhaustive checks over Δ(m, n) run for m, n <= SIMPLEX_BOUND
SIMPLEX_BOUND = 5

# Candidate assignments an enumeration may visit before giving up
ENUMERATION_LIMIT = 200_000

# Longest list element generated when checking the list monad
LIST_LENGTH_BOUND = 2

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"


def configure_logging(level="WARNING"):
    """
    Routes library logging to stderr.

    Reports go to stdout and carry no timing, so they stay byte-identical
    between runs; elapsed times are logged instead.

    Args:
        level: Logging level name or number

    Returns:
        The configured root logger
    """
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
    return logging.getLogger()


# Global visual style - clean, presentation-ready
sns.set_style("white")
plt.rcParams["figure.figsize"] = (12, 6)
plt.rcParams["figure.facecolor"] = "white"
plt.rcParams["axes.facecolor"] = "white"
plt.rcParams["axes.titlesize"] = 14
plt.rcParams["axes.labelsize"] = 12
plt.rcParams["axes.titleweight"] = "bold"
plt.rcParams["axes.grid"] = True
plt.rcParams["grid.color"] = "#f0f0f0"
plt.rcParams["grid.alpha"] = 0.3
plt.rcParams["font.family"] = "sans-serif"

# Pass/fail palette shared by all report figures
COLORS = {
    "primary": "#0066CC",      # blue - level sizes
    "success": "#0084B8",      # teal - passing checks
    "warning": "#FF9900",      # orange - partial
    "danger": "#FF6B4A",       # coral - failing checks
    "neutral": "#666666",
    "light": "#CCCCCC"
}

# Report tables print in full
pd.set_option('display.max_columns', None)
pd.set_option('display.max_rows', 200)
pd.set_option('display.width', 120)
