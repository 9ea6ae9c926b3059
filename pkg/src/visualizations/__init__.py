"""
Report figures: level cardinalities and check heatmaps.
"""

from .report_visuals import (
    plot_level_cardinalities,
    plot_check_matrix,
    save_report_figure,
    sizes_frame
)
