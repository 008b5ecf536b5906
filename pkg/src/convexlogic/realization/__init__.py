from .core import (
    CheckResult, ConvexRealization, RealizationError, RealizationFormatError, Report, SawCell,
    cell_poset, eval_point, induced_cell_map, realize_low_height, realize_nerve,
    realize_sawed_tree, verify_realization,
)
from .interval import (
    Interval, PiecewiseAffineIntervalMap, build_interval_surjection, open_interval, stated_cases,
)

__all__ = [
    "CheckResult", "ConvexRealization", "RealizationError", "RealizationFormatError", "Report",
    "SawCell", "cell_poset", "eval_point", "induced_cell_map", "realize_low_height",
    "realize_nerve", "realize_sawed_tree", "verify_realization",
    "Interval", "PiecewiseAffineIntervalMap", "build_interval_surjection", "open_interval",
    "stated_cases",
]
