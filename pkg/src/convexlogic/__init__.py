"""Finite Kripke frames for intermediate logics, the logic PL of convex
polytopes, reduction of PL frames to sawed trees, and exact convex
realisations of sawed trees."""

from importlib import resources

from .formula import ParseError, evaluate, parse, to_text
from .frames import (
    Poset, PosetError, PosetMap, builtin_frame, find_up_reduction, frame_validates,
    is_p_morphism, satisfies_bd, satisfies_pl, up_algebra, validates_jankov_fine,
)
from .realization import (
    ConvexRealization, realize_low_height, realize_nerve, realize_sawed_tree, verify_realization,
)
from .reduction import SawedTree, detect_sawed_tree, reduce_to_sawed_tree

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a bundled example frame, e.g. ``data_path("fig3.json")``."""
    return resources.files(__name__) / "data" / name


__all__ = [
    "ParseError", "evaluate", "parse", "to_text",
    "Poset", "PosetError", "PosetMap", "builtin_frame", "find_up_reduction", "frame_validates",
    "is_p_morphism", "satisfies_bd", "satisfies_pl", "up_algebra", "validates_jankov_fine",
    "ConvexRealization", "realize_low_height", "realize_nerve", "realize_sawed_tree",
    "verify_realization", "SawedTree", "detect_sawed_tree", "reduce_to_sawed_tree",
    "data_path",
]
