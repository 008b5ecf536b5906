from .drawing import DrawingError, PlaneDrawing, check_drawing, plane_drawing, segments_cross
from .reduce import Reduction, ReductionError, reduce_to_sawed_tree
from .sawed import (
    PlaneTree, SawedTree, SawedTreeError, build_sawed_tree, detect_sawed_tree, from_poset, random_plane_tree,
    random_sawed_tree,
)
from .zigzag import ZigzagError, is_zigzag, zigzag_path

__all__ = [
    "DrawingError", "PlaneDrawing", "check_drawing", "plane_drawing", "segments_cross",
    "Reduction", "ReductionError", "reduce_to_sawed_tree",
    "PlaneTree", "SawedTree", "SawedTreeError", "build_sawed_tree", "detect_sawed_tree", "from_poset",
    "random_plane_tree", "random_sawed_tree",
    "ZigzagError", "is_zigzag", "zigzag_path",
]
