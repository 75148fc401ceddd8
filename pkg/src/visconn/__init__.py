"""Visibility and bivisibility graphs of planar point sets in exact arithmetic."""

from .connlib import (
    CutRecord,
    SeparatorPartition,
    check_deltacut_structure,
    degree_stats,
    diameter,
    edge_connectivity,
    min_edge_cuts_by_bipartition,
    vertex_connectivity,
    verify_separator,
)
from .errors import VisConnError
from .geom import Line, Point, convex_hull, edges_compatible, orientation, pt, separating_line, strictly_between
from .visgraph import (
    Bipartition,
    GeomGraph,
    Graph,
    bivisibility_graph,
    is_visible,
    max_collinear,
    max_collinear_ab,
    visibility_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CutRecord",
    "GeomGraph",
    "Graph",
    "Line",
    "Point",
    "SeparatorPartition",
    "VisConnError",
    "bivisibility_graph",
    "check_deltacut_structure",
    "convex_hull",
    "degree_stats",
    "diameter",
    "edge_connectivity",
    "edges_compatible",
    "is_visible",
    "max_collinear",
    "max_collinear_ab",
    "min_edge_cuts_by_bipartition",
    "orientation",
    "pt",
    "separating_line",
    "strictly_between",
    "verify_separator",
    "vertex_connectivity",
    "visibility_graph",
]
