"""Constructive realizations: path systems, cuts, joins and plane spanning structures."""

from .hamsandwich import closed_side_counts, ham_sandwich, is_ham_sandwich
from .joining import join_separated_graphs
from .paths import PathSystem, PencilMatch, four_paths, max_bipartite_matching, one_bend_bound, one_bend_paths, pencil_match
from .trees import large_noncrossing_subgraph, line_anchored_tree, noncrossing_spanning_tree, ray_cover_forest

__all__ = [
    "PathSystem",
    "PencilMatch",
    "closed_side_counts",
    "four_paths",
    "ham_sandwich",
    "is_ham_sandwich",
    "join_separated_graphs",
    "large_noncrossing_subgraph",
    "line_anchored_tree",
    "max_bipartite_matching",
    "noncrossing_spanning_tree",
    "one_bend_bound",
    "one_bend_paths",
    "pencil_match",
    "ray_cover_forest",
]
