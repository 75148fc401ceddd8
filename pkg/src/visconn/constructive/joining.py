"""Joining two separated, properly coloured non-crossing geometric graphs."""

from __future__ import annotations

from ..errors import HullsIntersect, PreconditionViolated
from ..geom import collinear, edges_compatible, separating_line, strictly_between
from ..visgraph import GeomGraph


def _check_side(G: GeomGraph, name: str) -> None:
    if not G.edges:
        raise PreconditionViolated(f"{name} has no edge")
    if G.colour is None or not G.is_properly_coloured():
        raise PreconditionViolated(f"{name} is not properly coloured")
    if not G.is_noncrossing():
        raise PreconditionViolated(f"{name} is not non-crossing")


def join_separated_graphs(G1: GeomGraph, G2: GeomGraph) -> tuple[int, int]:
    """A bichromatic edge ``(i, j)``, ``i`` in G1 and ``j`` in G2, keeping the union plane.

    The candidate segment must miss every vertex and be compatible with
    every edge of both graphs. Such a pair always exists for graphs with
    disjoint hulls whose union is not collinear; the search is exhaustive
    in ascending index order.
    """
    _check_side(G1, "G1")
    _check_side(G2, "G2")
    try:
        separating_line(G1.base, G2.base)
    except HullsIntersect as exc:
        raise PreconditionViolated("convex hulls are not disjoint") from exc
    if collinear(list(G1.base) + list(G2.base)):
        raise PreconditionViolated("union of the vertex sets is collinear")

    vertices = list(G1.base) + list(G2.base)
    segments = G1.segments() + G2.segments()
    for i, p in enumerate(G1.base):
        for j, q in enumerate(G2.base):
            if G1.colour[i] == G2.colour[j]:
                continue
            if any(strictly_between(p, r, q) for r in vertices):
                continue
            if all(edges_compatible((p, q), s) for s in segments):
                return i, j
    raise AssertionError("no joining edge found; the joining lemma guarantees one")
