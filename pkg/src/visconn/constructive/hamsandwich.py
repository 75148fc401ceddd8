"""Exact ham-sandwich cuts for two finite planar point sets."""

from __future__ import annotations

from typing import Sequence

from ..errors import OverlappingSets
from ..geom import Line, Point, as_point_set


def closed_side_counts(line: Line, S: Sequence[Point]) -> tuple[int, int]:
    """Points of ``S`` in the closed positive and closed negative half-planes."""
    sides = [line.side(p) for p in S]
    return sum(1 for s in sides if s >= 0), sum(1 for s in sides if s <= 0)


def is_ham_sandwich(line: Line, A: Sequence[Point], B: Sequence[Point]) -> bool:
    need_a, need_b = -(-len(A) // 2), -(-len(B) // 2)
    pa, na = closed_side_counts(line, A)
    pb, nb = closed_side_counts(line, B)
    return min(pa, na) >= need_a and min(pb, nb) >= need_b


def ham_sandwich(A: Sequence[Point], B: Sequence[Point]) -> Line:
    """A line whose closed half-planes each hold at least half of A and of B.

    Some valid cut can always be rotated onto two input points without
    losing points from either closed side, so the search runs over lines
    through pairs of points of ``A + B`` (then vertical lines through single
    points), in index order.
    """
    A, B = as_point_set(A), as_point_set(B)
    if not A or not B:
        raise ValueError("both classes must be nonempty")
    if set(A) & set(B):
        raise OverlappingSets("A and B share a point")
    pts = A + B
    seen: set = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            line = Line.through(pts[i], pts[j])
            if line in seen:
                continue
            seen.add(line)
            if is_ham_sandwich(line, A, B):
                return line
    for p in pts:
        line = Line(1, 0, p.x)
        if is_ham_sandwich(line, A, B):
            return line
    raise AssertionError("no ham-sandwich cut found; this contradicts the ham-sandwich theorem")
