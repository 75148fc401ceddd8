"""Visibility and bivisibility graphs, plus collinearity statistics."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import IndexOutOfRange, OverlappingSets
from .geom import Point, as_point_set, direction_key, edges_compatible, integer_coords, strictly_between

Edge = tuple  # (i, j) with i < j


def norm_edge(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"loop at vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``range(n)``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        es = frozenset(norm_edge(i, j) for i, j in self.edges)
        for i, j in es:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise IndexOutOfRange(f"edge ({i}, {j}) outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", es)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, i: int, j: int) -> bool:
        return norm_edge(i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable) -> "Graph":
        gone = {norm_edge(*e) for e in removed}
        return Graph(self.n, self.edges - gone)


@dataclass(frozen=True)
class GeomGraph:
    """Edges drawn as straight segments between points of ``base``.

    ``colour`` is an optional per-vertex label (bivisibility graphs use
    ``"A"`` and ``"B"``).
    """

    base: tuple
    edges: frozenset = field(default_factory=frozenset)
    colour: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        es = frozenset(norm_edge(i, j) for i, j in self.edges)
        for i, j in es:
            if j >= len(self.base) or i < 0:
                raise IndexOutOfRange(f"edge ({i}, {j}) outside the base point set")
        object.__setattr__(self, "edges", es)
        if self.colour is not None:
            colour = tuple(self.colour)
            if len(colour) != len(self.base):
                raise ValueError("need one colour per vertex")
            object.__setattr__(self, "colour", colour)

    @property
    def n(self) -> int:
        return len(self.base)

    def segments(self) -> list[tuple[Point, Point]]:
        return [(self.base[i], self.base[j]) for i, j in sorted(self.edges)]

    def is_noncrossing(self) -> bool:
        segs = self.segments()
        for k, s in enumerate(segs):
            for t in segs[k + 1:]:
                if not edges_compatible(s, t):
                    return False
        # isolated vertices must not sit inside an edge either
        for p in self.base:
            for a, b in segs:
                if strictly_between(a, p, b):
                    return False
        return True

    def is_properly_coloured(self) -> bool:
        if self.colour is None:
            return False
        return all(self.colour[i] != self.colour[j] for i, j in self.edges)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def is_spanning_tree(self) -> bool:
        if len(self.edges) != self.n - 1:
            return False
        return _connected(self.n, self.edges)


def _connected(n: int, edges: Iterable) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            comps -= 1
    return comps <= 1


@dataclass(frozen=True)
class Bipartition:
    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if self.A & self.B:
            raise OverlappingSets("bipartition classes intersect")


def _blocked_matrix(points: Sequence[Point]) -> list[list[bool]]:
    """``blocked[i][j]`` is true when some point lies strictly inside segment ij."""
    ic = integer_coords(points)
    n = len(ic)
    blocked = [[False] * n for _ in range(n)]
    for i in range(n):
        xi, yi = ic[i]
        for j in range(i + 1, n):
            xj, yj = ic[j]
            dx, dy = xj - xi, yj - yi
            span = dx * dx + dy * dy
            for k in range(n):
                if k == i or k == j:
                    continue
                xk, yk = ic[k]
                if dx * (yk - yi) - dy * (xk - xi) != 0:
                    continue
                t = (xk - xi) * dx + (yk - yi) * dy
                if 0 < t < span:
                    blocked[i][j] = blocked[j][i] = True
                    break
    return blocked


def is_visible(P: Sequence[Point], i: int, j: int) -> bool:
    """No point of ``P`` in the open segment between ``P[i]`` and ``P[j]``."""
    n = len(P)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside 0..{n - 1}")
    if i == j:
        raise ValueError("a vertex is not visible from itself")
    return not any(strictly_between(P[i], q, P[j]) for k, q in enumerate(P) if k != i and k != j)


def visibility_graph(P: Sequence[Point]) -> Graph:
    P = as_point_set(P)
    blocked = _blocked_matrix(P)
    n = len(P)
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if not blocked[i][j]))


def bivisibility_graph(A: Sequence[Point], B: Sequence[Point]) -> GeomGraph:
    """Vertices ``A`` then ``B`` (coloured ``"A"``/``"B"``); only A-B visible pairs are edges."""
    A, B = as_point_set(A), as_point_set(B)
    if not A or not B:
        raise ValueError("both classes must be nonempty")
    if set(A) & set(B):
        raise OverlappingSets("A and B share a point")
    base = A + B
    blocked = _blocked_matrix(base)
    na = len(A)
    edges = frozenset((i, j) for i in range(na) for j in range(na, len(base)) if not blocked[i][j])
    return GeomGraph(base, edges, ("A",) * na + ("B",) * len(B))


def _lines(points: Sequence[Point]) -> dict:
    """Map each line through two or more points to the set of point indices on it."""
    ic = integer_coords(points)
    lines: dict = defaultdict(set)
    for i, (xi, yi) in enumerate(ic):
        for j in range(i + 1, len(ic)):
            xj, yj = ic[j]
            a, b = direction_key(yj - yi, xi - xj)
            lines[(a, b, a * xi + b * yi)].update((i, j))
    return lines


def max_collinear(P: Sequence[Point]) -> int:
    """Size of the largest collinear subset (at least 2 for two or more points)."""
    if len(P) < 2:
        return len(P)
    ic = integer_coords(P)
    best = 2
    for i, (xi, yi) in enumerate(ic):
        counts: dict = defaultdict(int)
        for j, (xj, yj) in enumerate(ic):
            if j != i:
                counts[direction_key(xj - xi, yj - yi)] += 1
        best = max(best, 1 + max(counts.values()))
    return best


def max_collinear_ab(A: Sequence[Point], B: Sequence[Point]) -> int:
    """Most points of ``A + B`` on one line that meets both classes."""
    base = list(A) + list(B)
    na = len(A)
    best = 0
    for members in _lines(base).values():
        if any(k < na for k in members) and any(k >= na for k in members):
            best = max(best, len(members))
    return best


def lines_with_counts(points: Sequence[Point]) -> list[frozenset]:
    """All lines spanned by the points, as index sets, largest first then by content."""
    found = [frozenset(m) for m in _lines(points).values()]
    return sorted(found, key=lambda m: (-len(m), sorted(m)))
