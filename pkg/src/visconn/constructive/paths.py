"""Edge-disjoint path systems: short paths in diameter-2 graphs and 1-bend
paths in visibility graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..connlib import diameter
from ..errors import DiameterTooLarge, IndexOutOfRange
from ..geom import Line, Point, as_point_set, direction_key, integer_coords
from ..visgraph import Graph, max_collinear, norm_edge, visibility_graph


@dataclass
class PathSystem:
    paths: list
    host: Graph

    def edges_used(self) -> list[tuple[int, int]]:
        return [norm_edge(p[k], p[k + 1]) for p in self.paths for k in range(len(p) - 1)]

    def is_valid(self) -> bool:
        used = self.edges_used()
        return len(used) == len(set(used)) and all(e in self.host.edges for e in used)

    def __len__(self) -> int:
        return len(self.paths)


@dataclass
class PencilMatch:
    """Lines through ``v`` (``L``) and ``w`` (``M``) matched via witness vertices."""

    L: list = field(default_factory=list)
    M: list = field(default_factory=list)
    matched: list = field(default_factory=list)  # (L index, M index, witness)


def max_bipartite_matching(n_left: int, adj: Sequence[Sequence[int]]) -> dict[int, int]:
    """Maximum matching by augmenting paths; returns ``{left: right}``."""
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set) -> bool:
        for r in adj[u]:
            if r in seen:
                continue
            seen.add(r)
            if r not in match_right or augment(match_right[r], seen):
                match_right[r] = u
                return True
        return False

    for u in range(n_left):
        augment(u, set())
    return {u: r for r, u in match_right.items()}


def four_paths(G: Graph, v: int, w: int) -> PathSystem:
    """``min(deg v, deg w)`` edge-disjoint v-w paths of length at most 4.

    Requires diameter at most 2. Paths come in the order: the direct edge,
    common neighbours, matched pairs (length 3), then paired leftovers
    routed through a common neighbour (length 4).
    """
    if not (0 <= v < G.n and 0 <= w < G.n):
        raise IndexOutOfRange(f"({v}, {w}) outside 0..{G.n - 1}")
    if v == w:
        raise ValueError("v and w must differ")
    if diameter(G) > 2:
        raise DiameterTooLarge("four_paths needs a graph of diameter at most 2")
    adj = G.adjacency()
    d = min(len(adj[v]), len(adj[w]))
    paths: list[tuple[int, ...]] = []
    if w in adj[v]:
        paths.append((v, w))
        d -= 1
    common = sorted(adj[v] & adj[w])
    paths.extend((v, c, w) for c in common)
    k = d - len(common)
    A = [a for a in sorted(adj[v]) if a not in common and a != w][:k]
    B = [b for b in sorted(adj[w]) if b not in common and b != v][:k]

    # greedy matching is maximal, which is all the argument needs
    matched_a, matched_b = set(), set()
    for a in A:
        for b in B:
            if b not in matched_b and b in adj[a]:
                matched_a.add(a)
                matched_b.add(b)
                paths.append((v, a, b, w))
                break
    A2 = [a for a in A if a not in matched_a]
    B2 = [b for b in B if b not in matched_b]
    for a, b in zip(A2, B2):
        x = min(adj[a] & adj[b])
        paths.append((v, a, x, b, w))
    return PathSystem(paths, G)


def _segment_run(ic: Sequence[tuple[int, int]], i: int, j: int) -> list[int]:
    """Indices of the points on closed segment i-j, ordered from i to j."""
    (ax, ay), (bx, by) = ic[i], ic[j]
    dx, dy = bx - ax, by - ay
    span = dx * dx + dy * dy
    inner = []
    for k, (x, y) in enumerate(ic):
        if k in (i, j) or dx * (y - ay) - dy * (x - ax) != 0:
            continue
        t = dx * (x - ax) + dy * (y - ay)
        if 0 < t < span:
            inner.append((t, k))
    return [i] + [k for _, k in sorted(inner)] + [j]


def pencil_match(P: Sequence[Point], v: int, w: int) -> PencilMatch:
    """Maximum matching between the pencils at ``v`` and ``w`` through points off line vw."""
    ic = integer_coords(P)
    (xv, yv), (xw, yw) = ic[v], ic[w]
    L: list[Line] = []
    M: list[Line] = []
    l_index: dict[tuple[int, int], int] = {}
    m_index: dict[tuple[int, int], int] = {}
    witness: dict[tuple[int, int], int] = {}
    for x, (px, py) in enumerate(ic):
        if (xw - xv) * (py - yv) - (yw - yv) * (px - xv) == 0:
            continue  # on line vw, including v and w
        kv = direction_key(px - xv, py - yv)
        kw = direction_key(px - xw, py - yw)
        if kv not in l_index:
            l_index[kv] = len(L)
            L.append(Line.through(P[v], P[x]))
        if kw not in m_index:
            m_index[kw] = len(M)
            M.append(Line.through(P[w], P[x]))
        witness[(l_index[kv], m_index[kw])] = x
    adj: list[list[int]] = [[] for _ in L]
    for li, mi in sorted(witness):
        adj[li].append(mi)
    matching = max_bipartite_matching(len(L), adj)
    matched = sorted((li, mi, witness[(li, mi)]) for li, mi in matching.items())
    return PencilMatch(L, M, matched)


def one_bend_paths(P: Sequence[Point], v: int, w: int) -> PathSystem:
    """Edge-disjoint paths bending at most once, at least ceil((n-1)/(l-1)) of them.

    The first path runs straight along vw; each further path goes straight
    to a witness ``x`` and straight on to ``w``. Witnesses come from a
    maximum matching of the two pencils, so no two share a line through
    ``v`` or through ``w``.
    """
    P = as_point_set(P)
    n = len(P)
    if n < 2:
        raise ValueError("need at least two points")
    if not (0 <= v < n and 0 <= w < n):
        raise IndexOutOfRange(f"({v}, {w}) outside 0..{n - 1}")
    if v == w:
        raise ValueError("v and w must differ")
    G = visibility_graph(P)
    ic = integer_coords(P)
    paths = [tuple(_segment_run(ic, v, w))]
    for _, _, x in pencil_match(P, v, w).matched:
        first = _segment_run(ic, v, x)
        second = _segment_run(ic, x, w)
        paths.append(tuple(first + second[1:]))
    return PathSystem(paths, G)


def one_bend_bound(P: Sequence[Point]) -> int:
    """ceil((n - 1) / (l - 1)) for the point set."""
    n = len(P)
    ell = max_collinear(P)
    return -(-(n - 1) // (ell - 1))
