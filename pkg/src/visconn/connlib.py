"""Connectivity oracles and structural cut analysis on abstract graphs.

Flows are unit-capacity augmenting-path flows on small graphs; everything
iterates in ascending vertex order so results are reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import NotAPartition, TooLarge
from .visgraph import Graph, norm_edge

SWEEP_LIMIT = 20


@dataclass(frozen=True)
class CutRecord:
    side: frozenset
    cut_edges: frozenset
    size: int


@dataclass(frozen=True)
class SeparatorPartition:
    A: frozenset
    B: frozenset
    C: frozenset

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))


def degree_stats(G: Graph) -> tuple[int, list[int]]:
    """Minimum degree and the per-vertex degree list."""
    if G.n < 1:
        raise ValueError("graph has no vertices")
    deg = [0] * G.n
    for i, j in G.edges:
        deg[i] += 1
        deg[j] += 1
    return min(deg), deg


def bfs_distances(adj: list, src: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * len(adj)
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter(G: Graph):
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    if G.n < 1:
        raise ValueError("graph has no vertices")
    adj = G.adjacency()
    best = 0
    for s in range(G.n):
        dist = bfs_distances(adj, s)
        if any(d is None for d in dist):
            return math.inf
        best = max(best, max(dist))
    return best


def is_connected(G: Graph, removed: Iterable[int] = ()) -> bool:
    gone = set(removed)
    keep = [v for v in range(G.n) if v not in gone]
    if len(keep) <= 1:
        return True
    adj = G.adjacency()
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in gone and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(keep)


class _UnitFlow:
    """Residual network with integral capacities, BFS augmenting paths."""

    def __init__(self, size: int):
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]

    def add_arc(self, u: int, v: int, c: int = 1) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, limit: Optional[int] = None) -> int:
        flow = 0
        cap = self.cap
        while limit is None or flow < limit:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                u = queue.popleft()
                for v, c in cap[u].items():
                    if c > 0 and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if t not in parent:
                break
            v = t
            while v != s:
                u = parent[v]
                cap[u][v] -= 1
                cap[v][u] += 1
                v = u
            flow += 1
        return flow

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v, c in self.cap[u].items():
                if c > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _split_network(G: Graph, s: int, t: int) -> _UnitFlow:
    # vertex v -> (2v in, 2v+1 out); internal arc capacity 1, except at s and t
    net = _UnitFlow(2 * G.n)
    big = G.n
    for v in range(G.n):
        net.add_arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for i, j in sorted(G.edges):
        net.add_arc(2 * i + 1, 2 * j, big)
        net.add_arc(2 * j + 1, 2 * i, big)
    return net


def local_vertex_connectivity(G: Graph, s: int, t: int, limit: Optional[int] = None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent)."""
    if G.has_edge(s, t):
        raise ValueError("local vertex connectivity needs non-adjacent terminals")
    return _split_network(G, s, t).max_flow(2 * s + 1, 2 * t, limit)


def vertex_connectivity(G: Graph) -> int:
    """Exact vertex connectivity; ``n - 1`` for complete graphs."""
    if G.n < 2:
        raise ValueError("need at least two vertices")
    best = G.n - 1
    adj = G.adjacency()
    # a minimum separator misses one of the first best+1 vertices
    i = 0
    while i <= best and i < G.n:
        for j in range(i + 1, G.n):
            if j not in adj[i]:
                best = min(best, local_vertex_connectivity(G, i, j, limit=best))
        i += 1
    return best


def min_vertex_separator(G: Graph) -> Optional[SeparatorPartition]:
    """A minimum vertex cut as a partition {A, B, C}; ``None`` for complete graphs."""
    kappa = vertex_connectivity(G)
    adj = G.adjacency()
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if j in adj[i]:
                continue
            net = _split_network(G, i, j)
            if net.max_flow(2 * i + 1, 2 * j) != kappa:
                continue
            reach = net.reachable(2 * i + 1)
            cut = frozenset(v for v in range(G.n) if 2 * v in reach and 2 * v + 1 not in reach)
            side_a = _component_of(G, i, cut)
            side_b = frozenset(range(G.n)) - side_a - cut
            return SeparatorPartition(side_a, side_b, cut)
    return None


def _component_of(G: Graph, v: int, removed: frozenset) -> frozenset:
    adj = G.adjacency()
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def edge_connectivity(G: Graph) -> int:
    """Exact edge connectivity: min over t of the 0-t unit max-flow."""
    if G.n < 2:
        raise ValueError("need at least two vertices")
    delta, _ = degree_stats(G)
    best = delta
    for t in range(1, G.n):
        net = _UnitFlow(G.n)
        for i, j in sorted(G.edges):
            net.add_arc(i, j)
            net.add_arc(j, i)
        best = min(best, net.max_flow(0, t, limit=best))
        if best == 0:
            break
    return best


def _bitmask_adjacency(G: Graph) -> list[int]:
    masks = [0] * G.n
    for i, j in G.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return masks


def bipartition_cut_sizes(G: Graph):
    """Yield ``(mask, cut size)`` for every proper vertex subset containing vertex 0."""
    if G.n > SWEEP_LIMIT:
        raise TooLarge(f"bipartition sweep limited to n <= {SWEEP_LIMIT}, got {G.n}")
    adj = _bitmask_adjacency(G)
    full = (1 << G.n) - 1
    for rest in range(0, 1 << (G.n - 1)):
        mask = (rest << 1) | 1
        if mask == full:
            continue
        outside = full & ~mask
        size = 0
        m = mask
        while m:
            low = m & -m
            size += bin(adj[low.bit_length() - 1] & outside).count("1")
            m ^= low
        yield mask, size


def min_edge_cuts_by_bipartition(G: Graph) -> list[CutRecord]:
    """Every vertex bipartition whose cut attains the edge connectivity.

    Each record stores the smaller side (the side holding vertex 0 on a tie).
    Records are sorted by their side.
    """
    if G.n > SWEEP_LIMIT:
        raise TooLarge(f"bipartition sweep limited to n <= {SWEEP_LIMIT}, got {G.n}")
    if G.n < 2:
        return []
    sizes = list(bipartition_cut_sizes(G))
    lam = min(s for _, s in sizes)
    full = (1 << G.n) - 1
    records = []
    for mask, size in sizes:
        if size != lam:
            continue
        ones = bin(mask).count("1")
        if ones > G.n - ones:
            mask = full & ~mask
        side = frozenset(v for v in range(G.n) if mask >> v & 1)
        cut = frozenset(e for e in G.edges if (e[0] in side) != (e[1] in side))
        records.append(CutRecord(side, cut, len(cut)))
    records.sort(key=lambda r: sorted(r.side))
    return records


def check_deltacut_structure(G: Graph, A: Iterable[int], B: Iterable[int], C: Iterable[int]) -> bool:
    """Whether {A, B, C} has the shape of a non-star minimum edge cut.

    That is: G[A] is complete on exactly delta vertices, |B u C| >= delta,
    every A-vertex has exactly one neighbour in B and none in C, every
    B-vertex has a neighbour in A, and B is complete to C.
    """
    A, B, C = set(A), set(B), set(C)
    if A & B or A & C or B & C or A | B | C != set(range(G.n)):
        raise NotAPartition("A, B, C must partition the vertex set")
    if not A:
        return False
    delta, _ = degree_stats(G)
    adj = G.adjacency()
    if len(A) != delta or len(B | C) < delta:
        return False
    if any(not (A - {a}) <= adj[a] for a in A):
        return False
    if any(len(adj[a] & B) != 1 or adj[a] & C for a in A):
        return False
    if any(not adj[b] & A for b in B):
        return False
    return all(c in adj[b] for b in B for c in C)


def verify_separator(G: Graph, part: SeparatorPartition) -> bool:
    """A and B are nonempty and no edge joins them."""
    if not part.A or not part.B:
        return False
    return not any((i in part.A and j in part.B) or (i in part.B and j in part.A) for i, j in G.edges)


def cut_edges_of(G: Graph, side: Iterable[int]) -> frozenset:
    side = set(side)
    return frozenset(norm_edge(i, j) for i, j in G.edges if (i in side) != (j in side))
