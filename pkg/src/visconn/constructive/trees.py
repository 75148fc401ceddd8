"""Non-crossing trees, forests and large subgraphs of bivisibility graphs.

Internally edges are ``(a, b)`` point pairs with ``a`` from the first class
and ``b`` from the second; the public builders return :class:`GeomGraph`
objects over ``A + B`` coloured ``"A"``/``"B"``.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from ..errors import OverlappingSets, PreconditionViolated
from ..geom import (
    Line,
    Point,
    as_point_set,
    collinear,
    convex_hull,
    cw_angle,
    edges_compatible,
    integer_coords,
    on_closed_segment,
    ray_key,
    separating_line,
    strictly_between,
)
from ..visgraph import GeomGraph, lines_with_counts, max_collinear_ab, norm_edge
from .hamsandwich import ham_sandwich
from .joining import join_separated_graphs

PairSet = set  # set of (a_point, b_point)


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def _to_geom(A: Sequence[Point], B: Sequence[Point], pairs: Iterable) -> GeomGraph:
    index = {p: k for k, p in enumerate(A)}
    index.update({p: len(A) + k for k, p in enumerate(B)})
    edges = frozenset(norm_edge(index[a], index[b]) for a, b in pairs)
    return GeomGraph(tuple(A) + tuple(B), edges, ("A",) * len(A) + ("B",) * len(B))


def _check_classes(A: Sequence[Point], B: Sequence[Point]) -> tuple[tuple, tuple]:
    A, B = as_point_set(A), as_point_set(B)
    if set(A) & set(B):
        raise OverlappingSets("A and B share a point")
    return A, B


def _refine(pairs: Iterable, A: Sequence[Point], B: Sequence[Point]) -> PairSet:
    """Shrink each bichromatic segment to a visible bichromatic piece of itself.

    Shrinking keeps a non-crossing edge set non-crossing, and the piece is an
    edge of the bivisibility graph of the full sets.
    """
    colour = {p: 0 for p in A}
    colour.update({p: 1 for p in B})
    pts = list(A) + list(B)
    out = set()
    for a, b in pairs:
        inner = [q for q in pts if strictly_between(a, q, b)]
        if not inner:
            out.add((a, b))
            continue
        inner.sort(key=lambda q: (q.x - a.x) ** 2 + (q.y - a.y) ** 2)
        run = [a] + inner + [b]
        for p, q in zip(run, run[1:]):
            if colour[p] != colour[q]:
                out.add((p, q) if colour[p] == 0 else (q, p))
                break
    return out


def _spanning_subset(pairs: Iterable, vertices: Iterable) -> PairSet:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out = set()
    for a, b in sorted(pairs):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            out.add((a, b))
    return out


def _join(A1, B1, T1: PairSet, A2, B2, T2: PairSet) -> tuple[Point, Point]:
    G1 = _to_geom(A1, B1, T1)
    G2 = _to_geom(A2, B2, T2)
    i, j = join_separated_graphs(G1, G2)
    p, q = G1.base[i], G2.base[j]
    return (p, q) if G1.colour[i] == "A" else (q, p)


def _along(line: Line, points: Iterable[Point]) -> list[Point]:
    return sorted((p for p in points if line.contains(p)), key=line.position)


def _edge_along(line: Line, A: Sequence[Point], B: Sequence[Point]) -> Optional[tuple[Point, Point]]:
    """First consecutive bichromatic pair along ``line``."""
    aset = set(A)
    run = _along(line, list(A) + list(B))
    for p, q in zip(run, run[1:]):
        if (p in aset) != (q in aset):
            return (p, q) if p in aset else (q, p)
    return None


# --- line-anchored trees ---------------------------------------------------


def line_anchored_tree(A: Sequence[Point], B: Sequence[Point], line: Optional[Line] = None) -> GeomGraph:
    """Non-crossing spanning tree of the bivisibility graph when ``A`` lies on a line.

    Requires every point of ``A`` on ``line`` (inferred when ``|A| >= 2``),
    no point of ``B`` on it, and ``|A| >= |B| >= 1``.
    """
    A, B = _check_classes(A, B)
    if not B or len(A) < len(B):
        raise PreconditionViolated("need |A| >= |B| >= 1")
    if line is None:
        line = Line.through(A[0], A[1]) if len(A) >= 2 else None
    if line is not None:
        if not all(line.contains(a) for a in A):
            raise PreconditionViolated("A is not collinear on the anchor line")
        if any(line.contains(b) for b in B):
            raise PreconditionViolated("a point of B lies on the anchor line")
    return _to_geom(A, B, _anchored(list(A), list(B), line))


def _anchored(A: list, B: list, line: Optional[Line]) -> PairSet:
    if len(B) == 1:
        return {(a, B[0]) for a in A}
    up = [b for b in B if line.side(b) > 0]
    down = [b for b in B if line.side(b) < 0]
    if up and down:
        both = _anchored(A, up, line) | _anchored(A, down, line)
        return _spanning_subset(both, A + B)

    # peel a hull corner of A together with the nearest B point on its hull edge
    a = min(A)
    pts = A + B
    hull = [pts[i] for i in convex_hull(pts)]
    k = hull.index(a)
    nbrs = [hull[(k - 1) % len(hull)], hull[(k + 1) % len(hull)]]
    far = next(q for q in nbrs if not line.contains(q))
    on_edge = [b for b in B if on_closed_segment(a, b, far)]
    b = min(on_edge, key=lambda q: ((q.x - a.x) ** 2 + (q.y - a.y) ** 2, q))
    rest_a = [p for p in A if p != a]
    rest_b = [p for p in B if p != b]
    inner = _anchored(rest_a, rest_b, line)
    joint = _join(rest_a, rest_b, inner, [a], [b], {(a, b)})
    return inner | {(a, b), joint}


# --- n + 1 edges for balanced classes ---------------------------------------


def large_noncrossing_subgraph(A: Sequence[Point], B: Sequence[Point]) -> GeomGraph:
    """Non-crossing subgraph of the bivisibility graph with at least n + 1 edges.

    Requires ``|A| = |B| = n >= 2`` and ``A + B`` not collinear.
    """
    A, B = _check_classes(A, B)
    if len(A) != len(B):
        raise PreconditionViolated("classes must have equal size")
    if len(A) < 2:
        raise PreconditionViolated("n = 1 admits no non-collinear configuration")
    if collinear(A + B):
        raise PreconditionViolated("A + B is collinear")
    return _to_geom(A, B, _large(list(A), list(B)))


def _large(A: list, B: list) -> PairSet:
    n = len(A)
    if n == 2:
        return _large_base(A, B)
    pts = A + B
    for members in lines_with_counts(pts):
        if len(members) < n:
            break
        idx = sorted(members)
        return _large_on_line(A, B, Line.through(pts[idx[0]], pts[idx[1]]))
    return _large_split(A, B)


def _large_base(A: list, B: list) -> PairSet:
    """Greedy triangulation of four points with the monochromatic edges removed."""
    pts = A + B
    cand = []
    for i in range(4):
        for j in range(i + 1, 4):
            p, q = pts[i], pts[j]
            if not any(strictly_between(p, r, q) for r in pts):
                cand.append(((p.x - q.x) ** 2 + (p.y - q.y) ** 2, i, j))
    chosen: list = []
    for _, i, j in sorted(cand):
        seg = (pts[i], pts[j])
        if all(edges_compatible(seg, s) for s in chosen):
            chosen.append(seg)
    aset = set(A)
    return {(p, q) if p in aset else (q, p) for p, q in chosen if (p in aset) != (q in aset)}


def _swap(pairs: Iterable) -> PairSet:
    return {(b, a) for a, b in pairs}


def _large_on_line(A: list, B: list, l: Line) -> PairSet:
    n = len(A)
    A0 = [p for p in A if l.contains(p)]
    B0 = [p for p in B if l.contains(p)]
    if len(A0) < len(B0):
        return _swap(_large_on_line(B, A, l))
    A1 = [p for p in A if not l.contains(p)]
    B1 = [p for p in B if not l.contains(p)]
    along = _edge_along(l, A, B)

    if len(A0) > len(B0):
        edges = _refine(_anchored(A0, B1, l), A, B)
        if len(edges) < n + 1:
            edges.add(along)
        return edges

    # |A0| == |B0|: tree, an edge along l, and one more
    for s in (1, -1):
        a_side = [p for p in A1 if l.side(p) == s]
        b_side = [p for p in B1 if l.side(p) == s]
        if a_side and b_side:
            far_a = max(a_side, key=lambda p: (abs(l.value(p)), [-c for c in p]))
            far_b = max(b_side, key=lambda p: (abs(l.value(p)), [-c for c in p]))
            if abs(l.value(far_b)) > abs(l.value(far_a)):
                return _swap(_large_on_line(B, A, l))
            edges = _refine(_anchored(A0, B1, l), A, B)
            edges.add(along)
            edges |= _refine([(far_a, far_b)], A, B)
            return edges
    # l separates A1 from B1
    edges = _refine(_anchored(A0, B1, l), A, B)
    edges |= _refine(_swap(_anchored(B0, A1, l)), A, B)
    edges.add(along)
    return edges


def _split_assign(h: Line, S: list, up_count: int, up_from_left: bool) -> tuple[list, list]:
    """Points above ``h`` plus ``up_count - |above|`` on-line points go up."""
    above = [p for p in S if h.side(p) > 0]
    below = [p for p in S if h.side(p) < 0]
    on = _along(h, S)
    k = up_count - len(above)
    if up_from_left:
        return above + on[:k], below + on[k:]
    return above + on[len(on) - k:], below + on[:len(on) - k]


def _large_split(A: list, B: list) -> PairSet:
    n = len(A)
    half = _ceil_half(n)
    h = ham_sandwich(A, B)
    on_a, on_b = _along(h, A), _along(h, B)
    above_a = [p for p in A if h.side(p) > 0]
    below_a = [p for p in A if h.side(p) < 0]
    above_b = [p for p in B if h.side(p) > 0]
    below_b = [p for p in B if h.side(p) < 0]
    # each side gets ceil(n/2) of each class; for odd n one on-line point is shared
    ka, kb = half - len(above_a), half - len(above_b)
    a_up = above_a + on_a[:ka]
    a_dn = below_a + on_a[len(on_a) - (half - len(below_a)):]
    b_up = above_b + on_b[len(on_b) - kb:]
    b_dn = below_b + on_b[:half - len(below_b)]

    up = _refine(_large(a_up, b_up), A, B)
    dn = _refine(_large(a_dn, b_dn), A, B)

    def on_h(e) -> bool:
        return h.contains(e[0]) and h.contains(e[1])

    along_up = {e for e in up if on_h(e)}
    along_dn = {e for e in dn if on_h(e)}
    # the side with at most one edge along h gives it up
    if len(along_up) <= len(along_dn):
        drop = along_up
        up = up - drop
    else:
        drop = along_dn
        dn = dn - drop
    if len(drop) > 1:
        raise AssertionError("both sides carry several edges along the cut")
    return up | dn


# --- ray covers ------------------------------------------------------------


def ray_cover_forest(A: Sequence[Point], B: Sequence[Point]) -> GeomGraph:
    """Non-crossing forest with at least ceil((n-1)/(l-1)) edges.

    From the first point ``v`` of ``A``, the rays through points of ``B``
    and, inside each sector between consecutive rays, segments leaving a
    chosen ``B`` point of the bounding ray cover every other point. Each
    ray or segment holds at most ``l - 1`` covered points and contributes
    its first colour change as an edge. Sectors wider than a half-turn are
    split in two first.
    """
    A, B = _check_classes(A, B)
    if not A or not B:
        raise ValueError("both classes must be nonempty")
    return _to_geom(A, B, _ray_cover(list(A), list(B)))


def _ray_cover(A: list, B: list) -> PairSet:
    pts = A + B
    ic = integer_coords(pts)
    na = len(A)
    v = 0
    xv, yv = ic[v]

    def dist2(k: int, origin: int) -> int:
        return (ic[k][0] - ic[origin][0]) ** 2 + (ic[k][1] - ic[origin][1]) ** 2

    by_ray: dict = {}
    for k in range(1, len(pts)):
        by_ray.setdefault(ray_key(ic[k][0] - xv, ic[k][1] - yv), []).append(k)
    b_rays = [u for u, members in by_ray.items() if any(k >= na for k in members)]
    # clockwise order; starting point irrelevant since sectors are cyclic
    b_rays.sort(key=lambda u: cw_angle((1, 0), u))
    nrays = len(b_rays)
    anchor = {}
    edges: PairSet = set()
    for u in b_rays:
        run = sorted(by_ray[u], key=lambda k: dist2(k, v))
        anchor[u] = next(k for k in run if k >= na)
        chain = [v] + run
        for p, q in zip(chain, chain[1:]):
            if (p < na) != (q < na):
                edges.add((pts[p], pts[q]) if p < na else (pts[q], pts[p]))
                break

    b_ray_set = set(b_rays)
    groups: dict = {}
    for k in range(1, len(pts)):
        u_p = ray_key(ic[k][0] - xv, ic[k][1] - yv)
        if u_p in b_ray_set:
            continue
        # only points of A lie off the rays through B
        for i, u in enumerate(b_rays):
            nxt = b_rays[(i + 1) % nrays]
            gap = cw_angle(u, nxt) if nrays > 1 else 4
            off = cw_angle(u, u_p)
            if 0 < off < gap:
                break
        else:
            raise AssertionError("point outside every sector")
        if gap <= 2:
            owner = anchor[u]
        elif nrays == 1:
            if off == 2:
                continue  # behind v on the line of the only ray; no B point can see it
            owner = anchor[u]
        else:
            split = (-(u[0] + nxt[0]), -(u[1] + nxt[1]))
            owner = anchor[u] if off <= cw_angle(u, split) else anchor[nxt]
        key = (owner, ray_key(ic[k][0] - ic[owner][0], ic[k][1] - ic[owner][1]))
        groups.setdefault(key, []).append(k)
    for (owner, _), members in groups.items():
        nearest = min(members, key=lambda k: dist2(k, owner))
        edges.add((pts[nearest], pts[owner]))
    return edges


# --- spanning trees under the three-per-AB-line cap -------------------------


def noncrossing_spanning_tree(A: Sequence[Point], B: Sequence[Point]) -> GeomGraph:
    """Non-crossing spanning tree of the bivisibility graph.

    Requires ``|A| = |B| >= 1`` and at most three points on any line that
    meets both classes.
    """
    A, B = _check_classes(A, B)
    if len(A) != len(B) or not A:
        raise PreconditionViolated("classes must be nonempty and of equal size")
    if max_collinear_ab(A, B) > 3:
        raise PreconditionViolated("more than three points on an AB-line")
    return _to_geom(A, B, _spanning(list(A), list(B)))


def _alternations(signs: list) -> int:
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _spanning(A: list, B: list) -> PairSet:
    n = len(A)
    if n == 1:
        return {(A[0], B[0])}
    up = _ceil_half(n)
    h = ham_sandwich(A, B)
    a_up, a_dn = _split_assign(h, A, up, up_from_left=True)
    b_up, b_dn = _split_assign(h, B, up, up_from_left=False)

    aset = set(A)
    on = _along(h, A + B)
    sign = {p: (1 if p in a_up or p in b_up else -1) for p in on}
    if _alternations([sign[p] for p in on]) >= 2:
        # two same-class neighbours on h with opposite signs can trade places
        for p, q in zip(on, on[1:]):
            if (p in aset) == (q in aset) and sign[p] != sign[q]:
                sign[p], sign[q] = sign[q], sign[p]
                cls_up, cls_dn = (a_up, a_dn) if p in aset else (b_up, b_dn)
                for x in (p, q):
                    (cls_up if sign[x] > 0 else cls_dn).append(x)
                    (cls_dn if sign[x] > 0 else cls_up).remove(x)
                break

    T_up = _spanning(a_up, b_up)
    T_dn = _spanning(a_dn, b_dn)
    if _alternations([sign[p] for p in on]) <= 1:
        separating_line(a_up + b_up, a_dn + b_dn)
        joint = _join(a_up, b_up, T_up, a_dn, b_dn, T_dn)
        return T_up | T_dn | {joint}
    # one class in the middle of h with the other class on both ends
    for p, q in zip(on, on[1:]):
        if (p in aset) != (q in aset) and sign[p] != sign[q]:
            return T_up | T_dn | {(p, q) if p in aset else (q, p)}
    raise AssertionError("no connecting edge along the cut")
