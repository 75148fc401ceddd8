from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bivisible_pairs, ceil_div, connected, diameter_bfs, max_on_a_line, on_open_segment, visible_pairs
from visconn.errors import IndexOutOfRange, OverlappingSets
from visconn.geom import as_point_set, collinear, pt
from visconn.visgraph import (
    GeomGraph,
    Graph,
    bivisibility_graph,
    is_visible,
    lines_with_counts,
    max_collinear,
    max_collinear_ab,
    visibility_graph,
)

SQUARE = as_point_set([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])

point_sets = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=2, max_size=9, unique=True).map(
    as_point_set
)


def test_is_visible_examples():
    assert not is_visible(SQUARE, 0, 2)
    assert is_visible(SQUARE, 0, 1)
    assert not is_visible(as_point_set([(0, 0), (1, 0), (2, 0)]), 0, 2)
    with pytest.raises(IndexOutOfRange):
        is_visible(SQUARE, 0, 5)


def test_visibility_examples():
    assert visibility_graph(as_point_set([(0, 0), (1, 0), (2, 0)])).edges == {(0, 1), (1, 2)}
    assert len(visibility_graph(as_point_set([(0, 0), (1, 0), (0, 1)])).edges) == 3
    wheel = visibility_graph(SQUARE)
    assert wheel.edges == visible_pairs(SQUARE)
    assert len(wheel.edges) == 8
    assert (0, 2) not in wheel.edges and (1, 3) not in wheel.edges


def test_bivisibility_examples():
    assert len(bivisibility_graph([pt(0, 0)], [pt(1, 0)]).edges) == 1
    assert len(bivisibility_graph([pt(0, 0), pt(2, 0)], [pt(1, 0)]).edges) == 2
    H = bivisibility_graph([pt(2, 0), pt(4, 0), pt(1, 1)], [pt(0, 0)])
    assert len(H.edges) == 2
    assert all(1 not in e for e in H.edges)  # (4,0) is isolated
    assert H.colour == ("A", "A", "A", "B")
    with pytest.raises(OverlappingSets):
        bivisibility_graph([pt(0, 0)], [pt(0, 0)])


def test_max_collinear_examples():
    assert max_collinear(SQUARE) == 3
    assert max_collinear(as_point_set([(k, 2 * k) for k in range(6)])) == 6
    grid = as_point_set([(x, y) for x in range(3) for y in range(3)])
    assert max_collinear(grid) == max_on_a_line(grid) == 3
    assert max_collinear_ab([pt(0, 0)], [pt(1, 0)]) == 2
    assert max_collinear_ab([pt(0, 0), pt(2, 0)], [pt(1, 0)]) == 3


def test_max_collinear_ab_ignores_single_class_lines():
    A = as_point_set([(0, 0), (1, 0), (2, 0), (3, 0)])
    B = as_point_set([(0, 1), (3, 2)])
    assert max_collinear(A + B) == 4
    assert max_collinear_ab(A, B) == 2


def test_lines_with_counts_largest_first():
    lines = lines_with_counts(SQUARE)
    assert [len(s) for s in lines][:2] == [3, 3]
    assert all(len(a) >= len(b) for a, b in zip(lines, lines[1:]))


@settings(max_examples=150)
@given(point_sets)
def test_visibility_matches_bruteforce(P):
    G = visibility_graph(P)
    assert G.edges == visible_pairs(P)
    assert connected(G.n, G.edges)
    for i, j in G.edges:
        assert not any(on_open_segment(P[i], q, P[j]) for q in P)
    assert max_collinear(P) == max_on_a_line(P)


@settings(max_examples=150)
@given(point_sets)
def test_noncollinear_diameter_and_degree_bound(P):
    G = visibility_graph(P)
    ell = max_collinear(P)
    deg = [G.degree(v) for v in range(G.n)]
    assert min(deg) >= ceil_div(len(P) - 1, ell - 1)
    if not collinear(P):
        assert diameter_bfs(G.n, G.edges) <= 2


@settings(max_examples=100)
@given(point_sets, st.integers(1, 8))
def test_bivisibility_is_restricted_visibility(P, k):
    k = min(k, len(P) - 1)
    A, B = P[:k], P[k:]
    H = bivisibility_graph(A, B)
    assert H.edges == bivisible_pairs(A, B)
    assert H.edges <= visibility_graph(A + B).edges
    assert H.is_properly_coloured()


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(IndexOutOfRange):
        Graph(2, frozenset({(0, 2)}))
    assert Graph(3, frozenset({(2, 0)})).edges == {(0, 2)}


def test_geom_graph_checks():
    base = as_point_set([(0, 0), (2, 0), (1, 1), (1, -1)])
    crossing = GeomGraph(base, {(0, 1), (2, 3)}, ("A", "B", "A", "B"))
    assert not crossing.is_noncrossing()
    assert GeomGraph(base, {(0, 2), (1, 2)}, ("A", "B", "B", "A")).is_properly_coloured() is False
    # an isolated vertex inside an edge counts as a crossing
    assert not GeomGraph(as_point_set([(0, 0), (2, 0), (1, 0)]), {(0, 1)}).is_noncrossing()
    path = GeomGraph(base, {(0, 2), (2, 1), (1, 3)})
    assert path.is_noncrossing() and path.is_spanning_tree()
