from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kappa_by_removal, lambda_by_sweep
from visconn.connlib import (
    SeparatorPartition,
    check_deltacut_structure,
    cut_edges_of,
    degree_stats,
    diameter,
    edge_connectivity,
    min_edge_cuts_by_bipartition,
    min_vertex_separator,
    verify_separator,
    vertex_connectivity,
)
from visconn.errors import NotAPartition, TooLarge
from visconn.geom import as_point_set
from visconn.visgraph import Graph, visibility_graph


def G(n, edges):
    return Graph(n, frozenset(edges))


P3 = G(3, [(0, 1), (1, 2)])
K3 = G(3, itertools.combinations(range(3), 2))
K4 = G(4, itertools.combinations(range(4), 2))
WHEEL = visibility_graph(as_point_set([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)]))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G(n, [e for e, k in zip(pairs, keep) if k])


def test_degree_stats():
    assert degree_stats(P3)[0] == 1
    assert degree_stats(WHEEL) == (3, [3, 3, 3, 3, 4])
    assert degree_stats(K4)[0] == 3


def test_diameter():
    assert diameter(K3) == 1
    assert diameter(P3) == 2
    assert diameter(WHEEL) == 2
    assert diameter(G(3, [(0, 1)])) == math.inf


def test_vertex_connectivity_examples():
    assert vertex_connectivity(K4) == 3
    assert vertex_connectivity(P3) == 1
    assert vertex_connectivity(WHEEL) == 3 == kappa_by_removal(5, WHEEL.edges)
    assert vertex_connectivity(G(3, [(0, 1)])) == 0


def test_edge_connectivity_examples():
    assert edge_connectivity(K4) == 3
    assert edge_connectivity(P3) == 1
    assert edge_connectivity(WHEEL) == 3 == lambda_by_sweep(5, WHEEL.edges)


def test_min_cuts_examples():
    cuts = min_edge_cuts_by_bipartition(P3)
    assert [sorted(c.side) for c in cuts] == [[0], [2]]
    assert all(c.size == 1 for c in cuts)
    wheel_cuts = min_edge_cuts_by_bipartition(WHEEL)
    assert [sorted(c.side) for c in wheel_cuts] == [[0], [1], [2], [3]]
    assert all(c.cut_edges == cut_edges_of(WHEEL, c.side) for c in wheel_cuts)
    assert len(min_edge_cuts_by_bipartition(K4)) == 4


def test_sweep_limit():
    with pytest.raises(TooLarge):
        min_edge_cuts_by_bipartition(G(21, [(i, i + 1) for i in range(20)]))


def test_deltacut_structure():
    # A = {0, 1} complete; 0-2, 1-3 into B = {2, 3}; B complete to C = {4}
    g = G(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
    assert degree_stats(g)[0] == 2
    assert check_deltacut_structure(g, {0, 1}, {2, 3}, {4})
    assert not check_deltacut_structure(g, {2, 3}, {0, 1}, {4})
    assert not check_deltacut_structure(g, set(), {0, 1, 2, 3}, {4})
    with pytest.raises(NotAPartition):
        check_deltacut_structure(g, {0, 1}, {1, 2, 3}, {4})
    with pytest.raises(NotAPartition):
        check_deltacut_structure(g, {0}, {2, 3}, {4})


def test_wheel_has_no_deltacut_shape():
    for labels in itertools.product(range(3), repeat=5):
        parts = [{v for v in range(5) if labels[v] == k} for k in range(3)]
        assert not check_deltacut_structure(WHEEL, *parts)


def test_verify_separator():
    assert verify_separator(WHEEL, SeparatorPartition({0}, {2}, {1, 3, 4}))
    assert not verify_separator(WHEEL, SeparatorPartition({0}, {1}, {2, 3, 4}))
    assert not verify_separator(WHEEL, SeparatorPartition({0}, set(), {1, 2, 3, 4}))


def test_min_vertex_separator():
    sep = min_vertex_separator(WHEEL)
    assert len(sep.C) == 3 and verify_separator(WHEEL, sep)
    assert min_vertex_separator(K4) is None


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_connectivity_matches_bruteforce(g):
    kappa, lam = vertex_connectivity(g), edge_connectivity(g)
    delta, _ = degree_stats(g)
    assert kappa == kappa_by_removal(g.n, g.edges)
    assert lam == lambda_by_sweep(g.n, g.edges)
    assert kappa <= lam <= delta


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_min_cuts_attain_lambda(g):
    lam = edge_connectivity(g)
    cuts = min_edge_cuts_by_bipartition(g)
    assert cuts and all(c.size == lam == len(c.cut_edges) for c in cuts)
    assert all(2 * len(c.side) <= g.n for c in cuts)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_separator_is_minimum(g):
    sep = min_vertex_separator(g)
    if sep is None:
        assert len(g.edges) == g.n * (g.n - 1) // 2
    else:
        assert verify_separator(g, sep) and len(sep.C) == vertex_connectivity(g)
        assert sep.A | sep.B | sep.C == set(range(g.n))
