from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import kappa_by_removal, max_on_a_line, on_open_segment
from visconn.connlib import degree_stats, vertex_connectivity
from visconn.errors import PointNotOnCurve, SideConditionsFailed, Unsatisfiable
from visconn.generators import (
    DEFAULT_BASE,
    DEFAULT_CURVE,
    IDENTITY,
    ECPoint,
    EllipticCurve,
    GenConfig,
    SplitMix64,
    default_elliptic_config,
    ec_add,
    ec_multiple,
    elliptic_config,
    pencil_config,
    random_bichromatic,
    random_point_set,
    verify_non_torsion,
)
from visconn.visgraph import max_collinear, max_collinear_ab, visibility_graph

C = DEFAULT_CURVE
G = DEFAULT_BASE


def test_splitmix_reference_stream():
    # reference outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_random_point_set_contract():
    cfg = GenConfig(seed=42, n=8, coord_bound=12)
    P = random_point_set(cfg)
    assert P == random_point_set(cfg)
    assert len(set(P)) == 8
    assert all(0 <= c <= 12 and Fraction(c).denominator == 1 for p in P for c in p)
    assert random_point_set(GenConfig(43, 8, 12)) != P
    with pytest.raises(Unsatisfiable):
        random_point_set(GenConfig(1, 10, 2))


def test_random_point_set_cap():
    for seed in range(20):
        P = random_point_set(GenConfig(seed, 8, 12, max_collinear=3))
        assert max_on_a_line(P) <= 3
    with pytest.raises(ValueError):
        GenConfig(1, 0)


def test_random_bichromatic():
    A, B = random_bichromatic(5, 4, 3, ab_cap=3)
    assert len(A) == 4 and len(B) == 3 and not set(A) & set(B)
    assert max_collinear_ab(A, B) <= 3
    assert (A, B) == random_bichromatic(5, 4, 3, ab_cap=3)


# --- elliptic curves ---------------------------------------------------------------


def test_group_law_examples():
    assert ec_add(C, G, IDENTITY) == G == ec_add(C, IDENTITY, G)
    assert ec_add(C, G, -G).is_identity
    two = ec_add(C, G, G)
    assert (two.x, two.y) == (Fraction(9, 4), Fraction(-21, 8))
    assert two.y**2 == two.x**3 - 2 * two.x
    assert ec_multiple(C, G, 0).is_identity
    assert ec_multiple(C, G, 1) == G
    assert ec_multiple(C, G, 2) == two


def test_off_curve_point_rejected():
    with pytest.raises(PointNotOnCurve):
        ec_add(C, ECPoint(Fraction(1), Fraction(1)), G)


def test_singular_curve_rejected():
    with pytest.raises(ValueError):
        EllipticCurve(0, 0)


def test_default_base_is_not_torsion():
    assert verify_non_torsion(C, G)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_group_law_properties(i, j, k):
    a, b, c = (ec_multiple(C, G, t) for t in (i, j, k))
    ab = ec_add(C, a, b)
    assert C.contains(ab)
    assert ab == ec_add(C, b, a)
    assert ec_add(C, ab, c) == ec_add(C, a, ec_add(C, b, c))
    assert ab == ec_multiple(C, G, i + j)


def _check_elliptic(m):
    ec = default_elliptic_config(m)
    assert len(ec.A) == len(ec.B) == m and len(ec.C) == 2 * m - 1
    for i, a in enumerate(ec.A):
        for j, b in enumerate(ec.B):
            assert on_open_segment(a, ec.C[i + j], b)
    P = ec.points
    assert max_on_a_line(P) == 3
    return P


@pytest.mark.parametrize("m, delta, kappa", [(1, 1, 1), (2, 4, 3), (3, 7, 5)])
def test_elliptic_config_parameters(m, delta, kappa):
    P = _check_elliptic(m)
    V = visibility_graph(P)
    assert degree_stats(V)[0] == delta
    assert vertex_connectivity(V) == kappa
    if m <= 2:
        assert kappa_by_removal(V.n, V.edges) == kappa


def test_elliptic_config_reports_failed_condition():
    # a = b breaks distinctness
    with pytest.raises(SideConditionsFailed) as info:
        elliptic_config(2, C, G, G, ec_multiple(C, G, 6))
    assert info.value.condition
    with pytest.raises(PointNotOnCurve):
        elliptic_config(2, C, ECPoint(Fraction(0), Fraction(1)), G, G)


@pytest.mark.parametrize("ell, rays, n, deg", [(3, 4, 9, 4), (2, 3, 4, 3), (4, 2, 7, 2)])
def test_pencil_config(ell, rays, n, deg):
    P = pencil_config(ell, rays)
    assert len(P) == n
    assert max_collinear(P) == max_on_a_line(P) == ell
    V = visibility_graph(P)
    assert V.degree(0) == deg == (n - 1) // (ell - 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 5), st.integers(1, 5), st.integers(0, 1000))
def test_pencil_apex_degree(ell, rays, seed):
    P = pencil_config(ell, rays, seed)
    assert visibility_graph(P).degree(0) == (len(P) - 1) // (ell - 1)
