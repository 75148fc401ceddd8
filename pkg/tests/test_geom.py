from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import compatible, on_open_segment
from visconn.errors import HullsIntersect, OverlappingSets
from visconn.geom import (
    Line,
    as_point_set,
    ccw_angle,
    convex_hull,
    diamond_angle,
    edges_compatible,
    fmt_scalar,
    orientation,
    pt,
    separating_line,
    strictly_between,
)

coord = st.integers(-6, 6)
point = st.builds(pt, coord, coord)
rational = st.fractions(min_value=-5, max_value=5, max_denominator=4)
rpoint = st.builds(pt, rational, rational)


def seg(a, b, c, d):
    return pt(a, b), pt(c, d)


# --- orientation and betweenness ---------------------------------------------


def test_orientation_signs():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert orientation(pt(0, 0), pt(1, 0), pt(1, -1)) == -1


def test_strictly_between_examples():
    assert strictly_between(pt(0, 0), pt(1, 1), pt(2, 2))
    assert not strictly_between(pt(0, 0), pt(0, 0), pt(2, 2))
    assert not strictly_between(pt(0, 0), pt(1, 2), pt(2, 2))


def test_rational_coordinates_stay_exact():
    third = Fraction(1, 3)
    assert strictly_between(pt(0, 0), pt(third, 2 * third), pt(1, 2))
    assert orientation(pt(0, 0), pt(third, third), pt(Fraction(2, 3), Fraction(2, 3) + Fraction(1, 10**30))) == 1


@given(rpoint, rpoint, rpoint)
def test_orientation_antisymmetric(p, q, r):
    o = orientation(p, q, r)
    assert orientation(q, p, r) == -o
    assert orientation(p, r, q) == -o
    assert orientation(r, q, p) == -o


@given(point, point, point)
def test_between_implies_collinear_and_distinct(p, q, r):
    if p == r:
        return
    if strictly_between(p, q, r):
        assert orientation(p, q, r) == 0 and q != p and q != r
    assert strictly_between(p, q, r) == on_open_segment(p, q, r)


# --- segment compatibility ------------------------------------------------------


def test_compatibility_examples():
    assert not edges_compatible(seg(0, 0, 1, 1), seg(0, 1, 1, 0))
    assert edges_compatible(seg(0, 0, 1, 0), seg(1, 0, 1, 1))
    assert not edges_compatible(seg(0, 0, 2, 0), seg(1, 0, 3, 0))


@pytest.mark.parametrize(
    "s, t, expected",
    [
        (seg(0, 0, 2, 0), seg(1, 0, 1, 1), False),  # endpoint inside the other edge
        (seg(0, 0, 1, 0), seg(1, 0, 2, 0), True),  # collinear, touching at a shared end
        (seg(0, 0, 2, 0), seg(0, 0, 1, 0), False),  # collinear overlap with a shared end
        (seg(0, 0, 1, 0), seg(2, 0, 3, 0), True),  # collinear, apart
        (seg(0, 0, 1, 1), seg(2, 2, 3, 3), True),
        (seg(0, 0, 0, 2), seg(1, 0, 1, 2), True),  # parallel
    ],
)
def test_compatibility_degenerate_cases(s, t, expected):
    assert edges_compatible(s, t) is expected


@settings(max_examples=400)
@given(point, point, point, point)
def test_compatibility_symmetric_and_matches_oracle(a, b, c, d):
    if a == b or c == d:
        return
    got = edges_compatible((a, b), (c, d))
    assert got == edges_compatible((c, d), (a, b)) == edges_compatible((b, a), (d, c))
    assert got == compatible((a, b), (c, d))


# --- hulls ------------------------------------------------------------------------


def test_hull_examples():
    sq = as_point_set([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    assert sorted(convex_hull(sq)) == [0, 1, 2, 3]
    assert convex_hull(as_point_set([(0, 0), (1, 0), (2, 0)])) == [0, 2]
    assert sorted(convex_hull(as_point_set([(0, 0), (3, 0), (0, 3)]))) == [0, 1, 2]
    assert convex_hull(as_point_set([(5, 5)])) == [0]


@given(st.lists(point, min_size=1, max_size=12, unique=True))
def test_hull_edges_support_the_set(pts):
    P = as_point_set(pts)
    h = convex_hull(P)
    if len(h) < 3:
        return
    for k in range(len(h)):
        a, b = P[h[k]], P[h[(k + 1) % len(h)]]
        assert all(orientation(a, b, p) >= 0 for p in P)
    # counterclockwise with no collinear corners
    for k in range(len(h)):
        assert orientation(P[h[k - 1]], P[h[k]], P[h[(k + 1) % len(h)]]) == 1


def test_duplicate_points_rejected():
    with pytest.raises(OverlappingSets):
        as_point_set([(0, 0), (0, 0)])


# --- lines and separation ----------------------------------------------------------


def test_line_normal_form():
    line = Line.through(pt(0, 0), pt(2, 4))
    assert (line.a, line.b, line.c) == (2, -1, 0)
    assert Line.through(pt(1, 0), pt(1, 5)) == Line(1, 0, 1)
    assert Line(Fraction(-1, 2), Fraction(1, 3), 1) == Line(3, -2, -6)
    with pytest.raises(ValueError):
        Line(0, 0, 1)


def test_separating_line_examples():
    line = separating_line([pt(0, 0)], [pt(2, 0)])
    assert line.side(pt(0, 0)) == -line.side(pt(2, 0)) != 0
    with pytest.raises(HullsIntersect):
        separating_line([pt(0, 0), pt(2, 0)], [pt(1, 0)])


@settings(max_examples=200)
@given(st.lists(point, min_size=1, max_size=6, unique=True), st.lists(point, min_size=1, max_size=6, unique=True))
def test_separating_line_strict_or_raises(s1, s2):
    s2 = [pt(p.x + 20, p.y + 3) for p in s2]  # disjoint clusters
    line = separating_line(s1, s2)
    sides1 = {line.side(p) for p in s1}
    sides2 = {line.side(p) for p in s2}
    assert len(sides1) == len(sides2) == 1 and sides1 == {-x for x in sides2} and 0 not in sides1


def test_separating_line_rejects_crossing_hulls():
    with pytest.raises(HullsIntersect):
        separating_line([pt(0, 0), pt(2, 2)], [pt(0, 2), pt(2, 0)])
    with pytest.raises(HullsIntersect):
        separating_line([pt(0, 0), pt(4, 0), pt(0, 4)], [pt(1, 1)])


def test_angles_order_directions():
    dirs = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    keys = [diamond_angle(*d) for d in dirs]
    assert keys == sorted(keys) and keys[0] == 0
    assert all(diamond_angle(-x, -y) - diamond_angle(x, y) in (2, -2) for x, y in dirs)
    assert ccw_angle((1, 0), (0, 1)) == 1


def test_fmt_scalar():
    assert fmt_scalar(Fraction(3)) == "3"
    assert fmt_scalar(Fraction(-6, 4)) == "-3/2"
