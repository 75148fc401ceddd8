"""Exact rational planar primitives.

Coordinates are :class:`fractions.Fraction` throughout; no predicate in this
package ever touches a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import HullsIntersect, OverlappingSets

Scalar = Fraction
Number = Union[int, str, Fraction]


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __repr__(self) -> str:
        return f"Point({fmt_scalar(self.x)}, {fmt_scalar(self.y)})"


PointSet = tuple  # tuple[Point, ...]; index in the tuple is the vertex id
Segment = tuple  # (Point, Point)


def pt(x: Number, y: Number) -> Point:
    return Point(Fraction(x), Fraction(y))


def fmt_scalar(v: Fraction) -> str:
    """``p/q`` in lowest terms, integers without ``/1``."""
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def as_point_set(points: Iterable) -> tuple[Point, ...]:
    """Coerce to a tuple of :class:`Point`, rejecting repeated points."""
    out = tuple(p if isinstance(p, Point) else pt(*p) for p in points)
    if len(set(out)) != len(out):
        raise OverlappingSets("point set contains repeated points")
    return out


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear."""
    return _sign(cross(p, q, r))


def strictly_between(p: Point, q: Point, r: Point) -> bool:
    """True iff ``q`` lies in the open segment ``pr``."""
    if cross(p, q, r) != 0:
        return False
    # q on the line; inside iff it projects strictly between the ends
    d1 = (q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y)
    d2 = (q.x - r.x) * (p.x - r.x) + (q.y - r.y) * (p.y - r.y)
    return d1 > 0 and d2 > 0


def on_closed_segment(p: Point, q: Point, r: Point) -> bool:
    return q == p or q == r or strictly_between(p, q, r)


def collinear(points: Sequence[Point]) -> bool:
    if len(points) < 3:
        return True
    p = points[0]
    q = next((s for s in points if s != p), None)
    if q is None:
        return True
    return all(cross(p, q, r) == 0 for r in points)


def edges_compatible(s1: Segment, s2: Segment) -> bool:
    """Whether two segments can both be edges of a non-crossing geometric graph.

    A shared endpoint is fine. Any other contact (a proper crossing, an
    endpoint touching the other's interior, collinear overlap of positive
    length) is not.
    """
    a, b = s1
    c, d = s2
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return False
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    if o1 == o2 == 0:
        # same supporting line: compare parameter intervals along ab
        ux, uy = b.x - a.x, b.y - a.y

        def t(p: Point) -> Fraction:
            return (p.x - a.x) * ux + (p.y - a.y) * uy

        lo1, hi1 = sorted((t(a), t(b)))
        lo2, hi2 = sorted((t(c), t(d)))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo < hi:
            return False
        if lo == hi:
            return bool(shared)
        return True
    if shared:
        # distinct supporting lines meet only at the shared endpoint
        return True
    if o1 * o2 < 0 and o3 * o4 < 0:
        return False
    # touching: an endpoint of one lies on the other
    if on_closed_segment(a, c, b) or on_closed_segment(a, d, b):
        return False
    if on_closed_segment(c, a, d) or on_closed_segment(c, b, d):
        return False
    return True


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Counterclockwise hull vertex indices (monotone chain).

    Collinear boundary points are dropped; a collinear input yields its two
    extreme points.
    """
    if not points:
        return []
    order = sorted(range(len(points)), key=lambda i: (points[i], i))
    uniq: list[int] = []
    for i in order:
        if not uniq or points[uniq[-1]] != points[i]:
            uniq.append(i)
    if len(uniq) == 1:
        return uniq

    def chain(idx: Iterable[int]) -> list[int]:
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and cross(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(uniq)
    upper = chain(reversed(uniq))
    hull = lower[:-1] + upper[:-1]
    return hull


@dataclass(frozen=True)
class Line:
    """The locus ``a*x + b*y = c`` in lowest integer terms."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        den = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * den), int(b * den), int(c * den)
        g = math.gcd(math.gcd(ia, ib), ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", Fraction(ia))
        object.__setattr__(self, "b", Fraction(ib))
        object.__setattr__(self, "c", Fraction(ic))

    @classmethod
    def through(cls, p: Point, q: Point) -> "Line":
        if p == q:
            raise ValueError("need two distinct points")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        return _sign(self.value(p))

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    @property
    def direction(self) -> tuple[Fraction, Fraction]:
        """Direction along the line; the positive side lies to its left."""
        return (self.b, -self.a)

    def position(self, p: Point) -> Fraction:
        """Monotone coordinate of ``p`` along :attr:`direction`."""
        dx, dy = self.direction
        return p.x * dx + p.y * dy

    def __str__(self) -> str:
        return f"{fmt_scalar(self.a)}*x + {fmt_scalar(self.b)}*y = {fmt_scalar(self.c)}"


def _closest_on_segment(p: Point, a: Point, b: Point) -> Point:
    if a == b:
        return a
    ux, uy = b.x - a.x, b.y - a.y
    t = ((p.x - a.x) * ux + (p.y - a.y) * uy) / (ux * ux + uy * uy)
    t = min(max(t, Fraction(0)), Fraction(1))
    return Point(a.x + t * ux, a.y + t * uy)


def _hull_edges(points: Sequence[Point]) -> list[tuple[Point, Point]]:
    hull = [points[i] for i in convex_hull(points)]
    if len(hull) == 1:
        return [(hull[0], hull[0])]
    if len(hull) == 2:
        return [(hull[0], hull[1])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


def _dist2(p: Point, q: Point) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def separating_line(s1: Sequence[Point], s2: Sequence[Point]) -> Line:
    """A line with all of ``s1`` strictly on one side and ``s2`` on the other.

    Uses the closest pair of points between the two hull boundaries; its
    perpendicular bisector separates strictly whenever the hulls are
    disjoint. Every point is re-checked before returning.
    """
    if not s1 or not s2:
        raise ValueError("both sets must be nonempty")
    e1, e2 = _hull_edges(s1), _hull_edges(s2)
    best = None
    for verts, edges, flip in ((e1, e2, False), (e2, e1, True)):
        for v in {p for edge in verts for p in edge}:
            for a, b in edges:
                q = _closest_on_segment(v, a, b)
                d = _dist2(v, q)
                if best is None or d < best[0]:
                    best = (d, q, v) if flip else (d, v, q)
    d, p, q = best
    if d == 0:
        raise HullsIntersect("convex hulls touch")
    nx, ny = q.x - p.x, q.y - p.y
    line = Line(nx, ny, (nx * (p.x + q.x) + ny * (p.y + q.y)) / 2)
    sides1 = {line.side(p) for p in s1}
    sides2 = {line.side(p) for p in s2}
    if len(sides1) != 1 or len(sides2) != 1 or sides1 == sides2 or 0 in sides1 | sides2:
        raise HullsIntersect("no strict separator exists")
    return line


def point_in_closed_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    o = orientation(a, b, c)
    if o == 0:
        raise ValueError("degenerate triangle")
    return orientation(a, b, p) * o >= 0 and orientation(b, c, p) * o >= 0 and orientation(c, a, p) * o >= 0


def integer_coords(points: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale every coordinate by a common denominator.

    Orientation and betweenness are invariant under uniform positive
    scaling, so hot loops can run on plain ints.
    """
    den = 1
    for p in points:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    return [(int(p.x * den), int(p.y * den)) for p in points]


def direction_key(dx: int, dy: int) -> tuple[int, int]:
    """Canonical representative of the undirected direction of an int vector."""
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def ray_key(dx: int, dy: int) -> tuple[int, int]:
    """Canonical representative of a directed ray direction of an int vector."""
    g = math.gcd(dx, dy)
    return dx // g, dy // g


def diamond_angle(dx, dy) -> Fraction:
    """Exact monotone surrogate for ``atan2`` in ``[0, 4)``.

    Opposite directions differ by exactly 2, so a relative value below 2
    means a counterclockwise turn of less than pi.
    """
    dx, dy = Fraction(dx), Fraction(dy)
    if dx == 0 and dy == 0:
        raise ValueError("zero vector has no direction")
    if dy >= 0:
        return dy / (dx + dy) if dx >= 0 else 1 - dx / (-dx + dy)
    return 2 - dy / (-dx - dy) if dx < 0 else 3 + dx / (dx - dy)


def ccw_angle(u, v) -> Fraction:
    """Counterclockwise turn from direction ``u`` to ``v`` in diamond units."""
    return (diamond_angle(*v) - diamond_angle(*u)) % 4


def cw_angle(u, v) -> Fraction:
    return (diamond_angle(*u) - diamond_angle(*v)) % 4
