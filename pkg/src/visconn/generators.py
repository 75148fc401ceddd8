"""Extremal configurations and seeded random instances.

Random streams come from SplitMix64 (Steele, Lea & Flood), chosen because
it is a few lines of integer arithmetic that any language reproduces
bit-for-bit::

    state += 0x9E3779B97F4A7C15                       (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9           (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB           (mod 2**64)
    return z ^ (z >> 31)

Coordinates are drawn as ``next() % (coord_bound + 1)``, x before y.
"""

from __future__ import annotations

import itertools
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PointNotOnCurve, SideConditionsFailed, Unsatisfiable
from .geom import Point, cross, pt, strictly_between
from .visgraph import max_collinear, max_collinear_ab

MASK64 = (1 << 64) - 1
RETRY_BUDGET = 1000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


@dataclass(frozen=True)
class GenConfig:
    seed: int
    n: int
    coord_bound: int = 12
    max_collinear: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.coord_bound < 1:
            raise ValueError("coord_bound must be at least 1")


def _draw_points(rng: SplitMix64, n: int, bound: int) -> tuple[Point, ...]:
    seen: set = set()
    out = []
    while len(out) < n:
        x = rng.below(bound + 1)
        y = rng.below(bound + 1)
        if (x, y) not in seen:
            seen.add((x, y))
            out.append(pt(x, y))
    return tuple(out)


def random_point_set(cfg: GenConfig) -> tuple[Point, ...]:
    """``cfg.n`` distinct grid points in ``[0, coord_bound]^2``, deterministic in the seed.

    With a collinearity cap, whole sets are redrawn from the same stream
    until the cap holds or the retry budget runs out.
    """
    if cfg.n > (cfg.coord_bound + 1) ** 2:
        raise Unsatisfiable(f"{cfg.n} distinct points do not fit in a {cfg.coord_bound + 1}-grid")
    rng = SplitMix64(cfg.seed)
    for _ in range(RETRY_BUDGET):
        P = _draw_points(rng, cfg.n, cfg.coord_bound)
        if cfg.max_collinear is None or cfg.n < 3 or max_collinear(P) <= cfg.max_collinear:
            return P
    raise Unsatisfiable(f"no point set with at most {cfg.max_collinear} collinear after {RETRY_BUDGET} draws")


def random_bichromatic(
    seed: int,
    na: int,
    nb: int,
    coord_bound: int = 12,
    ab_cap: Optional[int] = None,
    noncollinear: bool = True,
) -> tuple[tuple[Point, ...], tuple[Point, ...]]:
    """Disjoint random classes ``A`` (first ``na`` draws) and ``B``."""
    cfg = GenConfig(seed, na + nb, coord_bound)
    if cfg.n > (coord_bound + 1) ** 2:
        raise Unsatisfiable("grid too small")
    rng = SplitMix64(seed)
    for _ in range(RETRY_BUDGET):
        P = _draw_points(rng, na + nb, coord_bound)
        A, B = P[:na], P[na:]
        if noncollinear and max_collinear(P) == len(P):
            continue
        if ab_cap is not None and max_collinear_ab(A, B) > ab_cap:
            continue
        return A, B
    raise Unsatisfiable("no admissible bichromatic instance within the retry budget")


# --- elliptic curves -------------------------------------------------------


@dataclass(frozen=True)
class EllipticCurve:
    """``y^2 = x^3 + alpha*x + beta`` over the rationals."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.discriminant == 0:
            raise ValueError(f"singular curve: {self}")

    @property
    def discriminant(self) -> Fraction:
        return -16 * (4 * self.alpha**3 + 27 * self.beta**2)

    def contains(self, P: "ECPoint") -> bool:
        if P.is_identity:
            return True
        return P.y**2 == P.x**3 + self.alpha * P.x + self.beta

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.alpha})x + ({self.beta})"


@dataclass(frozen=True)
class ECPoint:
    """An affine curve point, or the identity when both coordinates are ``None``."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("give both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "ECPoint":
        return self if self.is_identity else ECPoint(self.x, -self.y)

    def as_point(self) -> Point:
        if self.is_identity:
            raise ValueError("the identity has no affine coordinates")
        return Point(self.x, self.y)


IDENTITY = ECPoint()
DEFAULT_CURVE = EllipticCurve(Fraction(-2), Fraction(0))
DEFAULT_BASE = ECPoint(Fraction(-1), Fraction(1))


def _require_on(C: EllipticCurve, *points: ECPoint) -> None:
    for P in points:
        if not C.contains(P):
            raise PointNotOnCurve(f"({P.x}, {P.y}) is not on {C}")


def ec_add(C: EllipticCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-and-tangent group law; vertical chords and tangents give the identity."""
    _require_on(C, P, Q)
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return IDENTITY
        slope = (3 * P.x**2 + C.alpha) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x = slope**2 - P.x - Q.x
    y = slope * (P.x - x) - P.y
    return ECPoint(x, y)


def ec_multiple(C: EllipticCurve, P: ECPoint, k: int) -> ECPoint:
    """``k * P`` by double-and-add."""
    _require_on(C, P)
    if k < 0:
        raise ValueError("k must be non-negative")
    result, addend = IDENTITY, P
    while k:
        if k & 1:
            result = ec_add(C, result, addend)
        addend = ec_add(C, addend, addend)
        k >>= 1
    return result


def verify_non_torsion(C: EllipticCurve, P: ECPoint, count: int = 16) -> bool:
    """The first ``count`` multiples of ``P`` are pairwise distinct."""
    seen = set()
    Q = IDENTITY
    for _ in range(count):
        Q = ec_add(C, Q, P)
        if Q in seen or Q.is_identity:
            return False
        seen.add(Q)
    return True


@dataclass(frozen=True)
class EllipticConfig:
    A: tuple
    B: tuple
    C: tuple

    @property
    def points(self) -> tuple:
        return self.A + self.B + self.C


def elliptic_config(m: int, C: EllipticCurve, a: ECPoint, b: ECPoint, e: ECPoint) -> EllipticConfig:
    """Two clusters of ``m`` curve points separated by ``2m - 1`` blockers.

    ``A = {a + i e}``, ``B = {b + j e}``, ``C = {-(a + b + k e)}``. The
    geometric conditions the tight bound needs are checked exactly; on
    failure the caller should retry with another ``e``.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    _require_on(C, a, b, e)
    if a.is_identity or b.is_identity or e.is_identity:
        raise SideConditionsFailed("nonzero", "a, b and e must be affine points")
    c0 = -ec_add(C, a, b)
    if c0.is_identity or len({a, b, c0}) < 3:
        raise SideConditionsFailed("distinct-abc", "a, b, -(a+b) must be distinct affine points")

    A = [a]
    for _ in range(m - 1):
        A.append(ec_add(C, A[-1], e))
    B = [b]
    for _ in range(m - 1):
        B.append(ec_add(C, B[-1], e))
    Cs = [c0]
    for _ in range(2 * m - 2):
        Cs.append(ec_add(C, Cs[-1], -e))
    allpts = A + B + Cs
    if any(p.is_identity for p in allpts):
        raise SideConditionsFailed("affine", "a multiple landed on the identity")
    if len(set(allpts)) != len(allpts):
        raise SideConditionsFailed("distinct", "generated points coincide")
    PA = tuple(p.as_point() for p in A)
    PB = tuple(p.as_point() for p in B)
    PC = tuple(p.as_point() for p in Cs)

    for i in range(m):
        for j in range(m):
            if not strictly_between(PA[i], PC[i + j], PB[j]):
                raise SideConditionsFailed("blocking", f"C[{i + j}] is not strictly between A[{i}] and B[{j}]")

    pts = PA + PB + PC
    intended = {frozenset((i, m + j, 2 * m + i + j)) for i in range(m) for j in range(m)}
    for tri in itertools.combinations(range(len(pts)), 3):
        if cross(pts[tri[0]], pts[tri[1]], pts[tri[2]]) == 0 and frozenset(tri) not in intended:
            raise SideConditionsFailed("extra-collinear", f"unexpected collinear triple {tri}")
    if len(pts) >= 3 and max_collinear(pts) > 3:
        raise SideConditionsFailed("max-collinear", "four or more points on a line")
    return EllipticConfig(PA, PB, PC)


# Parameters found by default_elliptic_config's search for the default curve:
# a = s*G, b = t*G, e = N*G with G = DEFAULT_BASE.
_SEARCH_S = range(1, 9)
_SEARCH_N = range(2, 200)


def default_elliptic_config(m: int, curve: EllipticCurve = DEFAULT_CURVE, base: ECPoint = DEFAULT_BASE) -> EllipticConfig:
    """Deterministic search for a valid configuration on ``curve``.

    Tries ``a = s*G``, ``b = t*G`` and escalates ``e`` through larger
    multiples of ``G`` until every side condition holds.
    """
    if not verify_non_torsion(curve, base):
        raise ValueError("base point has small order")
    multiples = {1: base}

    def mult(k: int) -> ECPoint:
        if k not in multiples:
            multiples[k] = ec_multiple(curve, base, k)
        return multiples[k]

    for n_e in _SEARCH_N:
        e = mult(n_e)
        for s in _SEARCH_S:
            for t in _SEARCH_S:
                if t == s:
                    continue
                try:
                    return elliptic_config(m, curve, mult(s), mult(t), e)
                except SideConditionsFailed:
                    continue
    raise Unsatisfiable("no elliptic configuration found in the search window")


# --- pencils ---------------------------------------------------------------


def pencil_config(ell: int, rays: int, seed: int = 1) -> tuple[Point, ...]:
    """Apex ``(0, 0)`` followed by ``ell - 1`` points on each of ``rays`` rays.

    Every ray from the apex carries exactly ``ell`` points, so the apex has
    degree ``rays = (n - 1) / (ell - 1)``. Ray directions are drawn at
    random and the whole set is redrawn until no line holds more than
    ``ell`` points.
    """
    if ell < 2 or rays < 1:
        raise ValueError("need ell >= 2 and rays >= 1")
    rng = SplitMix64(seed)
    span = 8 * (rays + ell)
    for _ in range(RETRY_BUDGET):
        dirs: list[tuple[int, int]] = []
        keys = set()
        while len(dirs) < rays:
            dx = rng.below(2 * span + 1) - span
            dy = rng.below(2 * span + 1) - span
            if dx == 0 and dy == 0:
                continue
            g = gcd(dx, dy)
            key = (dx // g, dy // g)
            if key in keys or (-key[0], -key[1]) in keys:
                continue
            keys.add(key)
            dirs.append(key)
        P = [pt(0, 0)]
        for dx, dy in dirs:
            # uneven spacing along each ray keeps cross-ray alignments rare
            scale = 1 + rng.below(3)
            P.extend(pt(dx * scale * k, dy * scale * k) for k in range(1, ell))
        P = tuple(P)
        if len(set(P)) == len(P) and max_collinear(P) == max(ell, 2 if len(P) >= 2 else 1):
            return P
    raise Unsatisfiable("could not place the pencil without extra collinearities")

