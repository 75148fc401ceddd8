"""Per-instance claim checking and a seeded hunt for low-connectivity instances.

A report carries a fixed registry of claims. Every claim except the
conjecture entry is a proven statement about visibility graphs, so a
``fail`` there means this package has a bug.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .connlib import (
    SeparatorPartition,
    degree_stats,
    diameter,
    edge_connectivity,
    min_edge_cuts_by_bipartition,
    verify_separator,
    vertex_connectivity,
)
from .errors import PreconditionViolated
from .generators import GenConfig, random_point_set
from .geom import (
    Point,
    as_point_set,
    collinear,
    edges_compatible,
    orientation,
    point_in_closed_triangle,
    strictly_between,
)
from .visgraph import bivisibility_graph, max_collinear, norm_edge, visibility_graph

PASS, FAIL, NA = "pass", "fail", "na"

INSTANCE_CLAIMS = (
    "a_collinear_detection",
    "b_diameter",
    "c_lambda_eq_delta",
    "d_collinearity_bound",
    "e_half_delta",
    "f_two_thirds_small_ell",
    "g_conjecture",
    "h_min_cuts_are_stars",
    "i_equiv_2",
    "i_equiv_3",
)
BIVIS_CLAIMS = (
    "j_one_nontrivial_component",
    "k_connected_iff_no_isolated",
    "l_triangle_neighbour",
)
INFORMATIONAL = frozenset({"g_conjecture"})

STAR_GATE = 16
TRIANGLE_BUDGET = 2000


@dataclass
class Claim:
    id: str
    status: str
    details: str = ""


@dataclass
class Candidate:
    """An instance with 3*kappa < 2*delta + 1, kept with its report."""

    seed: int
    points: tuple
    report: "Report"


@dataclass
class Report:
    descriptor: str
    measures: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    candidates: list = field(default_factory=list)

    def claim(self, cid: str) -> Claim:
        for c in self.claims:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def status(self, cid: str) -> str:
        return self.claim(cid).status

    def theorem_failures(self) -> list[str]:
        return [c.id for c in self.claims if c.status == FAIL and c.id not in INFORMATIONAL]

    @property
    def ok(self) -> bool:
        return not self.theorem_failures()

    def lines(self) -> list[str]:
        out = [f"descriptor={self.descriptor}"]
        out += [f"measure.{k}={_fmt(v)}" for k, v in self.measures.items()]
        for c in self.claims:
            out.append(f"claim.{c.id}={c.status}")
            if c.details:
                out.append(f"claim.{c.id}.details={c.details}")
        return sorted(out)

    def serialize(self) -> str:
        return "".join(line + "\n" for line in self.lines())


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v == math.inf:
        return "inf"
    return str(v)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check(ok: bool, details: str = "") -> Claim:
    return Claim("", PASS if ok else FAIL, details)


# --- single instances --------------------------------------------------------


def check_instance(P: Sequence[Point], descriptor: str = "instance", skip: Iterable[str] = ()) -> Report:
    """Measure n, l, delta, kappa, lambda and the diameter, then evaluate every claim.

    Claims named in ``skip`` are recorded as ``na`` without being computed.
    """
    P = as_point_set(P)
    n = len(P)
    if n < 2:
        raise ValueError("need at least two points")
    skip = set(skip)
    G = visibility_graph(P)
    ell = max_collinear(P)
    delta, degrees = degree_stats(G)
    kappa = vertex_connectivity(G)
    lam = edge_connectivity(G)
    diam = diameter(G)
    is_col = collinear(P)

    rep = Report(descriptor)
    rep.measures = {
        "n": n,
        "ell": ell,
        "delta": delta,
        "kappa": kappa,
        "lambda": lam,
        "diameter": diam,
        "collinear": is_col,
    }
    found: dict[str, Claim] = {}

    # two independent collinearity tests must agree
    found["a_collinear_detection"] = _check(is_col == (ell == n), f"collinear={_fmt(is_col)}")
    found["i_equiv_2"] = _check(
        len({kappa >= 2, lam >= 2, delta >= 2, not is_col}) == 1,
        f"kappa>=2:{_fmt(kappa >= 2)}",
    )
    found["i_equiv_3"] = _check(len({kappa >= 3, lam >= 3, delta >= 3}) == 1, f"kappa>=3:{_fmt(kappa >= 3)}")

    if is_col:
        for cid in INSTANCE_CLAIMS:
            found.setdefault(cid, Claim(cid, NA, "collinear"))
    else:
        found["b_diameter"] = _check(diam <= 2, f"diameter={_fmt(diam)}")
        found["c_lambda_eq_delta"] = _check(lam == delta, f"lambda={lam} delta={delta}")
        need = _ceil_div(n - 1, ell - 1)
        found["d_collinearity_bound"] = _check(kappa >= need, f"kappa={kappa} bound={need}")
        found["e_half_delta"] = _check(2 * kappa >= delta + 2, f"2kappa={2 * kappa} delta+2={delta + 2}")
        slack = 3 * kappa - (2 * delta + 1)
        tight = "tight" if slack == 0 else f"slack={slack}"
        if ell <= 4:
            found["f_two_thirds_small_ell"] = _check(slack >= 0, tight)
        else:
            found["f_two_thirds_small_ell"] = Claim("", NA, f"ell={ell}")
        found["g_conjecture"] = _check(slack >= 0, tight if slack >= 0 else f"candidate slack={slack}")
        if "h_min_cuts_are_stars" in skip:
            pass
        elif n <= STAR_GATE:
            cuts = min_edge_cuts_by_bipartition(G)
            bad = [c for c in cuts if len(c.side) != 1 or degrees[next(iter(c.side))] != delta]
            found["h_min_cuts_are_stars"] = _check(not bad, f"cuts={len(cuts)} non_star={len(bad)}")
        else:
            found["h_min_cuts_are_stars"] = Claim("", NA, f"n>{STAR_GATE}")

    for cid in INSTANCE_CLAIMS:
        c = found.get(cid)
        if cid in skip and not (c and c.status == NA):
            c = Claim(cid, NA, "skipped")
        rep.claims.append(Claim(cid, c.status, c.details))
    return rep


# --- bivisibility -----------------------------------------------------------


def _components(n: int, edges: Iterable) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    seen: set[int] = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        comps.append(comp)
    return comps


def _triangle_holds(base: Sequence[Point], adj: list, a: int, b: int, c: int) -> bool:
    """a or b has a neighbour inside closed triangle abc but off the closed segment ab."""
    pa, pb, pc = base[a], base[b], base[c]
    for u in (a, b):
        for w in adj[u]:
            q = base[w]
            if not point_in_closed_triangle(q, pa, pb, pc):
                continue
            if q == pa or q == pb or strictly_between(pa, q, pb):
                continue
            return True
    return False


def check_bivisibility(A: Sequence[Point], B: Sequence[Point], descriptor: str = "bivis") -> Report:
    """Component structure of the bivisibility graph plus a triangle-neighbour spot check."""
    A, B = as_point_set(A), as_point_set(B)
    if not A or not B:
        raise ValueError("both classes must be nonempty")
    if collinear(list(A) + list(B)):
        raise PreconditionViolated("A and B together are collinear")
    H = bivisibility_graph(A, B)
    n = H.n
    comps = _components(n, H.edges)
    nontrivial = sum(1 for c in comps if len(c) > 1)
    isolated = sum(1 for c in comps if len(c) == 1)
    connected = len(comps) == 1

    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in H.edges:
        adj[i].add(j)
        adj[j].add(i)
    tested = failed = 0
    na = len(A)
    for a, b, c in itertools.product(range(na), range(na, n), range(n)):
        if tested >= TRIANGLE_BUDGET:
            break
        if c in (a, b) or orientation(H.base[a], H.base[b], H.base[c]) == 0:
            continue
        tested += 1
        if not _triangle_holds(H.base, adj, a, b, c):
            failed += 1

    rep = Report(descriptor)
    rep.measures = {
        "n_a": len(A),
        "n_b": len(B),
        "edges": len(H.edges),
        "nontrivial_components": nontrivial,
        "isolated": isolated,
        "connected": connected,
    }
    rep.claims = [
        Claim("j_one_nontrivial_component", PASS if nontrivial <= 1 else FAIL, f"components={nontrivial}"),
        Claim(
            "k_connected_iff_no_isolated",
            PASS if connected == (isolated == 0) else FAIL,
            f"connected={_fmt(connected)} isolated={isolated}",
        ),
        Claim("l_triangle_neighbour", PASS if failed == 0 else FAIL, f"triangles={tested} failed={failed}"),
    ]
    return rep


def check_observation_bound(P: Sequence[Point], part: SeparatorPartition, E: Iterable) -> bool:
    """A separator C meets every non-crossing bichromatic edge between its sides.

    ``E`` holds index pairs into ``P``, each joining ``part.A`` to ``part.B``
    and visible with respect to ``A u B``. Returns whether ``|C| >= |E|``
    and every edge of ``E`` has a point of C in its open segment.
    """
    P = as_point_set(P)
    G = visibility_graph(P)
    if part.A | part.B | part.C != set(range(len(P))) or not verify_separator(G, part):
        raise PreconditionViolated("partition does not separate A from B in the visibility graph")
    E = sorted({norm_edge(i, j) for i, j in E})
    sides = [p for k, p in enumerate(P) if k in part.A or k in part.B]
    for i, j in E:
        if not ((i in part.A and j in part.B) or (i in part.B and j in part.A)):
            raise PreconditionViolated(f"edge ({i}, {j}) does not join A to B")
        if any(strictly_between(P[i], q, P[j]) for q in sides):
            raise PreconditionViolated(f"edge ({i}, {j}) is not a bivisibility edge")
    segs = [(P[i], P[j]) for i, j in E]
    for s, t in itertools.combinations(segs, 2):
        if not edges_compatible(s, t):
            raise PreconditionViolated("edges of E cross")
    pierced = all(any(strictly_between(a, P[c], b) for c in part.C) for a, b in segs)
    return len(part.C) >= len(E) and pierced


# --- hunting ------------------------------------------------------------------


@dataclass(frozen=True)
class HuntConfig:
    """``trials`` instances drawn with seeds ``template.seed + t``."""

    trials: int
    template: GenConfig
    claims: tuple = INSTANCE_CLAIMS

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trial count must be at least 1")
        unknown = set(self.claims) - set(INSTANCE_CLAIMS)
        if unknown:
            raise ValueError(f"unknown claims: {sorted(unknown)}")


def _trial(args) -> tuple[int, tuple, Report]:
    cfg, skip = args
    P = random_point_set(cfg)
    return cfg.seed, P, check_instance(P, f"seed={cfg.seed}", skip=skip)


def hunt(cfg: HuntConfig, workers: int = 1) -> Report:
    """Run ``check_instance`` on every trial and aggregate per claim.

    Instances where the conjecture bound fails are kept as candidates;
    theorem failures are listed by seed. Output does not depend on
    ``workers``.
    """
    skip = tuple(c for c in INSTANCE_CLAIMS if c not in cfg.claims)
    jobs = [(replace(cfg.template, seed=cfg.template.seed + t), skip) for t in range(cfg.trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_trial, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_trial(j) for j in jobs]

    counts = {cid: {PASS: 0, FAIL: 0, NA: 0} for cid in cfg.claims}
    failing_seeds: list[int] = []
    candidates: list[Candidate] = []
    collinear_count = 0
    for seed, P, rep in results:
        for c in rep.claims:
            if c.id in counts:
                counts[c.id][c.status] += 1
        if rep.measures["collinear"]:
            collinear_count += 1
        if any(f in cfg.claims for f in rep.theorem_failures()):
            failing_seeds.append(seed)
        if "g_conjecture" in cfg.claims and rep.status("g_conjecture") == FAIL:
            candidates.append(Candidate(seed, P, rep))

    t = cfg.template
    out = Report(f"hunt seed={t.seed} n={t.n} bound={t.coord_bound} trials={cfg.trials}")
    out.measures = {
        "trials": cfg.trials,
        "collinear_instances": collinear_count,
        "theorem_failures": len(failing_seeds),
        "candidates": len(candidates),
    }
    if failing_seeds:
        out.measures["failing_seeds"] = ",".join(map(str, failing_seeds))
    if candidates:
        out.measures["candidate_seeds"] = ",".join(str(c.seed) for c in candidates)
    for cid in cfg.claims:
        k = counts[cid]
        status = FAIL if k[FAIL] and cid not in INFORMATIONAL else PASS
        if k[PASS] == 0 and k[FAIL] == 0:
            status = NA
        out.claims.append(Claim(cid, status, f"pass={k[PASS]} fail={k[FAIL]} na={k[NA]}"))
    out.candidates = candidates
    return out

