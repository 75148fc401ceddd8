"""Command-line front end: ``visconn <command> [<action>] [flags]``.

Exit status is 0 on success, 1 on usage, parse or precondition errors and 2
when a verification claim fails or a conjecture candidate turns up.
Errors go to stderr as a single ``error[<code>]: <message>`` line.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import constructive as con
from . import generators as gen
from .connlib import (
    SeparatorPartition,
    degree_stats,
    diameter,
    edge_connectivity,
    min_vertex_separator,
    verify_separator,
    vertex_connectivity,
)
from .errors import ParseError, VisConnError
from .fileio import format_edges, format_points, parse_edges, parse_points
from .geom import Point, fmt_scalar
from .svg import render
from .verifier import FAIL, HuntConfig, check_bivisibility, check_instance, hunt
from .visgraph import GeomGraph, bivisibility_graph, max_collinear, visibility_graph

EXIT_OK, EXIT_ERROR, EXIT_CLAIM = 0, 1, 2


class UsageError(VisConnError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


ACTIONS = {
    "vis": ("build",),
    "bivis": ("build",),
    "analyze": None,
    "paths": ("onebend", "four"),
    "cut": ("hamsandwich",),
    "tree": ("anchored", "bivis", "forest"),
    "subgraph": ("pavel",),
    "join": None,
    "gen": ("pencil", "elliptic", "random"),
    "verify": ("instance", "bivis", "hunt"),
    "plot": None,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--in", dest="infile", default="-", help="input point file ('-' for stdin)")
    common.add_argument("--out", dest="outfile", default="-", help="output file ('-' for stdout)")
    common.add_argument("--format", choices=("edges", "report", "svg"))
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--n", type=int, default=8)
    common.add_argument("--bound", type=int, default=12)
    common.add_argument("--m", type=int, default=2)
    common.add_argument("--ell", type=int)
    common.add_argument("--rays", type=int, default=4)
    common.add_argument("--trials", type=int, default=100)
    common.add_argument("--v", type=int, default=0)
    common.add_argument("--w", type=int, default=1)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--edges", help="edge-list file (plot, join)")
    common.add_argument("--in2", help="second point file (join)")
    common.add_argument("--edges2", help="second edge-list file (join)")
    common.add_argument("--candidates", default="hunt-candidates", help="directory for conjecture candidates")
    common.add_argument("--bichromatic", action="store_true", help="gen random: emit n A-points and n B-points")

    parser = _Parser(prog="visconn", description="Visibility graphs of planar point sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, actions in ACTIONS.items():
        p = sub.add_parser(name, parents=[common])
        if actions:
            p.add_argument("action", choices=actions)
    return parser


# --- io helpers ---------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _points(path: str) -> tuple[tuple[Point, ...], Optional[tuple[str, ...]]]:
    return parse_points(_read(path))


def _classes(path: str) -> tuple[list[int], list[int], tuple[Point, ...]]:
    """Indices of A- and B-labelled points."""
    P, labels = _points(path)
    if labels is None:
        raise ParseError(f"{path}: points need A/B labels")
    ia = [k for k, t in enumerate(labels) if t == "A"]
    ib = [k for k, t in enumerate(labels) if t == "B"]
    if len(ia) + len(ib) != len(P):
        raise ParseError(f"{path}: only A and B labels are allowed here")
    return ia, ib, P


def _kv(pairs: dict) -> str:
    return "".join(f"{k}={v}\n" for k, v in sorted(pairs.items()))


def _emit_graph(args, P, edges, labels=None) -> None:
    if args.format == "svg":
        _write(args.outfile, render(P, edges, labels))
    else:
        _write(args.outfile, format_edges(len(P), edges))


# --- commands -----------------------------------------------------------------


def cmd_vis(args) -> int:
    if args.format == "report":
        return cmd_analyze(args)
    P, labels = _points(args.infile)
    G = visibility_graph(P)
    _emit_graph(args, P, G.edges, labels)
    return EXIT_OK


def cmd_bivis(args) -> int:
    ia, ib, P = _classes(args.infile)
    H = bivisibility_graph([P[k] for k in ia], [P[k] for k in ib])
    order = ia + ib
    edges = [(order[i], order[j]) for i, j in H.edges]
    _emit_graph(args, P, edges, _labels_for(P, ia))
    return EXIT_OK


def _labels_for(P, ia) -> list[str]:
    s = set(ia)
    return ["A" if k in s else "B" for k in range(len(P))]


def cmd_analyze(args) -> int:
    P, labels = _points(args.infile)
    G = visibility_graph(P)
    delta, degrees = degree_stats(G)
    info = {
        "n": len(P),
        "edges": len(G.edges),
        "ell": max_collinear(P) if len(P) >= 2 else 1,
        "delta": delta,
        "degrees": ",".join(map(str, degrees)),
        "diameter": "inf" if diameter(G) == float("inf") else diameter(G),
    }
    if len(P) >= 2:
        info["kappa"] = vertex_connectivity(G)
        info["lambda"] = edge_connectivity(G)
        sep = min_vertex_separator(G)
        info["min_separator"] = "none" if sep is None else ",".join(map(str, sorted(sep.C)))
    if labels is not None:
        part = SeparatorPartition(
            frozenset(k for k, t in enumerate(labels) if t == "A"),
            frozenset(k for k, t in enumerate(labels) if t == "B"),
            frozenset(k for k, t in enumerate(labels) if t == "C"),
        )
        info["labelled_separator"] = "true" if verify_separator(G, part) else "false"
    _write(args.outfile, _kv(info))
    return EXIT_OK


def cmd_paths(args) -> int:
    P, _ = _points(args.infile)
    if args.action == "four":
        system = con.four_paths(visibility_graph(P), args.v, args.w)
    else:
        system = con.one_bend_paths(P, args.v, args.w)
    if args.format == "report":
        info = {"count": len(system), "valid": "true" if system.is_valid() else "false"}
        if args.action == "onebend":
            info["bound"] = con.one_bend_bound(P)
        _write(args.outfile, _kv(info))
    else:
        _write(args.outfile, "".join(" ".join(map(str, p)) + "\n" for p in system.paths))
    return EXIT_OK


def cmd_cut(args) -> int:
    ia, ib, P = _classes(args.infile)
    A, B = [P[k] for k in ia], [P[k] for k in ib]
    line = con.ham_sandwich(A, B)
    pa, na = con.closed_side_counts(line, A)
    pb, nb = con.closed_side_counts(line, B)
    info = {
        "a": fmt_scalar(line.a),
        "b": fmt_scalar(line.b),
        "c": fmt_scalar(line.c),
        "A_nonneg": pa,
        "A_nonpos": na,
        "B_nonneg": pb,
        "B_nonpos": nb,
    }
    _write(args.outfile, _kv(info))
    return EXIT_OK


def _run_builder(args, builder) -> int:
    ia, ib, P = _classes(args.infile)
    G = builder([P[k] for k in ia], [P[k] for k in ib])
    order = ia + ib
    edges = [(order[i], order[j]) for i, j in G.edges]
    _emit_graph(args, P, edges, _labels_for(P, ia))
    return EXIT_OK


def cmd_tree(args) -> int:
    builder = {
        "anchored": con.line_anchored_tree,
        "bivis": con.noncrossing_spanning_tree,
        "forest": con.ray_cover_forest,
    }[args.action]
    return _run_builder(args, builder)


def cmd_subgraph(args) -> int:
    return _run_builder(args, con.large_noncrossing_subgraph)


def _coloured_graph(points_path: str, edges_path: Optional[str]) -> GeomGraph:
    P, labels = _points(points_path)
    if labels is None or "C" in labels:
        raise ParseError(f"{points_path}: points need A/B colour labels")
    if edges_path is None:
        raise UsageError("join needs --edges and --edges2")
    G = parse_edges(_read(edges_path))
    if G.n != len(P):
        raise ParseError(f"{edges_path}: header says n={G.n} but {points_path} has {len(P)} points")
    return GeomGraph(P, G.edges, labels)


def cmd_join(args) -> int:
    if args.in2 is None:
        raise UsageError("join needs --in2")
    G1 = _coloured_graph(args.infile, args.edges)
    G2 = _coloured_graph(args.in2, args.edges2)
    i, j = con.join_separated_graphs(G1, G2)
    if args.format == "svg":
        off = G1.n
        edges = list(G1.edges) + [(a + off, b + off) for a, b in G2.edges] + [(i, j + off)]
        _write(args.outfile, render(G1.base + G2.base, edges, G1.colour + G2.colour))
    else:
        _write(args.outfile, f"{i} {j}\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.action == "pencil":
        P = gen.pencil_config(args.ell or 3, args.rays, args.seed)
        _write(args.outfile, format_points(P))
    elif args.action == "elliptic":
        ec = gen.default_elliptic_config(args.m)
        labels = ["A"] * len(ec.A) + ["B"] * len(ec.B) + ["C"] * len(ec.C)
        _write(args.outfile, format_points(ec.points, labels))
    elif args.bichromatic:
        A, B = gen.random_bichromatic(args.seed, args.n, args.n, args.bound)
        _write(args.outfile, format_points(A + B, ["A"] * len(A) + ["B"] * len(B)))
    else:
        P = gen.random_point_set(gen.GenConfig(args.seed, args.n, args.bound, args.ell))
        _write(args.outfile, format_points(P))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.action == "instance":
        P, _ = _points(args.infile)
        rep = check_instance(P, descriptor=args.infile)
        _write(args.outfile, rep.serialize())
        return EXIT_CLAIM if rep.theorem_failures() or rep.status("g_conjecture") == FAIL else EXIT_OK
    if args.action == "bivis":
        ia, ib, P = _classes(args.infile)
        rep = check_bivisibility([P[k] for k in ia], [P[k] for k in ib], descriptor=args.infile)
        _write(args.outfile, rep.serialize())
        return EXIT_CLAIM if rep.theorem_failures() else EXIT_OK
    cfg = HuntConfig(args.trials, gen.GenConfig(args.seed, args.n, args.bound, args.ell))
    rep = hunt(cfg, workers=max(1, args.threads))
    _write(args.outfile, rep.serialize())
    if rep.candidates:
        os.makedirs(args.candidates, exist_ok=True)
        for c in rep.candidates:
            body = "".join(f"# {line}\n" for line in c.report.lines()) + format_points(c.points)
            _write(os.path.join(args.candidates, f"candidate-seed{c.seed}.txt"), body)
    return EXIT_CLAIM if rep.theorem_failures() or rep.candidates else EXIT_OK


def cmd_plot(args) -> int:
    P, labels = _points(args.infile)
    edges = ()
    if args.edges:
        G = parse_edges(_read(args.edges))
        if G.n != len(P):
            raise ParseError(f"{args.edges}: header says n={G.n} but there are {len(P)} points")
        edges = G.edges
    _write(args.outfile, render(P, edges, labels))
    return EXIT_OK


COMMANDS = {
    "vis": cmd_vis,
    "bivis": cmd_bivis,
    "analyze": cmd_analyze,
    "paths": cmd_paths,
    "cut": cmd_cut,
    "tree": cmd_tree,
    "subgraph": cmd_subgraph,
    "join": cmd_join,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "plot": cmd_plot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except VisConnError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error[invalid]: {exc}", file=sys.stderr)
        return EXIT_ERROR
