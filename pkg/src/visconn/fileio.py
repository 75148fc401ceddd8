"""Point files and edge-list files.

Point file: one ``x y`` per line, coordinates as integers or ``p/q``, an
optional class label ``A``, ``B`` or ``C`` as a third token (on every line
or on none). ``#`` starts a comment.

Edge-list file: a header ``n m`` followed by ``m`` lines ``i j`` with
``i < j`` in ascending order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ParseError
from .geom import Point, fmt_scalar
from .visgraph import Graph, norm_edge

LABELS = ("A", "B", "C")
_SCALAR = re.compile(r"[+-]?\d+(?:/\d+)?")


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            yield no, toks


def parse_scalar(tok: str, where: str = "") -> Fraction:
    if not _SCALAR.fullmatch(tok):
        raise ParseError(f"{where}bad number {tok!r}")
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"{where}zero denominator in {tok!r}") from None


def parse_points(text: str) -> tuple[tuple[Point, ...], Optional[tuple[str, ...]]]:
    """Points and, when the file is labelled, their labels."""
    points: list[Point] = []
    labels: list[str] = []
    labelled: Optional[bool] = None
    seen: dict[Point, int] = {}
    for no, toks in _lines(text):
        where = f"line {no}: "
        if len(toks) not in (2, 3):
            raise ParseError(f"{where}expected 'x y' or 'x y label'")
        has_label = len(toks) == 3
        if labelled is None:
            labelled = has_label
        elif labelled != has_label:
            raise ParseError(f"{where}labels must appear on every line or none")
        p = Point(parse_scalar(toks[0], where), parse_scalar(toks[1], where))
        if p in seen:
            raise ParseError(f"{where}duplicate of the point on line {seen[p]}")
        seen[p] = no
        points.append(p)
        if has_label:
            if toks[2] not in LABELS:
                raise ParseError(f"{where}label must be one of A, B, C")
            labels.append(toks[2])
    return tuple(points), (tuple(labels) if labelled else None)


def format_points(points: Sequence[Point], labels: Optional[Sequence[str]] = None) -> str:
    rows = []
    for k, p in enumerate(points):
        row = f"{fmt_scalar(p.x)} {fmt_scalar(p.y)}"
        if labels is not None:
            row += f" {labels[k]}"
        rows.append(row + "\n")
    return "".join(rows)


def parse_edges(text: str) -> Graph:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty edge list")
    no, head = rows[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise ParseError(f"line {no}: expected header 'n m'") from None
    if len(rows) - 1 != m:
        raise ParseError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = set()
    for no, toks in rows[1:]:
        try:
            i, j = (int(t) for t in toks)
        except ValueError:
            raise ParseError(f"line {no}: expected 'i j'") from None
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ParseError(f"line {no}: bad edge ({i}, {j}) for n={n}")
        e = norm_edge(i, j)
        if e in edges:
            raise ParseError(f"line {no}: repeated edge ({i}, {j})")
        edges.add(e)
    return Graph(n, frozenset(edges))


def format_edges(n: int, edges: Iterable) -> str:
    es = sorted({norm_edge(i, j) for i, j in edges})
    return f"{n} {len(es)}\n" + "".join(f"{i} {j}\n" for i, j in es)
