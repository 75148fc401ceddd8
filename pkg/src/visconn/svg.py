"""SVG drawings of point sets and straight-line graphs."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .geom import Point

SIZE = 800
MARGIN = Fraction(SIZE * 5, 100)
FILL = {"A": "#1f4e99", "B": "#c0392b", "C": "#2e8b57", None: "#222222"}


def _transform(points: Sequence[Point]):
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0) or Fraction(1)
    scale = (SIZE - 2 * MARGIN) / span
    # centre the shorter dimension
    dx = (SIZE - 2 * MARGIN - (max(xs) - x0) * scale) / 2
    dy = (SIZE - 2 * MARGIN - (max(ys) - y0) * scale) / 2

    def f(p: Point) -> tuple[str, str]:
        x = MARGIN + dx + (p.x - x0) * scale
        y = SIZE - (MARGIN + dy + (p.y - y0) * scale)
        return f"{float(x):.3f}", f"{float(y):.3f}"

    return f


def render(points: Sequence[Point], edges: Iterable = (), labels: Optional[Sequence[str]] = None) -> str:
    """An 800x800 drawing with the bounding box inset by a 5% margin."""
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    if points:
        f = _transform(points)
        out.append('<g stroke="#777777" stroke-width="1.5">')
        for i, j in sorted(edges):
            (x1, y1), (x2, y2) = f(points[i]), f(points[j])
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append("</g>")
        out.append("<g>")
        for k, p in enumerate(points):
            x, y = f(p)
            colour = FILL[labels[k] if labels else None]
            out.append(f'<circle cx="{x}" cy="{y}" r="5" fill="{colour}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
