"""Deterministic SVG output: value heatmaps and rank-label layouts on lattice windows."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .graph import Graph
from .orderings import Ordering
from .rearrange import LatticeFunction

CELL = 40
MARGIN = 20


class RenderError(ValueError):
    pass


def _frame(g: Graph):
    if not g.is_lattice:
        raise RenderError("rendering needs a lattice family (grid, ladder or path)")
    xs = [c[0] for c in g.coords]
    ys = [c[1] for c in g.coords]
    return min(xs), max(xs), min(ys), max(ys)


def _header(g: Graph, title: str) -> tuple[list[str], callable]:
    x0, x1, y0, y1 = _frame(g)
    width = (x1 - x0 + 1) * CELL + 2 * MARGIN
    height = (y1 - y0 + 1) * CELL + 2 * MARGIN

    def corner(x, y):
        # svg y grows downwards
        return MARGIN + (x - x0) * CELL, MARGIN + (y1 - y) * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#000000"/>',
    ]
    # axes through the origin cell centre, when the window contains it
    if x0 <= 0 <= x1:
        cx = corner(0, 0)[0] + CELL // 2
        out.append(f'<line x1="{cx}" y1="{MARGIN}" x2="{cx}" y2="{height - MARGIN}" '
                   'stroke="#808080" stroke-width="1"/>')
    if y0 <= 0 <= y1:
        cy = corner(0, 0)[1] + CELL // 2
        out.append(f'<line x1="{MARGIN}" y1="{cy}" x2="{width - MARGIN}" y2="{cy}" '
                   'stroke="#808080" stroke-width="1"/>')
    return out, corner


def heatmap_svg(f: LatticeFunction, title: str = "f") -> str:
    """Cells shaded by value / max(f); zero cells are left as background."""
    g = f.graph
    out, corner = _header(g, title)
    top = f.max()
    for v, val in sorted(f.values.items(), key=lambda kv: g.coords[kv[0]]):
        level = round(255 * Fraction(val, top)) if top else 0
        x, y = corner(*g.coords[v])
        out.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                   f'fill="#{level:02x}{level:02x}{level:02x}"><title>{val}</title></rect>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def ordering_svg(o: Ordering, limit: Optional[int] = None, title: str = "ordering") -> str:
    """Rank labels 1..limit written at their lattice positions."""
    g = o.graph
    out, corner = _header(g, title)
    count = len(o) if limit is None else min(limit, len(o))
    for k in range(1, count + 1):
        x, y = corner(*o.coord_at(k))
        out.append(f'<text x="{x + CELL // 2}" y="{y + CELL // 2 + 5}" text-anchor="middle" '
                   f'font-family="monospace" font-size="14" fill="#ffffff">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
