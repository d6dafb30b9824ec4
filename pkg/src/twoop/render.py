"""Straight-line SVG drawings for inspection only; nothing downstream reads the coordinates."""

from __future__ import annotations

import math
from typing import Iterable
from xml.sax.saxutils import escape

from .augment import augment
from .plane_graph import PlaneGraph, layers, outer_walk

_SIZE = 480.0
_MARGIN = 24.0


def barycentric_layout(g: PlaneGraph, rounds: int = 400) -> dict[int, tuple[float, float]]:
    """Outer walk on a circle, every other vertex at the average of its neighbours.

    Layout runs on the augmented graph so that it is connected with a
    simple outer cycle; the drawing can still overlap for graphs that are
    not 3-connected.
    """
    if g.n == 0:
        return {}
    if g.n < 3:
        return {v: (float(i), 0.0) for i, v in enumerate(sorted(g.rotations))}
    base = augment(g).graph
    ring = [d.source for d in outer_walk(base)]
    pos: dict[int, tuple[float, float]] = {}
    for i, v in enumerate(ring):
        angle = math.pi / 2 - 2 * math.pi * i / len(ring)
        pos[v] = (math.cos(angle), math.sin(angle))
    free = [v for v in sorted(base.rotations) if v not in pos]
    for v in free:
        pos[v] = (0.0, 0.0)
    for _ in range(rounds):
        for v in free:
            nbrs = base.rotations[v]
            pos[v] = (
                sum(pos[w][0] for w in nbrs) / len(nbrs),
                sum(pos[w][1] for w in nbrs) / len(nbrs),
            )
    return pos


def to_svg(g: PlaneGraph, highlight: Iterable[int] = ()) -> str:
    pos = barycentric_layout(g)
    marked = frozenset(highlight)
    l1 = layers(g).l1 if g.n else frozenset()
    scale = (_SIZE - 2 * _MARGIN) / 2

    def xy(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return _MARGIN + (x + 1) * scale, _MARGIN + (1 - y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE:.0f}" height="{_SIZE:.0f}" '
        f'viewBox="0 0 {_SIZE:.0f} {_SIZE:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for a, b in g.edges():
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#555" stroke-width="1.2"/>')
    for v in sorted(g.rotations):
        x, y = xy(v)
        fill = "#d33" if v in l1 else "#3a3"
        if v in marked:
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="10" fill="none" stroke="#06c" stroke-width="2.5"/>')
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="6" fill="{fill}"/>')
        out.append(
            f'<text x="{x + 8:.2f}" y="{y - 8:.2f}" font-size="11" font-family="monospace">{escape(str(v))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
