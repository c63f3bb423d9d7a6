"""Deterministic figure emission: SVG chord pictures and DOT 4-graphs."""

from __future__ import annotations

import math

from .diagram import FramedDiagram

_RADIUS = 60.0
_SPACING = 170.0
_MARGIN = 85.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _endpoint_coords(diag: FramedDiagram) -> dict[tuple[int, int], tuple[float, float]]:
    coords = {}
    for ci, word in enumerate(diag.components):
        cx = _MARGIN + ci * _SPACING
        cy = _MARGIN
        size = len(word)
        for p in range(size):
            ang = -math.pi / 2 + 2 * math.pi * p / size
            coords[(ci, p)] = (cx + _RADIUS * math.cos(ang), cy + _RADIUS * math.sin(ang))
    return coords


def render_svg(diag: FramedDiagram) -> str:
    """Circles with chords as straight segments, labels at endpoints."""
    m = len(diag.components)
    width = 2 * _MARGIN + (m - 1) * _SPACING
    height = 2 * _MARGIN
    coords = _endpoint_coords(diag)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for ci in range(m):
        cx = _MARGIN + ci * _SPACING
        lines.append(
            f'  <circle cx="{_fmt(cx)}" cy="{_fmt(_MARGIN)}" r="{_fmt(_RADIUS)}" '
            'fill="none" stroke="black"/>'
        )
    drawn: set[str] = set()
    occ: dict[str, list[tuple[int, int]]] = {}
    for ci, word in enumerate(diag.components):
        for p, lab in enumerate(word):
            occ.setdefault(lab, []).append((ci, p))
    for lab in sorted(occ):
        if lab in drawn:
            continue
        drawn.add(lab)
        (x1, y1), (x2, y2) = (coords[o] for o in occ[lab])
        lines.append(
            f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            'stroke="gray"/>'
        )
    for ci, word in enumerate(diag.components):
        cx = _MARGIN + ci * _SPACING
        for p, lab in enumerate(word):
            x, y = coords[(ci, p)]
            # nudge the label outward from the circle centre
            dx, dy = x - cx, y - _MARGIN
            norm = math.hypot(dx, dy) or 1.0
            lx, ly = x + 12 * dx / norm, y + 12 * dy / norm
            lines.append(
                f'  <text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="10" '
                f'text-anchor="middle">{lab}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_dot(diag: FramedDiagram) -> str:
    """The framed 4-graph in DOT, framing encoded by compass ports.

    A chord's first passage enters at ``n`` and leaves at ``s``, its
    second at ``e``/``w``; opposite ports mark opposite half-edges.
    Free loops come out as self-looped point nodes.
    """
    passage: dict[tuple[int, int], int] = {}
    seen: dict[str, int] = {}
    for ci, word in enumerate(diag.components):
        for p, lab in enumerate(word):
            passage[(ci, p)] = seen.get(lab, 0)
            seen[lab] = seen.get(lab, 0) + 1
    in_port = {0: "n", 1: "e"}
    out_port = {0: "s", 1: "w"}
    lines = ["graph freeknot {", "  node [shape=circle];"]
    for lab in sorted(seen):
        lines.append(f'  "{lab}";')
    loop_idx = 0
    for ci, word in enumerate(diag.components):
        size = len(word)
        if size == 0:
            lines.append(f'  "loop{loop_idx}" [shape=point];')
            lines.append(f'  "loop{loop_idx}" -- "loop{loop_idx}";')
            loop_idx += 1
            continue
        for p in range(size):
            q = (p + 1) % size
            tail = f'"{word[p]}":{out_port[passage[(ci, p)]]}'
            head = f'"{word[q]}":{in_port[passage[(ci, q)]]}'
            lines.append(f"  {tail} -- {head};")
    lines.append("}")
    return "\n".join(lines) + "\n"
