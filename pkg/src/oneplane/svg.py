"""Schematic SVG rendering via a barycentric (Tutte) layout of the planarization."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np

from .drawing import OnePlaneDrawing

SCALE = 120.0
GAP = 2.6


def _component_layout(d: OnePlaneDrawing, comp: list[int]) -> dict[int, tuple[float, float]]:
    if len(comp) == 1:
        return {comp[0]: (0.0, 0.0)}
    members = set(comp)
    verts = set(comp)
    for c, cr in enumerate(d.crossings):
        if d.edges[cr.e][0] in members:
            verts.add(d.fake_vertex(c))
    best = None
    for face in d.faces:
        if face.vertices[0] not in verts:
            continue
        ring = list(dict.fromkeys(face.vertices))
        if best is None or len(ring) > len(best):
            best = ring
    pos: dict[int, tuple[float, float]] = {}
    k = len(best)
    for i, v in enumerate(best):
        a = math.pi / 2 + 2 * math.pi * i / k
        pos[v] = (math.cos(a), math.sin(a))
    inner = sorted(verts - set(best))
    if inner:
        idx = {v: i for i, v in enumerate(inner)}
        A = np.zeros((len(inner), len(inner)))
        rhs = np.zeros((len(inner), 2))
        for v in inner:
            i = idx[v]
            nbrs = d.planarization_neighbors(v)
            A[i, i] = len(nbrs)
            for w in nbrs:
                if w in idx:
                    A[i, idx[w]] -= 1
                else:
                    rhs[i] += pos[w]
        xy = np.linalg.lstsq(A, rhs, rcond=None)[0]
        for v in inner:
            pos[v] = (float(xy[idx[v], 0]), float(xy[idx[v], 1]))
    return pos


def layout(d: OnePlaneDrawing) -> dict[int, tuple[float, float]]:
    """Positions for every planarization vertex, components side by side."""
    pos: dict[int, tuple[float, float]] = {}
    for i, comp in enumerate(d.components()):
        for v, (x, y) in _component_layout(d, comp).items():
            pos[v] = (x + GAP * i, y)
    return pos


def to_svg(d: OnePlaneDrawing, title: str | None = None) -> str:
    pos = layout(d)
    if pos:
        xs = [p[0] for p in pos.values()]
        ys = [p[1] for p in pos.values()]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = 0.0
    pad = 0.3

    def pt(v: int) -> tuple[float, float]:
        x, y = pos[v]
        return ((x - x0 + pad) * SCALE, (y1 - y + pad) * SCALE)

    width = (x1 - x0 + 2 * pad) * SCALE
    height = (y1 - y0 + 2 * pad) * SCALE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">'
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<g stroke="#333" stroke-width="1.5" fill="none">')
    for e, (u, v) in enumerate(d.edges):
        c = d.crossing_of(e)
        path = [u, v] if c is None else [u, d.fake_vertex(c), v]
        pts = " ".join(f"{x:.1f},{y:.1f}" for x, y in map(pt, path))
        color = ' stroke="#b22"' if c is not None else ""
        out.append(f'<polyline points="{pts}"{color}/>')
    out.append("</g>")
    out.append('<g stroke="#b22" stroke-width="2">')
    for c in range(d.x):
        x, y = pt(d.fake_vertex(c))
        out.append(f'<path d="M{x - 5:.1f},{y - 5:.1f} L{x + 5:.1f},{y + 5:.1f} M{x - 5:.1f},{y + 5:.1f} L{x + 5:.1f},{y - 5:.1f}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" text-anchor="middle">')
    for v in range(d.n):
        x, y = pt(v)
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="9" fill="#fff" stroke="#333"/>')
        out.append(f'<text x="{x:.1f}" y="{y + 4:.1f}">{escape(d.label(v))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
