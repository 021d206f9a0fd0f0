"""SVG and ASCII pictures of X-rays: a dot per fixed-point image, a segment per edge.

Overlays (the Weyl wall, a dashed cut line, highlighted uncovered faces) are
drawn as ``<path>`` elements so that ``<circle>`` and ``<line>`` elements
correspond one-to-one with fixed points and edges.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .geometry import dot, primitive

SCALE = 40
MARGIN = 20


def _fmt(v: Fraction) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _line_through_box(normal, level, box):
    """Endpoints of the line <v, normal> = level clipped to a box, or None."""
    x0, y0, x1, y1 = box
    corners = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
    pts = []
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        va, vb = dot(normal, a) - level, dot(normal, b) - level
        if va == 0:
            pts.append(a)
        if (va < 0 < vb) or (vb < 0 < va):
            t = Fraction(va) / (va - vb)
            pts.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def render_svg(x, cut=None, wall=False, certificates=()):
    """Deterministic SVG 1.1 drawing; ``cut`` is an optional ``(direction, level)`` pair."""
    pts = [f.position for f in x.fixed_points] or [(Fraction(0), Fraction(0))]
    x0, y0, x1, y1 = _bbox(pts)
    pad = Fraction(1, 2)
    box = (x0 - pad, y0 - pad, x1 + pad, y1 + pad)
    width = (box[2] - box[0]) * SCALE + 2 * MARGIN
    height = (box[3] - box[1]) * SCALE + 2 * MARGIN

    def sx(v):
        return _fmt((v - box[0]) * SCALE + MARGIN)

    def sy(v):
        return _fmt((box[3] - v) * SCALE + MARGIN)

    def path(a, b, cls, style):
        return f'  <path class="{cls}" d="M {sx(a[0])} {sy(a[1])} L {sx(b[0])} {sy(b[1])}" style="{style}"/>'

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    if wall:
        seg = _line_through_box((1, -1), 0, box)
        if seg:
            out.append(path(*seg, "wall", "stroke:#888888;stroke-width:1;stroke-dasharray:2,3;fill:none"))
    if cut is not None:
        normal, level = cut
        seg = _line_through_box(tuple(normal), Fraction(level), box)
        if seg:
            out.append(path(*seg, "cut", "stroke:#000000;stroke-width:1;stroke-dasharray:4,4;fill:none"))
    for e in x.edges:
        a, b = e.endpoints
        out.append(
            f'  <line x1="{sx(a[0])}" y1="{sy(a[1])}" x2="{sx(b[0])}" y2="{sy(b[1])}" '
            f'style="stroke:#000000;stroke-width:{e.rank + 1}"/>'
        )
    for c in certificates:
        a, b = c.uncovered_face
        out.append(path(a, b, "certificate", "stroke:#d62728;stroke-width:4;stroke-opacity:0.7;fill:none"))
    for f in x.fixed_points:
        out.append(f'  <circle cx="{sx(f.position[0])}" cy="{sy(f.position[1])}" r="4" style="fill:#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


_MAX_GRID = 120


def render_ascii(x, certificates=()):
    """Character-grid drawing; fixed points are ``o`` and uncovered faces ``#``."""
    pts = [f.position for f in x.fixed_points]
    if not pts:
        return ""
    x0, y0, x1, y1 = _bbox(pts)
    den = math.lcm(*(c.denominator for p in pts for c in p))
    span = max(x1 - x0, y1 - y0, 1)
    factor = 2 * den
    while span * factor > _MAX_GRID and factor > 1:
        factor //= 2
    factor = max(factor, 1)

    def cell(p):
        return (round((p[0] - x0) * factor), round((p[1] - y0) * factor))

    cols = round((x1 - x0) * factor) + 1
    rows = round((y1 - y0) * factor) + 1
    grid = [[" "] * cols for _ in range(rows)]

    def plot(a, b, ch=None):
        (ca, ra), (cb, rb) = cell(a), cell(b)
        steps = max(abs(cb - ca), abs(rb - ra))
        if not steps:
            return
        if ch is None:
            d = primitive((cb - ca, rb - ra))
            ch = "-" if d[1] == 0 else "|" if d[0] == 0 else "/" if d[0] * d[1] > 0 else "\\"
        for i in range(steps + 1):
            c = ca + Fraction(i * (cb - ca), steps)
            r = ra + Fraction(i * (rb - ra), steps)
            grid[round(r)][round(c)] = ch

    for e in x.edges:
        plot(*e.endpoints)
    for cert in certificates:
        plot(*cert.uncovered_face, ch="#")
    for p in pts:
        c, r = cell(p)
        grid[r][c] = "o"
    return "\n".join("".join(row).rstrip() for row in reversed(grid)) + "\n"


def render(x, format="svg", **overlays):
    if format == "svg":
        return render_svg(x, **overlays)
    if format == "ascii":
        overlays.pop("cut", None)
        overlays.pop("wall", None)
        return render_ascii(x, **overlays)
    raise ValueError(f"unknown format {format!r}")
