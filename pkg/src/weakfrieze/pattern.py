"""Frieze patterns on the horizontal strip, plus text/JSON/SVG output.

Row ``r`` (1 <= r <= n-1) of a pattern holds ``f(i, i+r)`` for
``i = 0..n-1``.  Rows 1 and n-1 are the edge values.  Printed patterns put
row n-1 on top and row 1 at the bottom, with entry ``(i, i+r)`` at half-column
``2i + r``, which is the staggered layout of the classical frieze figures.
"""

from __future__ import annotations

from dataclasses import dataclass
import json
import math
from xml.sax.saxutils import escape

from .frieze import DiagonalMap
from .polygon import crosses, diag

__all__ = [
    "NonUnitEdge",
    "PatternGrid",
    "render_pattern",
    "unimodular_witness",
    "check_unimodular",
    "emit_text",
    "emit_json",
    "emit_svg",
]


class NonUnitEdge(ValueError):
    """The unimodular rule was asked of a map whose edges are not all 1."""


@dataclass(frozen=True)
class PatternGrid:
    n: int
    rows: tuple
    semifield: object

    def entry(self, i, r):
        return self.rows[r - 1][i % self.n]

    def to_map(self):
        """Rebuild the diagonal map from the grid."""
        values = {}
        for r in range(1, self.n):
            for i in range(self.n):
                key = diag(i, (i + r) % self.n)
                x = self.rows[r - 1][i]
                if key in values and values[key] != x:
                    raise ValueError(f"grid breaks glide symmetry at {list(key)}")
                values[key] = x
        return DiagonalMap(self.n, values, self.semifield)


def render_pattern(f):
    n = f.polygon.n
    rows = tuple(tuple(f(i, (i + r) % n) for i in range(n)) for r in range(1, n))
    return PatternGrid(n, rows, f.semifield)


def unimodular_witness(f):
    """First ``(i, j)`` where ``f(i,j)f(i+1,j+1) = 1 + f(i,j+1)f(i+1,j)`` fails.

    Raises :class:`NonUnitEdge` unless every edge value is 1.
    """
    n = f.polygon.n
    one = f.semifield.one()
    bad = [i for i in range(n) if f(i, (i + 1) % n) != one]
    if bad:
        i = bad[0]
        raise NonUnitEdge(f"edge {[i, (i + 1) % n]} has value {f(i, (i + 1) % n)}, not 1")
    for i in range(n):
        for j in range(n):
            if (j - i) % n in (0, 1, n - 1):
                continue
            i1, j1 = (i + 1) % n, (j + 1) % n
            if f(i, j) * f(i1, j1) != one + f(i, j1) * f(i1, j):
                return i, j
    return None


def check_unimodular(f):
    return unimodular_witness(f) is None


def _tokens(grid):
    return [[str(x) for x in row] for row in grid.rows]


def emit_text(grid, repeat=1, window=None, cell_width=None):
    """Staggered text rendering, top row first.

    By default each row shows ``repeat`` periods of ``n`` entries, row ``r``
    indented by ``r`` half cells.  ``window=(first, width)`` instead cuts a
    rectangle ``width`` half-columns wide whose top-left entry is
    ``(first, first-1)``, the way printed frieze patterns are cropped.
    """
    n = grid.n
    tokens = _tokens(grid)
    if cell_width is None:
        cell_width = 2 * max(max(len(t) for row in tokens for t in row), 1)
        cell_width += cell_width % 2
    half = cell_width // 2
    lines = []
    for r in range(n - 1, 0, -1):
        if window is None:
            placed = [(2 * i + r, tokens[r - 1][i % n]) for i in range(n * repeat)]
        else:
            first, width = window
            placed = []
            for c in range(1, width + 1):
                twice = c - 1 - r + n - 1
                if twice % 2 == 0:
                    placed.append((c, tokens[r - 1][(first + twice // 2) % n]))
        line = ""
        for c, tok in placed:
            line = line.ljust((c - 1) * half) + tok.rjust(half)
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def emit_json(grid):
    K = grid.semifield
    rows = [[K.to_json(x) for x in row] for row in grid.rows]
    return json.dumps({"n": grid.n, "semifield": K.name, "rows": rows})


_PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
            "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"]


def _vertex_xy(n, k, cx, cy, radius):
    angle = math.radians(90 + 360 * k / n)
    return cx + radius * math.cos(angle), cy - radius * math.sin(angle)


def emit_svg(p, d=None, f=None, paths=None, query=None, size=400):
    """SVG picture of a polygon with its dissection, values and T-paths.

    Dissection diagonals are solid; with a map, the other diagonals inside
    cells are dashed and edges carry their values; ``query`` (defaulting to
    the end points of ``paths``) is dotted; each path is an arrowed polyline.
    """
    n = p.n
    cx = cy = size / 2
    radius = size * 0.4
    pts = [_vertex_xy(n, k, cx, cy, radius) for k in range(n)]
    dset = set(d.diagonals) if d is not None else set()
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="6" markerHeight="6" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="context-stroke"/></marker></defs>',
    ]

    def seg(a, b, cls, extra=""):
        (x1, y1), (x2, y2) = pts[a], pts[b]
        return (f'<line class="{cls}" x1="{x1:.2f}" y1="{y1:.2f}" '
                f'x2="{x2:.2f}" y2="{y2:.2f}" {extra}/>')

    outline = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
    out.append(f'<polygon class="outline" points="{outline}" fill="none" stroke="black"/>')
    if f is not None:
        for a, b in p.internal_diagonals():
            if (a, b) in dset or any(crosses(p, (a, b), e) for e in dset):
                continue
            out.append(seg(a, b, "valued", 'stroke="gray" stroke-dasharray="6,4"'))
    for a, b in sorted(dset):
        out.append(seg(a, b, "dissection", 'stroke="black" stroke-width="2"'))
    if query is None and paths:
        query = (paths[0][0], paths[0][-1])
    if query is not None:
        a, b = query
        out.append(seg(a, b, "query", 'stroke="black" stroke-dasharray="1,4"'))
    for k, path in enumerate(paths or []):
        color = _PALETTE[k % len(_PALETTE)]
        # small per-path shift so overlapping paths stay visible
        shift = (k - (len(paths) - 1) / 2) * 3
        coords = " ".join(f"{pts[v][0] + shift:.2f},{pts[v][1] + shift:.2f}" for v in path)
        label = escape(",".join(map(str, path)))
        out.append(f'<polyline class="tpath" data-path="{label}" points="{coords}" '
                   f'fill="none" stroke="{color}" stroke-width="1.5" '
                   f'marker-mid="url(#arrow)" marker-end="url(#arrow)"/>')
    if f is not None:
        for i in range(n):
            j = (i + 1) % n
            (x1, y1), (x2, y2) = pts[i], pts[j]
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            # push labels outwards
            lx, ly = cx + (mx - cx) * 1.12, cy + (my - cy) * 1.12
            out.append(f'<text class="value" x="{lx:.2f}" y="{ly:.2f}" font-size="12" '
                       f'text-anchor="middle" dominant-baseline="middle">'
                       f'{escape(str(f(i, j)))}</text>')
    for k, (x, y) in enumerate(pts):
        lx, ly = cx + (x - cx) * 1.2, cy + (y - cy) * 1.2
        out.append(f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        out.append(f'<text class="label" x="{lx:.2f}" y="{ly:.2f}" font-size="13" '
                   f'text-anchor="middle" dominant-baseline="middle">{k}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

