"""Plain SVG drawings of truncated cells and of level / Rogers / Marchal panels."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import geom2d, marchal2d

PIECE_COLOURS = {"A": "#d62728", "B": "#1f77b4", "C": "#2ca02c"}
LEVEL_COLOURS = ["#ffffff", "#c6dbef", "#6baed6", "#08519c", "#000000"]
PANELS = ("levels", "rogers", "cells")


class _Canvas:
    """World-to-pixel mapping for one panel (y axis pointing up)."""

    def __init__(self, window: marchal2d.Window, size: float = 360.0, offset_x: float = 0.0):
        self.w = window
        span = max(window.xmax - window.xmin, window.ymax - window.ymin)
        self.scale = size / span
        self.ox = offset_x
        self.size = size

    def xy(self, p) -> tuple[float, float]:
        return (self.ox + (p[0] - self.w.xmin) * self.scale, self.size - (p[1] - self.w.ymin) * self.scale)

    def pts(self, ps: Iterable) -> str:
        return " ".join(f"{x:.2f},{y:.2f}" for x, y in (self.xy(p) for p in ps))


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
            f'viewBox="0 0 {width:.0f} {height:.0f}">')
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _circumcentre(u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
    return np.linalg.solve(np.array([u1, u2]), np.array([u1 @ u1 / 2, u2 @ u2 / 2]))


def cell_svg(center_index: int, packing: geom2d.Packing2, size: float = 400.0) -> str:
    """Truncated cell of one packing point with its A, B and C pieces."""
    pts = packing.array()
    c = pts[center_index]
    report = geom2d.certify_cell(c, pts)
    r = geom2d.OUTER + 0.5
    canvas = _Canvas(marchal2d.Window(c[0] - r, c[1] - r, c[0] + r, c[1] + r), size)
    body = []
    for p in pts:
        x, y = canvas.xy(p)
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{canvas.scale:.2f}" fill="none" stroke="#bbbbbb"/>')
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="black"/>')
    cx, cy = canvas.xy(c)
    body.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{geom2d.TRUNC * canvas.scale:.2f}" fill="none" '
                f'stroke="#999999" stroke-dasharray="4 3"/>')
    for piece in report.pieces:
        colour = PIECE_COLOURS[piece.kind]
        if piece.kind == "B":
            a0, a1 = piece.theta_start or 0.0, piece.theta_end or 0.0
            sweep = (a1 - a0) % (2 * math.pi) or 2 * math.pi
            steps = max(2, int(sweep / 0.05))
            arc = [c + geom2d.TRUNC * np.array([math.cos(a0 + sweep * k / steps), math.sin(a0 + sweep * k / steps)])
                   for k in range(steps + 1)]
            body.append(f'<polyline points="{canvas.pts(arc)}" fill="none" stroke="{colour}" stroke-width="3"/>')
        elif piece.kind == "A":
            q = _circumcentre(np.array(piece.u1), np.array(piece.u2))
            line = [c + np.array(piece.start), c + q, c + np.array(piece.end)]
            body.append(f'<polyline points="{canvas.pts(line)}" fill="none" stroke="{colour}" stroke-width="3"/>')
        else:
            line = [c + np.array(piece.start), c + np.array(piece.end)]
            body.append(f'<polyline points="{canvas.pts(line)}" fill="none" stroke="{colour}" stroke-width="3"/>')
    body.append(f'<text x="8" y="18" font-family="sans-serif" font-size="13">total {report.total_length:.6f} '
                f'(bound {report.bound:.6f})</text>')
    return _svg(size, size, body)


def _raster(canvas: _Canvas, window: marchal2d.Window, values: np.ndarray, colours: Sequence[str], n: int) -> list[str]:
    dx = (window.xmax - window.xmin) / n
    dy = (window.ymax - window.ymin) / n
    out = []
    for j in range(n):
        for i in range(n):
            colour = colours[int(values[j, i]) % len(colours)]
            if colour == "#ffffff":
                continue
            x, y = canvas.xy((window.xmin + i * dx, window.ymin + (j + 1) * dy))
            out.append(f'<rect x="{x:.2f}" y="{y:.2f}" width="{dx * canvas.scale + 0.3:.2f}" '
                       f'height="{dy * canvas.scale + 0.3:.2f}" fill="{colour}"/>')
    return out


def marchal_svg(V, window: marchal2d.Window | None = None, panels: Sequence[str] = PANELS, resolution: int = 120,
                size: float = 360.0, perturb: bool = False) -> str:
    """Side-by-side panels: levels, Rogers simplices and Marchal cells."""
    for p in panels:
        if p not in PANELS:
            raise ValueError(f"unknown panel {p!r}; choose from {', '.join(PANELS)}")
    pts = np.asarray(V, dtype=float).reshape(-1, 2)
    window = window or marchal2d.Window.around(pts)
    xs = window.xmin + (np.arange(resolution) + 0.5) * (window.xmax - window.xmin) / resolution
    ys = window.ymin + (np.arange(resolution) + 0.5) * (window.ymax - window.ymin) / resolution
    gx, gy = np.meshgrid(xs, ys)
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    levels = marchal2d.levels(grid, pts).reshape(resolution, resolution)
    body = []
    for k, panel in enumerate(panels):
        canvas = _Canvas(window, size, offset_x=k * (size + 10))
        if panel == "levels":
            body += _raster(canvas, window, levels, LEVEL_COLOURS, resolution)
        elif panel == "rogers" and len(pts) >= 3:
            for s in marchal2d.rogers_partition(pts, window, perturb):
                fill = "#fdd0a2" if s.signed_area >= 0 else "#fcbba1"
                body.append(f'<polygon points="{canvas.pts(s.vertices)}" fill="{fill}" fill-opacity="0.4" '
                            f'stroke="#e6550d" stroke-width="0.7"/>')
        elif panel == "cells" and len(pts) >= 1:
            loc = marchal2d.FlagLocator(marchal2d.delaunay(pts, perturb))
            keys = marchal2d.group_keys(grid, pts, loc)
            index: dict = {}
            ids = np.array([index.setdefault(key, len(index)) for key in keys]).reshape(resolution, resolution)
            palette = [f"hsl({(37 * i) % 360},{45 + 15 * (i % 3)}%,{60 + 8 * (i % 3)}%)" for i in range(len(index))]
            colours = {i: palette[i] for i in range(len(index))}
            for key, i in index.items():
                if key[0] == 0:
                    colours[i] = "#ffffff"
            body += _raster(canvas, window, ids, [colours[i] for i in range(len(index))], resolution)
        for p in pts:
            x, y = canvas.xy(p)
            body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
        x0, y0 = canvas.xy((window.xmin, window.ymax))
        body.append(f'<rect x="{x0:.2f}" y="{y0:.2f}" width="{size:.2f}" height="{size:.2f}" fill="none" stroke="black"/>')
        body.append(f'<text x="{x0 + 6:.2f}" y="{y0 + 16:.2f}" font-family="sans-serif" font-size="13">{panel}</text>')
    return _svg(len(panels) * (size + 10) - 10, size, body)


__all__ = ["PANELS", "cell_svg", "marchal_svg"]
