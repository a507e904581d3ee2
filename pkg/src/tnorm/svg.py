"""SVG rendering of the walk, hull and polytope panels, left to right."""

from __future__ import annotations

from fractions import Fraction
from math import ceil
from xml.sax.saxutils import escape

from .polytope import HullPolygon, MarkedPolytope, WalkTrace

PANELS = ("walk", "hull", "polytope")
PANEL = 300
MARGIN = 24
GAP = 16
TITLE = 22

WALK_COLOR = "#1f4fd6"
HULL_COLOR = "#1b9e3a"
POLY_COLOR = "#d62728"
GRID_COLOR = "#b0b0b0"


def _num(v) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Frame:
    """Maps lattice coordinates into one panel, y axis pointing up."""

    def __init__(self, index: int, hull: HullPolygon):
        xs = [v[0] for v in hull.vertices]
        ys = [v[1] for v in hull.vertices]
        self.xmin, self.ymin = min(xs), min(ys)
        self.xmax, self.ymax = max(xs), max(ys)
        span = max(self.xmax - self.xmin, self.ymax - self.ymin, 1)
        self.scale = Fraction(PANEL - 2 * MARGIN, span)
        self.ox = index * (PANEL + GAP)
        self.oy = TITLE

    def __call__(self, p):
        x = self.ox + MARGIN + (Fraction(p[0]) - self.xmin) * self.scale
        y = self.oy + PANEL - MARGIN - (Fraction(p[1]) - self.ymin) * self.scale
        return _num(x), _num(y)

    def grid(self) -> list[str]:
        span = max(self.xmax - self.xmin, self.ymax - self.ymin, 1)
        step = max(1, ceil(span / 30))
        out = []
        for gx in range(self.xmin, self.xmax + 1, step):
            (x1, y1), (x2, y2) = self((gx, self.ymin)), self((gx, self.ymax))
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        for gy in range(self.ymin, self.ymax + 1, step):
            (x1, y1), (x2, y2) = self((self.xmin, gy)), self((self.xmax, gy))
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        return [f'<g stroke="{GRID_COLOR}" stroke-width="0.5" stroke-dasharray="3,3">', *out, "</g>"]


def _points_attr(frame, pts) -> str:
    return " ".join(",".join(frame(p)) for p in pts)


def _dot(frame, p, marked: bool, ring: str) -> str:
    cx, cy = frame(p)
    fill = WALK_COLOR if marked else "#ffffff"
    cls = "marked" if marked else "unmarked"
    return f'<circle class="{cls}" cx="{cx}" cy="{cy}" r="4" fill="{fill}" stroke="{ring}" stroke-width="1.5"/>'


def _outline(frame, pts, color, width, fill="none", opacity=None) -> str:
    extra = f' fill-opacity="{opacity}"' if opacity is not None else ""
    if len(pts) == 1:
        cx, cy = frame(pts[0])
        return f'<circle cx="{cx}" cy="{cy}" r="2" fill="{color}"/>'
    tag = "polyline" if len(pts) == 2 else "polygon"
    return (
        f'<{tag} points="{_points_attr(frame, pts)}" fill="{fill}"{extra} '
        f'stroke="{color}" stroke-width="{width}"/>'
    )


def _walk_panel(frame, walk: WalkTrace) -> list[str]:
    pts = list(walk.points) + [walk.points[0]]
    return [
        f'<polyline class="walk" points="{_points_attr(frame, pts)}" fill="none" '
        f'stroke="{WALK_COLOR}" stroke-width="2" stroke-linejoin="round"/>'
    ]


def _hull_panel(frame, hull: HullPolygon) -> list[str]:
    out = [_outline(frame, hull.vertices, HULL_COLOR, 2, fill=HULL_COLOR, opacity="0.2")]
    out += [_dot(frame, v, m, "#000000") for v, m in zip(hull.vertices, hull.marks)]
    return out


def _polytope_panel(frame, hull: HullPolygon, mp: MarkedPolytope) -> list[str]:
    out = [_outline(frame, hull.vertices, HULL_COLOR, 1)]
    for sq in mp.squares:
        i, j = sq.corner
        corners = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
        out.append(
            f'<polygon class="square" points="{_points_attr(frame, corners)}" fill="none" '
            f'stroke="{POLY_COLOR}" stroke-width="1" stroke-dasharray="2,2"/>'
        )
    verts = [(Fraction(x, 2), Fraction(y, 2)) for x, y in mp.vertices2x]
    if verts:
        out.append(_outline(frame, verts, POLY_COLOR, 2.5))
    out += [_dot(frame, v, m, POLY_COLOR) for v, m in zip(verts, mp.marks)]
    return out


def render_svg(walk: WalkTrace, hull: HullPolygon, mp: MarkedPolytope, panels=PANELS, title: str = "") -> str:
    panels = list(panels)
    for name in panels:
        if name not in PANELS:
            raise ValueError(f"unknown panel {name!r}")
    width = len(panels) * PANEL + (len(panels) - 1) * GAP
    height = PANEL + TITLE
    body = []
    for k, name in enumerate(panels):
        frame = _Frame(k, hull)
        body.append(f'<g class="panel" id="{name}">')
        label_x = _num(frame.ox + MARGIN)
        body.append(f'<text x="{label_x}" y="16" font-family="sans-serif" font-size="13">{name}</text>')
        body.extend(frame.grid())
        if name == "walk":
            body.extend(_walk_panel(frame, walk))
        elif name == "hull":
            body.extend(_hull_panel(frame, hull))
        else:
            body.extend(_polytope_panel(frame, hull, mp))
        body.append("</g>")
    head = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    if title:
        head.append(f"<title>{escape(title)}</title>")
    return "\n".join(head + body + ["</svg>"]) + "\n"
