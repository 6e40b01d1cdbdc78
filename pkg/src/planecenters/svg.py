"""SVG 1.1 figures: input points as filled dots, computed centers as open
dots, polygon edges, the outer circle about the centroid and any mirror
axis as strokes. Output is deterministic for identical input."""

from __future__ import annotations

from xml.sax.saxutils import escape

from . import numeric as num
from .geom import Point, centroid, dist2
from .scene import SceneFile

MARGIN = 0.1


def _f(v) -> str:
    s = f"{float(num.to_real(v)):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def viewbox(points: list[Point], margin: float = MARGIN) -> tuple[float, float, float, float]:
    """(min x, min y, width, height) in SVG coordinates (y pointing down),
    padded by ``margin`` times the extent on every side."""
    xs = [float(num.to_real(p.x)) for p in points]
    ys = [-float(num.to_real(p.y)) for p in points]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    if w == 0 and h == 0:
        w = h = 1.0
    w, h = (w or h), (h or w)
    return min(xs) - margin * w, min(ys) - margin * h, w * (1 + 2 * margin), h * (1 + 2 * margin)


def render(scene: SceneFile, centers: dict | None = None, axis: tuple[Point, Point] | None = None,
           width: int = 800) -> str:
    """SVG text for ``scene`` with ``centers`` (name -> Point) overlaid."""
    pts = list(scene.points)
    centers = centers or {}
    c = centroid(pts)
    r = num.sqrt(max((dist2(p, c) for p in pts), key=num.to_real))
    ring = [Point(num.add(c.x, r), c.y), Point(num.sub(c.x, r), c.y),
            Point(c.x, num.add(c.y, r)), Point(c.x, num.sub(c.y, r))]
    vx, vy, vw, vh = viewbox(pts + list(centers.values()) + ring)
    height = max(1, round(width * vh / vw))
    unit = max(vw, vh)
    dot = unit * 0.008
    stroke = unit * 0.003
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{vx:.6f} {vy:.6f} {vw:.6f} {vh:.6f}">',
        f'<g fill="none" stroke="#888888" stroke-width="{stroke:.6f}">',
        f'<circle cx="{_f(c.x)}" cy="{_f(-c.y)}" r="{_f(r)}"/>',
    ]
    if axis is not None:
        a, d = axis
        k = unit * 2 / max(float(num.to_real(d.norm2())) ** 0.5, 1e-300)
        p = (float(num.to_real(a.x)) - k * float(num.to_real(d.x)), -(float(num.to_real(a.y)) - k * float(num.to_real(d.y))))
        q = (float(num.to_real(a.x)) + k * float(num.to_real(d.x)), -(float(num.to_real(a.y)) + k * float(num.to_real(d.y))))
        out.append(f'<line x1="{p[0]:.6f}" y1="{p[1]:.6f}" x2="{q[0]:.6f}" y2="{q[1]:.6f}" stroke-dasharray="{4 * stroke:.6f}"/>')
    out.append("</g>")
    if scene.kind == "polygon":
        coords = " ".join(f"{_f(p.x)},{_f(-p.y)}" for p in pts)
        out.append(f'<polygon points="{coords}" fill="none" stroke="#000000" stroke-width="{stroke:.6f}"/>')
    out.append('<g fill="#000000" stroke="none">')
    for p in pts:
        out.append(f'<circle cx="{_f(p.x)}" cy="{_f(-p.y)}" r="{dot:.6f}"/>')
    out.append("</g>")
    out.append(f'<g fill="#ffffff" stroke="#c00000" stroke-width="{stroke:.6f}">')
    for name, p in centers.items():
        out.append(f'<circle cx="{_f(p.x)}" cy="{_f(-p.y)}" r="{1.6 * dot:.6f}"><title>{escape(name)}</title></circle>')
    out.append("</g>")
    out.append(f'<g font-family="sans-serif" font-size="{4 * dot:.6f}" fill="#c00000">')
    for name, p in centers.items():
        out.append(f'<text x="{float(num.to_real(p.x)) + 2 * dot:.6f}" y="{-float(num.to_real(p.y)) - 2 * dot:.6f}">{escape(name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
