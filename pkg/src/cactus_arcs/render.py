"""SVG and TikZ drawings of arc diagrams.

Points sit evenly on a circle, infinity on the far left, numbered clockwise.
Each chord is a quadratic curve bowed toward the disc centre; parallel chords
get increasing bows so they nest.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .diagram import INFINITY, ArcDiagram, require_valid

SIZE = 260.0
RADIUS = 100.0
ARC_COLOUR = "#e07b00"


def _angle(pos: int, n: int) -> float:
    return math.radians(180.0 - 360.0 * pos / (n + 1))


def _point(pos: int, n: int, radius: float = 1.0) -> tuple[float, float]:
    a = _angle(pos, n)
    return radius * math.cos(a), radius * math.sin(a)


def _curves(diagram: ArcDiagram) -> list[tuple[tuple[float, float], tuple[float, float], tuple[float, float]]]:
    """(start, control, end) in unit-circle coordinates, y pointing up."""
    n = diagram.n
    out = []
    for a, b, m in diagram.chords:
        (x1, y1), (x2, y2) = _point(a, n), _point(b, n)
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        length = math.hypot(x2 - x1, y2 - y1)
        dist = math.hypot(mx, my)
        if dist > 1e-9:
            ux, uy = -mx / dist, -my / dist
        else:
            ux, uy = -(y2 - y1) / length, (x2 - x1) / length
        for k in range(m):
            bow = 0.3 * length * (k + 1) / (m + 1)
            out.append(((x1, y1), (mx + ux * bow, my + uy * bow), (x2, y2)))
    return out


def _label(label: int) -> str:
    return "z∞" if label == INFINITY else f"z{label}"


def _fmt(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def to_svg(diagram: ArcDiagram) -> str:
    require_valid(diagram)
    n = diagram.n
    c = SIZE / 2

    def xy(x: float, y: float) -> str:
        return f"{_fmt(c + RADIUS * x)} {_fmt(c - RADIUS * y)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:g}" height="{SIZE:g}" '
        f'viewBox="0 0 {SIZE:g} {SIZE:g}">',
        f'  <circle class="boundary" cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(RADIUS)}" '
        'fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for start, ctrl, end in _curves(diagram):
        lines.append(
            f'  <path class="arc" d="M {xy(*start)} Q {xy(*ctrl)} {xy(*end)}" '
            f'fill="none" stroke="{ARC_COLOUR}" stroke-width="1.6"/>'
        )
    for pos, label in enumerate(diagram.arrangement):
        px, py = _point(pos, n)
        lx, ly = _point(pos, n, 1.14)
        cx_, cy_ = xy(px, py).split()
        tx, ty = xy(lx, ly).split()
        lines.append(f'  <circle class="point" cx="{cx_}" cy="{cy_}" r="3.5" fill="black"/>')
        lines.append(
            f'  <text class="label" x="{tx}" y="{ty}" font-size="13" text-anchor="middle" '
            f'dominant-baseline="middle">{escape(_label(label))}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def to_tikz(diagram: ArcDiagram) -> str:
    """Standalone LaTeX document with one tikzpicture."""
    require_valid(diagram)
    n = diagram.n
    r = 1.5

    def pt(x: float, y: float) -> str:
        return f"({_fmt(r * x)},{_fmt(r * y)})"

    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}",
        rf"  \draw[line width=1pt] (0,0) circle ({r}cm);",
    ]
    for start, ctrl, end in _curves(diagram):
        lines.append(
            rf"  \draw[orange, line width=1.1pt] {pt(*start)} .. controls {pt(*ctrl)} .. {pt(*end)};"
        )
    for pos, label in enumerate(diagram.arrangement):
        deg = _fmt(math.degrees(_angle(pos, n)))
        tex = r"z_{\infty}" if label == INFINITY else f"z_{{{label}}}"
        lines.append(rf"  \fill {pt(*_point(pos, n))} circle (2pt) node[label={deg}:${tex}$] {{}};")
    lines += [r"\end{tikzpicture}", r"\end{document}"]
    return "\n".join(lines) + "\n"


def render(diagram: ArcDiagram, fmt: str = "svg") -> str:
    if fmt == "svg":
        return to_svg(diagram)
    if fmt == "tikz":
        return to_tikz(diagram)
    raise ValueError(f"unknown render format {fmt!r}")
