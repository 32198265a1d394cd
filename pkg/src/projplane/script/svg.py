"""Affine-chart SVG rendering of points, lines and conics.

A chart drops one homogeneous coordinate: for ``chart=z`` the point
``(x, y, z)`` is drawn at ``(x/z, y/z)``.  Elements at infinity for the
chart are left out and reported.  All geometry up to the final pixel
formatting is exact, so the same bindings always give the same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape

from ..conic import Conic
from ..core import Line, Point, cross, dualize, line_basis
from ..linalg import mat_vec
from .parser import DEFAULT_SAMPLES, DEFAULT_VIEWPORT

WIDTH = 480
# sample points further than this many viewport spans from the centre break a polyline
_FAR = 50

Affine = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Chart:
    drop: str = "z"
    viewport: tuple[Fraction, Fraction, Fraction, Fraction] = DEFAULT_VIEWPORT
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if self.drop not in ("x", "y", "z"):
            raise ValueError(f"unknown chart {self.drop!r}")
        x0, x1, y0, y1 = self.viewport
        if not (x0 < x1 and y0 < y1):
            raise ValueError("viewport must have min < max on both axes")
        if self.samples < 2:
            raise ValueError("need at least two conic samples")

    @property
    def axes(self) -> tuple[int, int, int]:
        """(dropped index, horizontal index, vertical index)."""
        i = "xyz".index(self.drop)
        j, k = (n for n in range(3) if n != i)
        return i, j, k

    def affine(self, v: Sequence[int]) -> Optional[Affine]:
        i, j, k = self.axes
        if v[i] == 0:
            return None
        return Fraction(v[j], v[i]), Fraction(v[k], v[i])

    def line_equation(self, l: Line) -> Optional[tuple[int, int, int]]:
        """``(a, b, c)`` with ``aX + bY + c = 0``; None for the line at infinity."""
        i, j, k = self.axes
        a, b, c = l.v[j], l.v[k], l.v[i]
        if a == 0 and b == 0:
            return None
        return a, b, c

    def inside(self, p: Affine) -> bool:
        x0, x1, y0, y1 = self.viewport
        return x0 <= p[0] <= x1 and y0 <= p[1] <= y1

    @property
    def scale(self) -> Fraction:
        x0, x1, _, _ = self.viewport
        return Fraction(WIDTH) / (x1 - x0)

    @property
    def size(self) -> tuple[Fraction, Fraction]:
        x0, x1, y0, y1 = self.viewport
        return (x1 - x0) * self.scale, (y1 - y0) * self.scale

    def pixel(self, p: Affine) -> tuple[Fraction, Fraction]:
        x0, _, _, y1 = self.viewport
        return (p[0] - x0) * self.scale, (y1 - p[1]) * self.scale


def clip_line(chart: Chart, l: Line) -> Optional[tuple[Affine, Affine]]:
    """The exact segment of ``l`` inside the viewport, or None."""
    eq = chart.line_equation(l)
    if eq is None:
        return None
    a, b, c = eq
    x0, x1, y0, y1 = chart.viewport
    hits = set()
    if b:
        for x in (x0, x1):
            y = Fraction(-(a * x + c)) / b
            if y0 <= y <= y1:
                hits.add((x, y))
    if a:
        for y in (y0, y1):
            x = Fraction(-(b * y + c)) / a
            if x0 <= x <= x1:
                hits.add((x, y))
    if len(hits) < 2:
        return None
    ends = sorted(hits)
    return ends[0], ends[-1]


def conic_samples(k: Conic, n: int) -> list[tuple[int, int, int]]:
    """``n`` members swept once round the pencil at ``U``, as raw integer vectors.

    The pencil line at angle ``theta`` is ``cos q + sin r`` for two fixed
    lines ``q, r`` through ``U``, rounded to integers; the member on it is
    ``l x pi(l)``.  The map is quadratic in ``l``, so the sweep over half a
    turn closes up with consistent signs.
    """
    q, r = (dualize(p).v for p in line_basis(dualize(k.U)))
    mat = k.pi.range.matrix
    out = []
    for j in range(n):
        theta = math.pi * j / n
        c, s = round(math.cos(theta) * 10**6), round(math.sin(theta) * 10**6)
        l = tuple(c * a + s * b for a, b in zip(q, r))
        out.append(cross(l, mat_vec(mat, l)))
    return out


def conic_polylines(chart: Chart, k: Conic, n: int) -> list[list[Affine]]:
    """Visible pieces of the closed sample loop, split where it passes infinity."""
    i = chart.axes[0]
    x0, x1, y0, y1 = chart.viewport
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    far = _FAR * max(x1 - x0, y1 - y0)
    raw = conic_samples(k, n)
    raw.append(raw[0])
    pieces: list[list[Affine]] = []
    cur: list[Affine] = []
    sign = 0
    for v in raw:
        p = chart.affine(v)
        s = (v[i] > 0) - (v[i] < 0)
        if p is None or s != sign or abs(p[0] - cx) > far or abs(p[1] - cy) > far:
            if len(cur) > 1:
                pieces.append(cur)
            cur = []
        sign = s
        if p is not None and abs(p[0] - cx) <= far and abs(p[1] - cy) <= far:
            cur.append(p)
    if len(cur) > 1:
        pieces.append(cur)
    # the loop was cut at its starting point; rejoin when nothing broke there
    if len(pieces) > 1 and pieces[0][0] == pieces[-1][-1]:
        pieces[0] = pieces.pop()[:-1] + pieces[0]
    return pieces


def _f(v: Fraction) -> str:
    s = f"{float(v):.2f}"
    return "0.00" if s == "-0.00" else s


@dataclass
class EmitResult:
    path: str
    points: int = 0
    lines: int = 0
    conics: int = 0
    at_infinity: list[str] = field(default_factory=list)
    outside_viewport: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "path": self.path,
            "points": self.points,
            "lines": self.lines,
            "conics": self.conics,
            "at_infinity": list(self.at_infinity),
            "outside_viewport": list(self.outside_viewport),
        }


def render_svg(items: Iterable[tuple[str, object]], chart: Chart, path: str = "") -> tuple[str, EmitResult]:
    """SVG text for named points, lines, conics and point lists."""
    res = EmitResult(path)
    w, h = chart.size
    layers: dict[str, list[str]] = {"conic": [], "line": [], "point": []}
    for name, value in items:
        if isinstance(value, Point):
            _point(chart, name, value, layers["point"], res)
        elif isinstance(value, Line):
            seg = clip_line(chart, value)
            if chart.line_equation(value) is None:
                res.at_infinity.append(name)
            elif seg is None:
                res.outside_viewport.append(name)
            else:
                (ax, ay), (bx, by) = (chart.pixel(e) for e in seg)
                layers["line"].append(
                    f'<line class="line" data-name="{escape(name)}" x1="{_f(ax)}" y1="{_f(ay)}" '
                    f'x2="{_f(bx)}" y2="{_f(by)}"/>'
                )
                res.lines += 1
        elif isinstance(value, Conic):
            pieces = conic_polylines(chart, value, chart.samples)
            for piece in pieces:
                pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(chart.pixel, piece))
                layers["conic"].append(
                    f'<polyline class="conic" data-name="{escape(name)}" points="{pts}"/>'
                )
            res.conics += 1
        elif isinstance(value, list):
            for n, p in enumerate(value, start=1):
                _point(chart, f"{name}[{n}]", p, layers["point"], res)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(w)}" height="{_f(h)}" '
        f'viewBox="0 0 {_f(w)} {_f(h)}">',
        f'<defs><clipPath id="viewport"><rect x="0" y="0" width="{_f(w)}" height="{_f(h)}"/>'
        "</clipPath></defs>",
        '<rect width="100%" height="100%" fill="white"/>',
        '<g clip-path="url(#viewport)" fill="none" stroke-width="1.5">',
        '<g stroke="#1f77b4">', *layers["conic"], "</g>",
        '<g stroke="#444444">', *layers["line"], "</g>",
        "</g>",
        '<g font-family="sans-serif" font-size="12">', *layers["point"], "</g>",
        "</svg>",
    ]
    return "\n".join(out) + "\n", res


def _point(chart: Chart, name: str, p: Point, out: list[str], res: EmitResult) -> None:
    a = chart.affine(p.v)
    if a is None:
        res.at_infinity.append(name)
        return
    if not chart.inside(a):
        res.outside_viewport.append(name)
        return
    x, y = chart.pixel(a)
    out.append(f'<circle class="point" data-name="{escape(name)}" cx="{_f(x)}" cy="{_f(y)}" r="3" fill="black"/>')
    out.append(f'<text x="{_f(x + 5)}" y="{_f(y - 5)}">{escape(name)}</text>')
    res.points += 1


def emit_svg(items: Iterable[tuple[str, object]], chart: Chart, path: Path) -> EmitResult:
    text, res = render_svg(items, chart, str(path))
    path.write_text(text, encoding="utf-8")
    return res
