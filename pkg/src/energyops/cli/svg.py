"""Minimal standalone SVG line charts."""
from __future__ import annotations

import math
from html import escape
from typing import Mapping, Sequence

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 170, 36, 48
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")


def _f(v: float) -> str:
    return f"{v:.2f}"


def nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((s * mag for s in (1, 2, 5, 10) if s * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 10))
        t += step
    return ticks


def line_chart(series: Mapping[str, tuple[Sequence[float], Sequence[float]]], title: str = "",
               xlabel: str = "", ylabel: str = "") -> str:
    """Render ``{label: (xs, ys)}`` as an SVG document.

    Non-finite y values break the polyline and are not drawn.  A series with
    a single point is drawn as a marker.
    """
    xs = [x for sx, _ in series.values() for x in sx]
    ys = [y for _, sy in series.values() for y in sy if math.isfinite(y)]
    x0, x1 = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y0, y1 = (min(ys), max(ys)) if ys else (0.0, 1.0)
    if x1 <= x0:
        x0, x1 = x0 - 0.5, x0 + 0.5
    if y1 <= y0:
        y0, y1 = y0 - 1.0, y0 + 1.0
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(x):
        return MARGIN_L + (x - x0) / (x1 - x0) * pw

    def py(y):
        return MARGIN_T + (1 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{_f(MARGIN_L + pw / 2)}" y="20" text-anchor="middle" font-size="13">{escape(title)}</text>')
    for t in nice_ticks(x0, x1):
        if x0 <= t <= x1:
            out.append(f'<line x1="{_f(px(t))}" y1="{MARGIN_T + ph}" x2="{_f(px(t))}" y2="{MARGIN_T + ph + 4}" stroke="black"/>')
            out.append(f'<text x="{_f(px(t))}" y="{MARGIN_T + ph + 16}" text-anchor="middle">{t:g}</text>')
    for t in nice_ticks(y0, y1):
        if y0 <= t <= y1:
            out.append(f'<line x1="{MARGIN_L - 4}" y1="{_f(py(t))}" x2="{MARGIN_L}" y2="{_f(py(t))}" stroke="black"/>')
            out.append(f'<line x1="{MARGIN_L}" y1="{_f(py(t))}" x2="{MARGIN_L + pw}" y2="{_f(py(t))}" stroke="#ddd"/>')
            out.append(f'<text x="{MARGIN_L - 7}" y="{_f(py(t) + 4)}" text-anchor="end">{t:g}</text>')
    if xlabel:
        out.append(f'<text x="{_f(MARGIN_L + pw / 2)}" y="{HEIGHT - 10}" text-anchor="middle">{escape(xlabel)}</text>')
    if ylabel:
        cy = MARGIN_T + ph / 2
        out.append(f'<text x="16" y="{_f(cy)}" text-anchor="middle" transform="rotate(-90 16 {_f(cy)})">{escape(ylabel)}</text>')

    for idx, (label, (sx, sy)) in enumerate(series.items()):
        color = PALETTE[idx % len(PALETTE)]
        runs, run = [], []
        for x, y in zip(sx, sy):
            if math.isfinite(y):
                run.append((px(x), py(y)))
            elif run:
                runs.append(run)
                run = []
        if run:
            runs.append(run)
        for r in runs:
            if len(r) == 1:
                out.append(f'<circle cx="{_f(r[0][0])}" cy="{_f(r[0][1])}" r="3" fill="{color}"/>')
            else:
                pts = " ".join(f"{_f(a)},{_f(b)}" for a, b in r)
                out.append(f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_T + 12 + 16 * idx
        lx = MARGIN_L + pw + 12
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 20}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 26}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
