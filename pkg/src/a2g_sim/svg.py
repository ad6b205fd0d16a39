"""Minimal self-contained SVG line charts.

Output is a pure function of the input series, so identical data always
yields identical bytes.
"""
from __future__ import annotations

import math
from html import escape
from pathlib import Path
from typing import Sequence

from .emit import fmt6
from .errors import ConfigError
from .scenario import CurveSeries

WIDTH, HEIGHT = 800, 600
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 90, 170, 50, 70
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf")


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        span = abs(lo) or 1.0
        lo, hi = lo - 0.5 * span, hi + 0.5 * span
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    # normalise -0.0 so labels never read "-0"
    return [k * step + 0.0 for k in range(first, last + 1)]


def _bounds(values: Sequence[float]) -> tuple[float, float]:
    lo, hi = min(values), max(values)
    if hi == lo:
        pad = abs(lo) * 0.05 or 1.0
        return lo - pad, hi + pad
    return lo, hi


def render_svg(series: Sequence[CurveSeries], title: str) -> str:
    """Render ``series`` as an 800x600 SVG document string."""
    series = [s for s in series]
    if not series:
        raise ConfigError("cannot plot an empty series list")
    pts = [p for s in series for p in s.points if math.isfinite(p[1])]
    if not pts:
        raise ConfigError("series contain no finite points")
    x0, x1 = _bounds([p[0] for p in pts])
    y0, y1 = _bounds([p[1] for p in pts])
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x: float) -> float:
        return MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w

    def sy(y: float) -> float:
        return MARGIN_TOP + (y1 - y) / (y1 - y0) * plot_h

    first = series[0]
    x_label = f"{first.x_name} [{first.x_unit}]" if first.x_unit else first.x_name
    y_label = f"{first.y_name} [{first.y_unit}]" if first.y_unit else first.y_name

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:g}" y="28" text-anchor="middle" font-size="16">{escape(title)}</text>',
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="black"/>',
    ]
    bottom = MARGIN_TOP + plot_h
    for t in nice_ticks(x0, x1):
        if x0 <= t <= x1:
            px = sx(t)
            out.append(f'<line x1="{px:.2f}" y1="{bottom}" x2="{px:.2f}" y2="{bottom + 5}" stroke="black"/>')
            out.append(f'<text x="{px:.2f}" y="{bottom + 20}" text-anchor="middle">{fmt6(t)}</text>')
    for t in nice_ticks(y0, y1):
        if y0 <= t <= y1:
            py = sy(t)
            out.append(
                f'<line x1="{MARGIN_LEFT - 5}" y1="{py:.2f}" x2="{MARGIN_LEFT}" y2="{py:.2f}" stroke="black"/>'
            )
            out.append(
                f'<text x="{MARGIN_LEFT - 8}" y="{py + 4:.2f}" text-anchor="end">{fmt6(t)}</text>'
            )
    out.append(
        f'<text x="{MARGIN_LEFT + plot_w / 2:g}" y="{HEIGHT - 25}" text-anchor="middle">'
        f"{escape(x_label)}</text>"
    )
    cy = MARGIN_TOP + plot_h / 2
    out.append(
        f'<text x="25" y="{cy:g}" text-anchor="middle" transform="rotate(-90 25 {cy:g})">'
        f"{escape(y_label)}</text>"
    )

    legend_x = MARGIN_LEFT + plot_w + 15
    for i, s in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in s.points if math.isfinite(y))
        if coords:
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')
        ly = MARGIN_TOP + 10 + 20 * i
        out.append(
            f'<line x1="{legend_x}" y1="{ly}" x2="{legend_x + 25}" y2="{ly}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(f'<text x="{legend_x + 30}" y="{ly + 4}">{escape(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg_plot(series: Sequence[CurveSeries], title: str, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(render_svg(series, title), encoding="utf-8", newline="\n")
    return path
