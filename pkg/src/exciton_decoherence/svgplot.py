"""Minimal deterministic SVG line plots (axes, ticks, polylines, legend).

Output depends only on the inputs: fixed canvas, fixed number formatting,
no timestamps, so identical data renders byte-identical files.
"""
import math
from xml.sax.saxutils import escape

import numpy as np

WIDTH, HEIGHT = 800, 600
MARGIN = dict(left=90, right=30, top=40, bottom=70)
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")
DASHES = ("", "8,4", "2,3", "8,3,2,3")


def _nice_ticks(lo, hi, n=6):
    if hi == lo:
        return [lo]
    raw = (hi - lo) / n
    mag = 10 ** math.floor(math.log10(raw))
    step = min((s * mag for s in (1, 2, 2.5, 5, 10) if s * mag >= raw), default=10 * mag)
    start = math.ceil(lo / step) * step
    ticks = []
    k = 0
    while start + k * step <= hi + 1e-9 * step:
        ticks.append(start + k * step)
        k += 1
    return ticks


def _fmt(v):
    return f"{v:.4g}"


def render(series, x_label="", y_label="", title="", log_y=False):
    """``series``: iterable of (label, x, y). Returns SVG text."""
    series = [(lbl, np.asarray(x, float), np.asarray(y, float)) for lbl, x, y in series]
    if not series or any(len(x) == 0 for _, x, _ in series):
        raise ValueError("nothing to plot")
    if log_y and any(np.any(y <= 0) for _, _, y in series):
        raise ValueError("log-y axis needs strictly positive values")
    tf = np.log10 if log_y else (lambda a: a)
    xs = np.concatenate([x for _, x, _ in series])
    ys = np.concatenate([tf(y) for _, _, y in series])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pad = 0.05 * (y1 - y0)
    y0, y1 = y0 - pad, y1 + pad
    pw = WIDTH - MARGIN["left"] - MARGIN["right"]
    ph = HEIGHT - MARGIN["top"] - MARGIN["bottom"]

    def px(x):
        return MARGIN["left"] + (x - x0) / (x1 - x0) * pw

    def py(y):
        return MARGIN["top"] + (1.0 - (y - y0) / (y1 - y0)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN["left"]}" y="{MARGIN["top"]}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.2f}" y="24" text-anchor="middle" font-size="16">{escape(title)}</text>')
    for t in _nice_ticks(x0, x1):
        X = px(t)
        out.append(f'<line x1="{X:.2f}" y1="{MARGIN["top"] + ph}" x2="{X:.2f}" y2="{MARGIN["top"] + ph + 6}" stroke="black"/>')
        out.append(f'<text x="{X:.2f}" y="{MARGIN["top"] + ph + 22}" text-anchor="middle" font-size="12">{_fmt(t)}</text>')
    if log_y:
        yticks = [float(k) for k in range(math.ceil(y0), math.floor(y1) + 1)] or _nice_ticks(y0, y1)
    else:
        yticks = _nice_ticks(y0, y1)
    for t in yticks:
        Y = py(t)
        label = f"1e{t:g}" if log_y and float(t).is_integer() else _fmt(10**t if log_y else t)
        out.append(f'<line x1="{MARGIN["left"] - 6}" y1="{Y:.2f}" x2="{MARGIN["left"]}" y2="{Y:.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN["left"] - 9}" y="{Y + 4:.2f}" text-anchor="end" font-size="12">{label}</text>')
    out.append(f'<text x="{MARGIN["left"] + pw / 2:.2f}" y="{HEIGHT - 20}" text-anchor="middle" font-size="14">{escape(x_label)}</text>')
    cy = MARGIN["top"] + ph / 2
    out.append(f'<text x="20" y="{cy:.2f}" text-anchor="middle" font-size="14" transform="rotate(-90 20 {cy:.2f})">{escape(y_label)}</text>')
    for i, (label, x, y) in enumerate(series):
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(x, tf(y)))
        color = COLORS[i % len(COLORS)]
        dash = DASHES[(i // len(COLORS)) % len(DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2"{dash_attr} points="{pts}"/>')
        ly = MARGIN["top"] + 18 + 18 * i
        lx = MARGIN["left"] + pw - 180
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 30}" y2="{ly}" stroke="{color}" stroke-width="2"{dash_attr}/>')
        out.append(f'<text x="{lx + 36}" y="{ly + 4}" font-size="12">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
