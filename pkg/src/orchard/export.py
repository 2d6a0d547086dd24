"""Reading and writing drawings: JSON, SVG with an embedded exact copy."""
from __future__ import annotations

import json
import re
from itertools import combinations
from pathlib import Path

from .crossings import Drawing, GeneralPositionError, per_edge_crossings
from .exact_geom import strictly_separates

SVG_MARKER = "orchard-drawing:"


class DrawingFormatError(ValueError):
    """File content is not a drawing."""


def load_drawing(path: str | Path) -> Drawing:
    """Read a drawing from JSON or from an SVG written by :func:`to_svg`.

    Raises DrawingFormatError on malformed content; general-position failures
    propagate as GeneralPositionError.
    """
    text = Path(path).read_text()
    if text.lstrip().startswith("<"):
        match = re.search(re.escape(SVG_MARKER) + r"\s*(\{.*?\})\s*-->", text, re.S)
        if not match:
            raise DrawingFormatError(f"{path}: SVG has no embedded drawing")
        text = match.group(1)
    try:
        data = json.loads(text)
        return Drawing.from_json(data)
    except GeneralPositionError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DrawingFormatError(f"{path}: {exc}") from exc


def save_drawing(d: Drawing, path: str | Path) -> None:
    Path(path).write_text(d.dumps(indent=1) + "\n")


def _line_through_box(p, q, lo, hi):
    """Endpoints of the line pq clipped to the square [lo, hi]^2 (floats)."""
    (px, py), (qx, qy) = p, q
    dx, dy = qx - px, qy - py
    ts = []
    for bound in (lo, hi):
        if dx:
            ts.append((bound - px) / dx)
        if dy:
            ts.append((bound - py) / dy)
    pts = [(px + t * dx, py + t * dy) for t in ts]
    pts = [(x, y) for x, y in pts if lo - 1e-9 <= x <= hi + 1e-9 and lo - 1e-9 <= y <= hi + 1e-9]
    if len(pts) < 2:
        return p, q
    pts.sort()
    return pts[0], pts[-1]


def _intersection(p, q, s, t):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p, q, s, t
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return ((a * (x3 - x4) - (x1 - x2) * b) / den, (a * (y3 - y4) - (y1 - y2) * b) / den)


def to_svg(d: Drawing, show_lines: bool = False, size: int = 480) -> str:
    """SVG 1.1 picture of the drawing.

    Coordinates are rounded to floats for display only; the exact drawing is
    embedded as JSON in a comment, which :func:`load_drawing` reads back.
    """
    pts = [(float(p.x), float(p.y)) for p in d.placement]
    xs = [x for x, _ in pts] or [0.0]
    ys = [y for _, y in pts] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    pad = 0.12 * span
    lo_x, lo_y = min(xs) - pad, min(ys) - pad
    scale = size / (span + 2 * pad)

    def sx(x):
        return (x - lo_x) * scale

    def sy(y):
        return size - (y - lo_y) * scale

    counts = per_edge_crossings(d)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<!-- {SVG_MARKER} {json.dumps(d.to_json())} -->",
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if show_lines:
        box_lo, box_hi = min(lo_x, lo_y), max(lo_x, lo_y) + span + 2 * pad
        out.append('<g stroke="#bbbbbb" stroke-width="0.6" stroke-dasharray="3,3">')
        for u, v in combinations(range(len(pts)), 2):
            if d.graph.has_edge(u, v):
                continue
            (ax, ay), (bx, by) = _line_through_box(pts[u], pts[v], box_lo, box_hi)
            out.append(f'<line x1="{sx(ax):.2f}" y1="{sy(ay):.2f}" x2="{sx(bx):.2f}" y2="{sy(by):.2f}"/>')
        out.append("</g>")
    out.append('<g stroke="black" stroke-width="1.6">')
    for s, t in d.graph.edges:
        colour = "black" if counts[(s, t)] == 0 else "#c0392b"
        out.append(f'<line x1="{sx(pts[s][0]):.2f}" y1="{sy(pts[s][1]):.2f}" '
                   f'x2="{sx(pts[t][0]):.2f}" y2="{sy(pts[t][1]):.2f}" stroke="{colour}">'
                   f"<title>edge {s}-{t}: {counts[(s, t)]} crossings</title></line>")
    out.append("</g>")
    if show_lines:
        P = d.placement
        out.append('<g fill="none" stroke="#c0392b" stroke-width="1">')
        for s, t in d.graph.edges:
            for u, v in combinations(range(len(pts)), 2):
                if strictly_separates(P[u], P[v], P[s], P[t]):
                    cx, cy = _intersection(pts[u], pts[v], pts[s], pts[t])
                    out.append(f'<circle cx="{sx(cx):.2f}" cy="{sy(cy):.2f}" r="3"/>')
        out.append("</g>")
    out.append('<g fill="#1f4e79" font-family="sans-serif" font-size="11">')
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="4.5"/>')
        out.append(f'<text x="{sx(x) + 6:.2f}" y="{sy(y) - 6:.2f}">{i}</text>')
    out.append("</g>")
    out.append(f'<text x="8" y="{size - 8}" font-family="sans-serif" font-size="12">'
               f"total {sum(counts.values())}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
