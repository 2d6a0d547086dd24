"""Matplotlib figures for reports: drawings and bound curves."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bounds import formula_value  # noqa: E402
from .constructions import construction_count  # noqa: E402
from .crossings import Drawing, per_edge_crossings  # noqa: E402
from .graphs import Family, FamilySpec  # noqa: E402


def plot_drawing(d: Drawing, path: str | Path, title: str = "") -> Path:
    counts = per_edge_crossings(d)
    fig, ax = plt.subplots(figsize=(5, 5))
    pts = [(float(p.x), float(p.y)) for p in d.placement]
    for (s, t), c in counts.items():
        ax.plot([pts[s][0], pts[t][0]], [pts[s][1], pts[t][1]],
                color="black" if c == 0 else "tab:red", lw=1.4, zorder=1)
        if c:
            ax.annotate(str(c), ((pts[s][0] + pts[t][0]) / 2, (pts[s][1] + pts[t][1]) / 2),
                        color="tab:red", fontsize=8)
    ax.scatter([x for x, _ in pts], [y for _, y in pts], s=30, color="tab:blue", zorder=2)
    for i, (x, y) in enumerate(pts):
        ax.annotate(str(i), (x, y), textcoords="offset points", xytext=(4, 4), fontsize=8)
    ax.set_aspect("equal")
    ax.set_axis_off()
    ax.set_title(title or f"{sum(counts.values())} Orchard crossings")
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_bounds(family: Family, ns: list[int], path: str | Path) -> Path:
    """Stated lower/upper bounds, certified lower bound and construction count against n."""
    rows = []
    for n in ns:
        spec = FamilySpec(family, n)
        report = formula_value(spec)
        rows.append((n, report.lower, report.upper, report.certified_lower,
                     construction_count(spec)))
    fig, ax = plt.subplots(figsize=(6, 4))
    xs = [r[0] for r in rows]
    ax.plot(xs, [r[2] for r in rows], "-", color="tab:red", label="stated upper")
    ax.plot(xs, [r[1] for r in rows], "-", color="tab:blue", label="stated lower")
    ax.plot(xs, [r[3] for r in rows], "--", color="tab:green", label="certified lower")
    ax.plot(xs, [r[4] for r in rows], "o", color="black", ms=4, label="construction")
    ax.set_xlabel("n")
    ax.set_ylabel("Orchard crossings")
    ax.set_title(family.value)
    ax.legend(frameon=False)
    path = Path(path)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path
