"""Matplotlib renderings of length graphs and quotient graphs, written as
PNG files next to the machine-readable report output."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def _arc(ax, p0, p1, bend, **kw):
    """Quadratic arc between two points with a perpendicular bend offset."""
    (x0, y0), (x1, y1) = p0, p1
    mx, my = (x0 + x1) / 2, (y0 + y1) / 2
    dx, dy = x1 - x0, y1 - y0
    norm = math.hypot(dx, dy) or 1.0
    cx, cy = mx - dy / norm * bend, my + dx / norm * bend
    ts = [i / 24 for i in range(25)]
    xs = [(1 - t) ** 2 * x0 + 2 * (1 - t) * t * cx + t ** 2 * x1 for t in ts]
    ys = [(1 - t) ** 2 * y0 + 2 * (1 - t) * t * cy + t ** 2 * y1 for t in ts]
    ax.plot(xs, ys, **kw)
    return cx, cy


def render_length_graph(graph, path, title=None):
    """Draw a length graph: vertices on a circle, parallel edges fanned
    out, edge lengths > 1 annotated."""
    n = len(graph.vertices)
    pos = {}
    for i, v in enumerate(graph.vertices):
        a = 2 * math.pi * i / max(n, 1)
        pos[v] = (math.cos(a), math.sin(a))
    fig, ax = plt.subplots(figsize=(5, 5))
    groups = {}
    for u, v, l in graph.edges:
        groups.setdefault(frozenset((u, v)), []).append(l)
    for pair, lengths in groups.items():
        u, v = tuple(pair)
        k = len(lengths)
        for idx, l in enumerate(lengths):
            bend = 0.35 * (idx - (k - 1) / 2)
            cx, cy = _arc(ax, pos[u], pos[v], bend, color="tab:blue", lw=1.2)
            if l > 1:
                ax.annotate(str(l), (cx, cy), fontsize=8, color="tab:red")
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", color="black", ms=6)
        ax.annotate(str(v), (x, y), textcoords="offset points", xytext=(5, 5), fontsize=8)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_quotient_graph(qg, path, title=None):
    """Draw a quotient graph layer by layer (x = layer index); half-line
    tails are shown as dashed stubs and cusp labels mark their chains."""
    pos = {}
    for lo in qg.layers:
        k = len(lo.orbits)
        for j in range(k):
            pos[f"L{lo.layer}.{j}"] = (lo.layer, j - (k - 1) / 2)
    fig, ax = plt.subplots(figsize=(7, 5))
    groups = {}
    for e in qg.edges:
        groups.setdefault((e.u, e.v), []).append(e.length)
    for (u, v), lengths in groups.items():
        k = len(lengths)
        for idx, l in enumerate(lengths):
            bend = 0.25 * (idx - (k - 1) / 2)
            cx, cy = _arc(ax, pos[u], pos[v], bend, color="tab:blue", lw=1.0)
            if l > 1:
                ax.annotate(str(l), (cx, cy), fontsize=8, color="tab:red")
    for v, (x, y) in pos.items():
        ax.plot([x], [y], "o", color="black", ms=5)
    for v in qg.tails:
        x, y = pos[v]
        ax.plot([x, x + 0.5], [y, y], ls="--", color="gray", lw=1.0)
    for label, info in qg.cusps.items():
        top = info["chain"][-1]
        x, y = pos[top]
        ax.annotate(f"[{label}]", (x + 0.55, y), fontsize=9, color="tab:green")
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
