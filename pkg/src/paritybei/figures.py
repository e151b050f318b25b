"""Matplotlib figure rendering for report output.

Layouts come from a small seeded force-directed iteration, so the same
graph always lands in the same positions.  Figures accompany the delimited
report files; byte-level determinism is only promised for the text
outputs, not for PNG encoding.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .classify import Classification
from .graphs import Graph
from .treealgo import AlgorithmResult

_ROLE_COLORS = {
    "alpha": "#8ecae6",
    "beta": "#f4a261",
    "x": "#a7c957",
    "y": "#b392ac",
}


def spring_layout(g: Graph, seed: int = 0, iterations: int = 120) -> dict[int, tuple[float, float]]:
    """Deterministic Fruchterman-Reingold positions on the unit square."""
    n = g.n
    if n == 0:
        return {}
    rng = np.random.RandomState(seed)
    pos = rng.rand(n, 2)
    if n == 1:
        return {0: (float(pos[0, 0]), float(pos[0, 1]))}
    k = 1.0 / np.sqrt(n)
    temp = 0.1
    cool = temp / (iterations + 1)
    edges = g.edges()
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=-1)
        np.fill_diagonal(dist, 1e-9)
        force = (k * k / dist**2)[:, :, None] * delta
        disp = force.sum(axis=1)
        for u, v in edges:
            d = pos[u] - pos[v]
            ln = max(float(np.linalg.norm(d)), 1e-9)
            pull = d / ln * (ln * ln / k)
            disp[u] -= pull
            disp[v] += pull
        lengths = np.linalg.norm(disp, axis=1)
        lengths[lengths < 1e-9] = 1e-9
        step = np.minimum(lengths, temp)
        pos += disp / lengths[:, None] * step[:, None]
        temp -= cool
    pos -= pos.min(axis=0)
    span = pos.max(axis=0)
    span[span < 1e-9] = 1.0
    pos /= span
    return {v: (float(pos[v, 0]), float(pos[v, 1])) for v in range(n)}


def _vertex_colors(
    g: Graph,
    classification: Classification | None,
    result: AlgorithmResult | None,
) -> list[str]:
    colors = ["#dddddd"] * g.n
    if classification is not None and classification.pattern is not None:
        for role, v in classification.pattern.roles.items():
            colors[v] = _ROLE_COLORS.get(role.split("_", 1)[0], "#dddddd")
    if result is not None:
        for v in result.tree:
            colors[v] = "#ffd166"
        for v in result.s2:
            colors[v] = "#e76f51"
        for v in result.s0:
            colors[v] = "#f8961e"
    return colors


def render_figure(
    g: Graph,
    path: str | Path,
    classification: Classification | None = None,
    result: AlgorithmResult | None = None,
    title: str | None = None,
) -> Path:
    """Draw the graph with role/tree/disconnector coloring and save it."""
    path = Path(path)
    pos = spring_layout(g)
    fig, ax = plt.subplots(figsize=(5, 5))
    tree = frozenset() if result is None else result.tree
    for u, v in g.edges():
        (x1, y1), (x2, y2) = pos[u], pos[v]
        heavy = u in tree and v in tree
        ax.plot(
            [x1, x2],
            [y1, y2],
            color="#222222" if heavy else "#999999",
            linewidth=2.4 if heavy else 1.2,
            zorder=1,
        )
    colors = _vertex_colors(g, classification, result)
    xs = [pos[v][0] for v in range(g.n)]
    ys = [pos[v][1] for v in range(g.n)]
    ax.scatter(xs, ys, s=420, c=colors, edgecolors="#222222", zorder=2)
    for v in range(g.n):
        ax.annotate(
            str(g.labels[v]),
            pos[v],
            ha="center",
            va="center",
            fontsize=10,
            zorder=3,
        )
    if title:
        ax.set_title(title, fontsize=10)
    ax.set_axis_off()
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
