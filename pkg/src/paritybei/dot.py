"""Graphviz DOT rendering with role and tree/disconnector styling."""

from __future__ import annotations

from .classify import Classification
from .graphs import Graph
from .treealgo import AlgorithmResult

_ROLE_COLORS = {
    "alpha": "lightblue",
    "beta": "orange",
    "x": "palegreen",
    "y": "plum",
}


def _role_color(role: str) -> str:
    return _ROLE_COLORS.get(role.split("_", 1)[0], "white")


def emit_dot(
    g: Graph,
    classification: Classification | None = None,
    result: AlgorithmResult | None = None,
) -> str:
    """Undirected DOT text; pattern roles are colored, the constructed tree
    is drawn bold and the S2/S0 vertices get distinct fills."""
    styles: dict[int, list[str]] = {v: [] for v in range(g.n)}
    if classification is not None and classification.pattern is not None:
        for role, v in sorted(classification.pattern.roles.items()):
            styles[v].append(f'fillcolor="{_role_color(role)}"')
            styles[v].append("style=filled")
            styles[v].append(f'xlabel="{role}"')
    if result is not None:
        for v in sorted(result.tree):
            styles[v].append("penwidth=2.5")
            styles[v].append('color="black"')
            styles[v].append('fillcolor="gold"')
            styles[v].append("style=filled")
        for v in sorted(result.s2):
            styles[v].append('fillcolor="tomato"')
            styles[v].append("style=filled")
        for v in sorted(result.s0):
            styles[v].append('fillcolor="salmon"')
            styles[v].append("style=filled")
    lines = ["graph parity_bei {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = ", ".join(dict.fromkeys(styles[v]))
        suffix = f" [{attrs}]" if attrs else ""
        lines.append(f'  "{g.labels[v]}"{suffix};')
    tree = frozenset() if result is None else result.tree
    for u, v in sorted(
        (min(g.labels[a], g.labels[b]), max(g.labels[a], g.labels[b]))
        for a, b in g.edges()
    ):
        iu, iv = g.index_of(u), g.index_of(v)
        if iu in tree and iv in tree:
            lines.append(f'  "{u}" -- "{v}" [penwidth=2.5];')
        else:
            lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
