"""Graph parsing and emission in edge-list and JSON formats.

Edge-list lines hold two labels ("u v"); a single label declares an
isolated vertex; '#' starts a comment and blank lines are ignored.  The
JSON form is ``{"vertices": [...], "edges": [[u, v], ...]}``.  Both
round-trip exactly (up to whitespace).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, GraphInputError, from_labeled

FORMAT_EDGE_LIST = "edge-list"
FORMAT_JSON = "json"


@dataclass(frozen=True)
class GraphDocument:
    format: str
    labels: tuple[int, ...]
    graph: Graph


def parse_graph(text: str, fmt: str = FORMAT_EDGE_LIST) -> GraphDocument:
    if fmt == FORMAT_EDGE_LIST:
        return _parse_edge_list(text)
    if fmt == FORMAT_JSON:
        return _parse_json(text)
    raise GraphInputError(f"unknown graph format '{fmt}'")


def sniff_format(text: str) -> str:
    return FORMAT_JSON if text.lstrip()[:1] == "{" else FORMAT_EDGE_LIST


def _parse_edge_list(text: str) -> GraphDocument:
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected integer labels, got '{raw.strip()}'")
        if any(x < 0 for x in nums):
            raise GraphInputError(f"line {lineno}: labels must be non-negative")
        if len(nums) == 1:
            vertices.add(nums[0])
        elif len(nums) == 2:
            u, v = nums
            if u == v:
                raise GraphInputError(f"line {lineno}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphInputError(f"line {lineno}: duplicate edge ({u}, {v})")
            seen.add(key)
            vertices.update((u, v))
            edges.append((u, v))
        else:
            raise GraphInputError(f"line {lineno}: expected 'u v' or a single label")
    try:
        g = from_labeled(sorted(vertices), edges)
    except GraphInputError as exc:
        raise GraphInputError(str(exc)) from None
    return GraphDocument(FORMAT_EDGE_LIST, g.labels, g)


def _parse_json(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"line {exc.lineno}: invalid JSON ({exc.msg})")
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise GraphInputError("JSON graph needs 'vertices' and 'edges' fields")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, int) for v in vertices):
        raise GraphInputError("'vertices' must be a list of integers")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise GraphInputError("'edges' must be a list of [u, v] pairs")
    seen = set()
    for u, v in edges:
        if u == v:
            raise GraphInputError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    g = from_labeled(vertices, [(u, v) for u, v in edges])
    return GraphDocument(FORMAT_JSON, g.labels, g)


def emit_graph(doc: GraphDocument, fmt: str | None = None) -> str:
    fmt = fmt or doc.format
    g = doc.graph
    label_edges = sorted(
        (min(g.labels[u], g.labels[v]), max(g.labels[u], g.labels[v]))
        for u, v in g.edges()
    )
    if fmt == FORMAT_EDGE_LIST:
        lines = []
        isolated = sorted(
            g.labels[v] for v in range(g.n) if not g.adj[v]
        )
        lines.extend(str(v) for v in isolated)
        lines.extend(f"{u} {v}" for u, v in label_edges)
        return "\n".join(lines) + ("\n" if lines else "")
    if fmt == FORMAT_JSON:
        payload = {
            "vertices": sorted(g.labels),
            "edges": [list(e) for e in label_edges],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    raise GraphInputError(f"unknown graph format '{fmt}'")
