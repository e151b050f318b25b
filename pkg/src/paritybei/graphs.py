"""Simple undirected graphs with component, bipartiteness and block analysis.

Vertices are normalized to ``0..n-1`` internally; the original input labels
are retained on the graph and used whenever results are reported.  All
values are immutable after construction and every operation is a pure
function, so everything here is safe to evaluate concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphInputError(ValueError):
    """Raised when edge data does not describe a simple undirected graph."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``labels[v]`` is the original label of internal vertex ``v``; labels are
    strictly increasing, so internal order agrees with label order.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[int, ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in self.neighbors(u) if u < v
        )

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def label_of(self, v: int) -> int:
        return self.labels[v]

    def index_of(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no vertex labeled {label}") from None

    def labels_of(self, vs: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.labels[v] for v in vs))

    def induced(self, vs: Iterable[int]) -> "Graph":
        """Induced subgraph; original labels are carried over."""
        kept = sorted(set(vs))
        pos = {v: i for i, v in enumerate(kept)}
        adj = tuple(
            frozenset(pos[u] for u in self.adj[v] if u in pos) for v in kept
        )
        return Graph(len(kept), adj, tuple(self.labels[v] for v in kept))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph on vertices ``0..n-1``.

    Rejects self-loops, endpoints outside ``0..n-1`` and duplicate edges
    (a pair and its reverse count as duplicates).
    """
    if n < 0:
        raise GraphInputError(f"vertex count must be non-negative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), tuple(range(n)))


def from_labeled(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from arbitrary non-negative integer labels.

    Labels are normalized to ``0..n-1`` in increasing order and retained.
    """
    label_list = sorted(set(vertices))
    known = set(label_list)
    for u, v in edges:
        if u not in known or v not in known:
            raise GraphInputError(f"edge ({u}, {v}) uses an undeclared vertex")
    pos = {lab: i for i, lab in enumerate(label_list)}
    g = build_graph(len(label_list), [(pos[u], pos[v]) for u, v in edges])
    return Graph(g.n, g.adj, tuple(label_list))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union with fresh identity labels ``0..n-1``."""
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return build_graph(a.n + b.n, edges)


# ---------------------------------------------------------------------------
# Components, bipartiteness and removal profiles


def connected_components(
    g: Graph, removed: frozenset[int] = frozenset()
) -> tuple[frozenset[int], ...]:
    """Components of ``g`` minus ``removed``, ordered by least vertex."""
    seen: set[int] = set(removed)
    comps: list[frozenset[int]] = []
    for start in range(g.n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = {start}
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def _two_color(g: Graph, comp: frozenset[int]) -> tuple[bool, object]:
    """2-color one component.

    Returns ``(True, coloring)`` with a vertex -> 0/1 map, or
    ``(False, cycle)`` with an odd cycle given as a vertex tuple whose
    consecutive entries (cyclically) are edges.
    """
    root = min(comp)
    color = {root: 0}
    parent: dict[int, int | None] = {root: None}
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in sorted(g.adj[u]):
            if w not in comp:
                continue
            if w not in color:
                color[w] = 1 - color[u]
                parent[w] = u
                order.append(w)
            elif color[w] == color[u]:
                # Join the two BFS-tree paths at their first common vertex;
                # equal colors make the resulting cycle odd.
                path_u = _path_to_root(parent, u)
                path_w = _path_to_root(parent, w)
                on_w = {x: j for j, x in enumerate(path_w)}
                i_u = next(j for j, x in enumerate(path_u) if x in on_w)
                j_w = on_w[path_u[i_u]]
                cycle = path_u[: i_u + 1] + list(reversed(path_w[:j_w]))
                return False, tuple(cycle)
    return True, color


def _path_to_root(parent: Mapping[int, int | None], v: int) -> list[int]:
    out = [v]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])  # type: ignore[index]
    return out


@dataclass(frozen=True)
class RemovalProfile:
    """All component data of ``G`` minus a removed vertex set ``S``.

    ``witnesses[i]`` is a proper 2-coloring for bipartite components and an
    odd-cycle vertex tuple otherwise.  ``reconnect[s]`` lists the indices of
    the components containing a neighbor of ``s``.
    """

    removed: frozenset[int]
    components: tuple[frozenset[int], ...]
    bipartite: tuple[bool, ...]
    witnesses: tuple[object, ...]
    reconnect: Mapping[int, frozenset[int]]

    @property
    def c(self) -> int:
        return len(self.components)

    @property
    def b(self) -> int:
        return sum(1 for f in self.bipartite if f)


def removal_profile(g: Graph, removed: Iterable[int]) -> RemovalProfile:
    """Components, bipartiteness flags and reconnection map of ``G - S``."""
    s = frozenset(removed)
    if not s <= set(range(g.n)):
        raise GraphInputError(f"removed set {sorted(s)} not within 0..{g.n - 1}")
    comps = connected_components(g, s)
    flags: list[bool] = []
    wits: list[object] = []
    for comp in comps:
        ok, data = _two_color(g, comp)
        flags.append(ok)
        wits.append(data)
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    reconnect = {
        v: frozenset(where[u] for u in g.adj[v] if u in where) for v in sorted(s)
    }
    return RemovalProfile(s, comps, tuple(flags), tuple(wits), reconnect)


def component_counts(g: Graph, removed: Iterable[int]) -> tuple[int, int]:
    """Fast ``(c, b)`` pair for ``G - S`` without building a full profile."""
    s = frozenset(removed)
    c = b = 0
    for comp in connected_components(g, s):
        c += 1
        ok, _ = _two_color(g, comp)
        if ok:
            b += 1
    return c, b


# ---------------------------------------------------------------------------
# Blocks (biconnected components)


def blocks(g: Graph) -> tuple[frozenset[int], ...]:
    """Biconnected blocks; bridges appear as 2-vertex blocks, isolated
    vertices as singletons.  Every edge lies in exactly one block and two
    distinct blocks share at most one vertex.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[frozenset[int]] = []
    timer = 0
    for root in range(g.n):
        if root in disc:
            continue
        if not g.adj[root]:
            disc[root] = timer
            timer += 1
            out.append(frozenset({root}))
            continue
        edge_stack: list[tuple[int, int]] = []
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterable[int]]] = [
            (root, -1, iter(sorted(g.adj[root])))
        ]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:  # type: ignore[union-attr]
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    comp: set[int] = set()
                    while edge_stack:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (pv, v):
                            break
                    if comp:
                        out.append(frozenset(comp))
    return tuple(sorted(out, key=lambda blk: tuple(sorted(blk))))


def cut_vertices(g: Graph) -> frozenset[int]:
    """Vertices lying in more than one block."""
    count: dict[int, int] = {}
    for blk in blocks(g):
        for v in blk:
            count[v] = count.get(v, 0) + 1
    return frozenset(v for v, k in count.items() if k > 1)


# ---------------------------------------------------------------------------
# Trees, paths and pendant-tree stripping


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.edge_count == g.n - 1


def is_path(g: Graph) -> bool:
    """A path graph; a single vertex counts as a path."""
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def vertex_set_is_tree(g: Graph, vs: frozenset[int]) -> bool:
    return bool(vs) and is_tree(g.induced(vs))


def vertex_set_is_path(g: Graph, vs: frozenset[int]) -> bool:
    return bool(vs) and is_path(g.induced(vs))


@dataclass(frozen=True)
class PendantAttachment:
    """One stripped pendant tree, hanging from ``anchor`` via ``root``."""

    anchor: int
    root: int
    vertices: frozenset[int]
    is_path: bool
    path_edge_length: int | None  # edges from anchor to the far end


@dataclass(frozen=True)
class StrippedCore:
    """Result of iteratively deleting degree-1 vertices."""

    core: Graph
    core_vertices: frozenset[int]
    attachments: Mapping[int, tuple[PendantAttachment, ...]]
    is_forest: bool


def strip_pendant_trees(g: Graph) -> StrippedCore:
    """Peel degree-1 vertices until the remainder has minimum degree >= 2.

    When the input is a forest the core is empty and ``is_forest`` is set;
    otherwise each stripped tree attaches to exactly one core vertex by a
    single edge, and path-shaped attachments record their edge length.  An
    attachment counts as a path only when it is a path graph hanging off
    its root, so the anchor extends it to a longer path.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    queue = sorted(v for v in alive if deg[v] <= 1)
    while queue:
        nxt: list[int] = []
        for v in queue:
            if v not in alive or deg[v] > 1:
                continue
            alive.discard(v)
            for w in g.adj[v]:
                if w in alive:
                    deg[w] -= 1
                    if deg[w] <= 1:
                        nxt.append(w)
        queue = sorted(set(nxt))
    core_vs = frozenset(alive)
    if not core_vs:
        return StrippedCore(g.induced(()), core_vs, {}, True)
    stripped = set(range(g.n)) - core_vs
    attach: dict[int, list[PendantAttachment]] = {}
    for comp in _stripped_components(g, stripped):
        links = [
            (u, w) for u in sorted(comp) for w in sorted(g.adj[u]) if w in core_vs
        ]
        # exactly one link; a second one would put the component on a cycle
        root, anchor = links[0]
        sub = g.induced(comp)
        root_deg_inside = len(g.adj[root] & comp)
        pathlike = is_path(sub) and root_deg_inside <= 1
        attach.setdefault(anchor, []).append(
            PendantAttachment(
                anchor=anchor,
                root=root,
                vertices=frozenset(comp),
                is_path=pathlike,
                path_edge_length=len(comp) if pathlike else None,
            )
        )
    ordered = {
        a: tuple(sorted(lst, key=lambda at: min(at.vertices)))
        for a, lst in sorted(attach.items())
    }
    return StrippedCore(g.induced(core_vs), core_vs, ordered, False)


def _stripped_components(g: Graph, stripped: set[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in sorted(stripped):
        if start in seen:
            continue
        stack, comp = [start], {start}
        seen.add(start)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in stripped and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps
