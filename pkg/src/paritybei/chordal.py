"""Chordality recognition and ordered clique-sum decompositions.

A connected chordal graph is an iterated clique sum of its maximal cliques.
This module recognizes chordal graphs (maximum cardinality search plus the
standard parent-subset verification), lists their maximal cliques, and
orders them along a clique tree so that every clique after the first meets
the union of its predecessors in a single earlier clique (the running
intersection property).  Clique indices are 1-based positions in that
order; vertex identifiers are the 0-based ones of the host graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graphs import Graph, blocks, is_complete, is_connected


class NotChordalError(ValueError):
    """Raised when an operation requires a chordal input graph."""


class DisconnectedError(ValueError):
    """Raised when an operation requires a connected input graph."""


@dataclass(frozen=True)
class ChordalityResult:
    chordal: bool
    elimination_order: tuple[int, ...] | None  # perfect elimination order
    witness: tuple[int, ...] | None  # chordless cycle of length >= 4

    def __bool__(self) -> bool:
        return self.chordal


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order, least label on ties."""
    weight = [0] * g.n
    visited = [False] * g.n
    order: list[int] = []
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if not visited[u]),
            key=lambda u: (weight[u], -u),
        )
        visited[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                weight[w] += 1
    return order


def is_chordal(g: Graph) -> ChordalityResult:
    """Chordality verdict with a perfect elimination order or a chordless
    cycle of length at least 4 that can be re-checked against adjacency."""
    if g.n == 0:
        return ChordalityResult(True, (), None)
    visit = _mcs_order(g)
    pos = {v: i for i, v in enumerate(visit)}
    for v in visit:
        earlier = [u for u in g.adj[v] if pos[u] < pos[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: pos[u])
        rest = [u for u in earlier if u != parent]
        if any(u not in g.adj[parent] for u in rest):
            cycle = _find_chordless_cycle(g)
            return ChordalityResult(False, None, cycle)
    # eliminating in reverse visit order keeps later neighborhoods complete
    return ChordalityResult(True, tuple(reversed(visit)), None)


def _find_chordless_cycle(g: Graph) -> tuple[int, ...]:
    """Locate an induced cycle of length >= 4 in a non-chordal graph.

    For every vertex v with non-adjacent neighbors u, w, a shortest u-w
    path avoiding v and the rest of N(v) closes to an induced cycle.
    """
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        for u, w in combinations(nbrs, 2):
            if g.has_edge(u, w):
                continue
            banned = (g.adj[v] - {u, w}) | {v}
            path = _shortest_path_avoiding(g, u, w, banned)
            if path is not None:
                return (v, *path)
    raise AssertionError("chordality verification failed but no witness found")


def _shortest_path_avoiding(
    g: Graph, src: int, dst: int, banned: frozenset[int] | set[int]
) -> tuple[int, ...] | None:
    prev: dict[int, int] = {src: src}
    frontier = [src]
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for y in sorted(g.adj[x]):
                if y in banned or y in prev:
                    continue
                prev[y] = x
                if y == dst:
                    out = [y]
                    while out[-1] != src:
                        out.append(prev[out[-1]])
                    return tuple(reversed(out))
                nxt.append(y)
        frontier = nxt
    return None


def maximal_cliques_chordal(g: Graph) -> tuple[frozenset[int], ...]:
    """All maximal cliques of a chordal graph, in deterministic order.

    A chordal graph on n vertices has at most n maximal cliques; they are
    collected from the elimination order.  Non-chordal input is rejected.
    """
    res = is_chordal(g)
    if not res.chordal:
        raise NotChordalError(f"graph has chordless cycle {res.witness}")
    if g.n == 0:
        return ()
    visit = _mcs_order(g)
    pos = {v: i for i, v in enumerate(visit)}
    candidates = {
        frozenset({v} | {u for u in g.adj[v] if pos[u] < pos[v]}) for v in visit
    }
    maximal = [
        c
        for c in candidates
        if not any(c < other for other in candidates if other != c)
    ]
    return tuple(sorted(set(maximal), key=lambda c: tuple(sorted(c))))


@dataclass(frozen=True)
class CliqueDecomposition:
    """Maximal cliques of a connected chordal graph in clique-sum order.

    Clique index ``j`` (1-based) refers to ``cliques[j-1]``.  For ``j >= 2``
    the attachment ``attach[j]`` is the intersection of clique ``j`` with
    the union of all earlier cliques, and ``lam[j]`` lists the earlier
    cliques containing that attachment (always non-empty).
    """

    graph: Graph
    cliques: tuple[frozenset[int], ...]
    attach: Mapping[int, frozenset[int]]
    lam: Mapping[int, frozenset[int]]

    @property
    def t(self) -> int:
        return len(self.cliques)

    def clique(self, j: int) -> frozenset[int]:
        if not 1 <= j <= self.t:
            raise KeyError(f"clique index {j} outside 1..{self.t}")
        return self.cliques[j - 1]

    def cliques_of_vertex(self) -> tuple[frozenset[int], ...]:
        """For each vertex, the set of 1-based clique indices containing it."""
        member: list[set[int]] = [set() for _ in range(self.graph.n)]
        for j, cl in enumerate(self.cliques, start=1):
            for v in cl:
                member[v].add(j)
        return tuple(frozenset(s) for s in member)

    def intersection(self, indices: Iterable[int]) -> frozenset[int]:
        idx = sorted(set(indices))
        out = set(self.clique(idx[0]))
        for j in idx[1:]:
            out &= self.clique(j)
        return frozenset(out)


def m_value(decomp: CliqueDecomposition, gamma: Iterable[int]) -> int:
    """Number of vertices common to the cliques indexed by ``gamma``.

    ``gamma`` must be a non-empty subset of ``1..t``; the empty selection is
    rejected rather than given a vacuous-intersection value.
    """
    idx = sorted(set(gamma))
    if not idx:
        raise ValueError("m_value requires a non-empty clique selection")
    return len(decomp.intersection(idx))


def clique_sum_order(
    g: Graph, order: Sequence[Iterable[int]] | None = None
) -> CliqueDecomposition:
    """Order the maximal cliques of a connected chordal graph.

    The default order comes from a maximum-weight clique tree rooted at the
    clique containing vertex 0, traversed breadth-first with ties broken by
    least vertex; this guarantees the running intersection property.  An
    explicit ``order`` (a permutation of the maximal cliques, as vertex
    sets) may be supplied instead and is validated.
    """
    if g.n == 0 or not is_connected(g):
        raise DisconnectedError("clique-sum order requires a connected graph")
    cliques = maximal_cliques_chordal(g)
    if order is not None:
        wanted = [frozenset(c) for c in order]
        if sorted(wanted, key=lambda c: tuple(sorted(c))) != list(cliques):
            raise ValueError("explicit order is not a permutation of the maximal cliques")
        ordered = wanted
    else:
        ordered = _clique_tree_order(cliques)
    attach: dict[int, frozenset[int]] = {}
    lam: dict[int, frozenset[int]] = {}
    union: set[int] = set(ordered[0])
    for j in range(2, len(ordered) + 1):
        k = ordered[j - 1]
        rj = frozenset(union & k)
        if not rj:
            raise ValueError("clique order violates connectivity of the clique sum")
        containers = frozenset(
            i for i in range(1, j) if rj <= ordered[i - 1]
        )
        if not containers:
            raise ValueError(
                "clique order violates the running intersection property"
            )
        attach[j] = rj
        lam[j] = containers
        union |= k
    return CliqueDecomposition(g, tuple(ordered), attach, lam)


def _clique_tree_order(cliques: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Maximum-weight spanning tree of the clique graph, BFS from the
    clique containing vertex 0; deterministic tie-breaks by sorted vertex
    tuples."""
    key = {c: tuple(sorted(c)) for c in cliques}
    root = min((c for c in cliques if 0 in c), key=lambda c: key[c])
    in_tree = {root}
    children: dict[frozenset[int], list[frozenset[int]]] = {c: [] for c in cliques}
    remaining = set(cliques) - {root}
    while remaining:
        best = None
        for c in remaining:
            for p in in_tree:
                w = len(c & p)
                cand = (-w, key[c], key[p])
                if best is None or cand < best[0]:
                    best = (cand, c, p)
        assert best is not None
        _, c, p = best
        children[p].append(c)
        in_tree.add(c)
        remaining.discard(c)
    ordered: list[frozenset[int]] = []
    queue = [root]
    while queue:
        c = queue.pop(0)
        ordered.append(c)
        queue.extend(sorted(children[c], key=lambda x: key[x]))
    return ordered


def is_block_graph(g: Graph) -> bool:
    """True when every block of the graph is a complete graph."""
    return all(is_complete(g.induced(blk)) for blk in blocks(g))


def is_generalized_block_graph(g: Graph) -> bool:
    """Chordal, and any three maximal cliques through a common vertex have
    pairwise-equal intersections."""
    if not is_chordal(g).chordal:
        return False
    cliques = maximal_cliques_chordal(g)
    for a, b, c in combinations(cliques, 3):
        if a & b & c:
            if not (a & b == b & c == a & c):
                return False
    return True
