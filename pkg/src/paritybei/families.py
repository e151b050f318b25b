"""Named graph families, seeded random generators and a small-graph catalog.

The three parameterized families g1/g2/g3 realize the unmixed chordal
shapes with pendant paths of prescribed edge lengths (all >= 1).  Random
generators are deterministic in their seed.  The catalog enumerates one
representative per isomorphism class of connected chordal graphs, which
backs the exhaustive acceptance checks.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graphs import Graph, GraphInputError, build_graph, from_labeled


# ---------------------------------------------------------------------------
# Fixed graphs


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs at least three vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("complete graph needs at least one vertex")
    return build_graph(n, list(combinations(range(n), 2)))


def bowtie() -> Graph:
    """Two triangles sharing the vertex 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def diamond() -> Graph:
    """Two triangles sharing the edge {1, 2}."""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def _attach_path(edges: list[tuple[int, int]], anchor: int, length: int, start: int) -> int:
    """Append a pendant path of ``length`` edges at ``anchor``; returns the
    next free vertex id."""
    prev = anchor
    v = start
    for _ in range(length):
        edges.append((prev, v))
        prev = v
        v += 1
    return v


def frak_g1(l1: int, l2: int, l3: int) -> Graph:
    """Triangle 0,1,2 with 3, 4, 5 each glued to a distinct pair, and
    pendant paths of the given edge lengths at 3, 4 and 5."""
    if min(l1, l2, l3) < 1:
        raise GraphInputError("g1 path lengths must be at least 1")
    edges = [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)]
    nxt = 6
    nxt = _attach_path(edges, 3, l1, nxt)
    nxt = _attach_path(edges, 4, l2, nxt)
    nxt = _attach_path(edges, 5, l3, nxt)
    return build_graph(nxt, edges)


def frak_g2(l2: int, l3: int) -> Graph:
    """K4 on 0,1,2,3 glued to the triangle 0,1,4 along the edge {0, 1},
    with pendant paths at 2 and 3."""
    if min(l2, l3) < 1:
        raise GraphInputError("g2 path lengths must be at least 1")
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    nxt = 5
    nxt = _attach_path(edges, 2, l2, nxt)
    nxt = _attach_path(edges, 3, l3, nxt)
    return build_graph(nxt, edges)


def frak_g3(l1: int) -> Graph:
    """Diamond on 0,1,2,3 (shared edge {0, 1}) with one pendant path at 2."""
    if l1 < 1:
        raise GraphInputError("g3 path length must be at least 1")
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    nxt = _attach_path(edges, 2, l1, 4)
    return build_graph(nxt, edges)


def example_4_9() -> Graph:
    """Seven-vertex reference graph with labels 1..7, the clique sum of
    {1,2,3}, {2,3,4,5}, {4,6} and {5,7}; used for golden traces."""
    edges = [
        (1, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 4),
        (3, 5),
        (4, 5),
        (4, 6),
        (5, 7),
    ]
    return from_labeled(range(1, 8), edges)


def fig3_cactus() -> Graph:
    """Chain of three triangles joined by two bridge edges; the two outer
    triangles are pendant odd cycles, the middle one is not."""
    edges = [
        (0, 1),
        (0, 2),
        (1, 2),
        (3, 4),
        (3, 5),
        (4, 5),
        (6, 7),
        (6, 8),
        (7, 8),
        (0, 3),
        (4, 6),
    ]
    return build_graph(9, edges)


def triple_attach(k: int) -> Graph:
    """k >= 3 triangles over the common edge {0, 1}; removing that edge
    leaves k components."""
    if k < 3:
        raise GraphInputError("triple_attach needs at least three triangles")
    edges = [(0, 1)]
    for apex in range(2, k + 2):
        edges.append((0, apex))
        edges.append((1, apex))
    return build_graph(k + 2, edges)


# ---------------------------------------------------------------------------
# Seeded random generators


def random_chordal(n: int, seed: int) -> Graph:
    """Connected chordal graph grown by attaching random cliques along
    random subsets of an existing clique."""
    if n < 1:
        raise GraphInputError("need at least one vertex")
    rng = random.Random(seed)
    first = rng.randint(1, min(n, 4))
    cliques: list[list[int]] = [list(range(first))]
    edges = set(combinations(range(first), 2))
    nxt = first
    while nxt < n:
        base = rng.choice(cliques)
        keep = rng.randint(1, len(base))
        anchor = rng.sample(sorted(base), keep)
        grow = rng.randint(1, min(n - nxt, 3))
        fresh = list(range(nxt, nxt + grow))
        nxt += grow
        new_clique = sorted(anchor) + fresh
        edges.update(
            (min(a, b), max(a, b)) for a, b in combinations(new_clique, 2)
        )
        cliques.append(new_clique)
    return build_graph(n, sorted(edges))


def random_cactus(n: int, seed: int) -> Graph:
    """Connected cactus graph grown by hanging cycles and pendant edges on
    random existing vertices; biased toward odd cycles."""
    if n < 1:
        raise GraphInputError("need at least one vertex")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    nxt = 1
    while nxt < n:
        anchor = rng.randrange(nxt)
        room = n - nxt
        if room >= 2 and rng.random() < 0.7:
            extra = rng.randint(2, min(room, 5))
            cyc = [anchor] + list(range(nxt, nxt + extra))
            nxt += extra
            edges.extend(
                (min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:] + [anchor])
            )
        else:
            edges.append((anchor, nxt))
            nxt += 1
    return build_graph(n, sorted(set(edges)))


def random_block(n: int, seed: int) -> Graph:
    """Connected block graph grown by gluing random cliques at single
    vertices."""
    if n < 1:
        raise GraphInputError("need at least one vertex")
    rng = random.Random(seed)
    first = rng.randint(1, min(n, 4))
    edges = set(combinations(range(first), 2))
    nxt = first
    while nxt < n:
        anchor = rng.randrange(nxt)
        grow = rng.randint(1, min(n - nxt, 3))
        clique = [anchor] + list(range(nxt, nxt + grow))
        nxt += grow
        edges.update((min(a, b), max(a, b)) for a, b in combinations(clique, 2))
    return build_graph(n, sorted(edges))


# ---------------------------------------------------------------------------
# Family dispatch (used by the command line)

FAMILIES = {
    "path": (1, "path(n)"),
    "cycle": (1, "cycle(n)"),
    "complete": (1, "complete(n)"),
    "bowtie": (0, "bowtie"),
    "diamond": (0, "diamond"),
    "frak_g1": (3, "frak_g1(l1,l2,l3)"),
    "frak_g2": (2, "frak_g2(l2,l3)"),
    "frak_g3": (1, "frak_g3(l1)"),
    "example_4_9": (0, "example_4_9"),
    "fig3_cactus": (0, "fig3_cactus"),
    "triple_attach": (1, "triple_attach(k)"),
    "random_chordal": (1, "random_chordal(n) with --seed"),
    "random_cactus": (1, "random_cactus(n) with --seed"),
    "random_block": (1, "random_block(n) with --seed"),
}


def build_family(name: str, params: list[int], seed: int | None = None) -> Graph:
    """Build a named family member; random families take their seed from
    ``seed`` (default 0)."""
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise GraphInputError(f"unknown family '{name}' (known: {known})")
    arity, usage = FAMILIES[name]
    if len(params) != arity:
        raise GraphInputError(f"family '{name}' expects {arity} parameter(s): {usage}")
    s = 0 if seed is None else seed
    table = {
        "path": lambda: path_graph(*params),
        "cycle": lambda: cycle_graph(*params),
        "complete": lambda: complete_graph(*params),
        "bowtie": bowtie,
        "diamond": diamond,
        "frak_g1": lambda: frak_g1(*params),
        "frak_g2": lambda: frak_g2(*params),
        "frak_g3": lambda: frak_g3(*params),
        "example_4_9": example_4_9,
        "fig3_cactus": fig3_cactus,
        "triple_attach": lambda: triple_attach(*params),
        "random_chordal": lambda: random_chordal(params[0], s),
        "random_cactus": lambda: random_cactus(params[0], s),
        "random_block": lambda: random_block(params[0], s),
    }
    return table[name]()


# ---------------------------------------------------------------------------
# Isomorphism and the connected-chordal catalog


def _invariant(g: Graph) -> tuple:
    degs = sorted(g.degree(v) for v in range(g.n))
    nbr_profiles = sorted(
        tuple(sorted(g.degree(u) for u in g.adj[v])) for v in range(g.n)
    )
    triangles = sum(
        1
        for u, v in g.edges()
        for w in g.adj[u]
        if w > v and w in g.adj[v]
    )
    return (g.n, g.edge_count, tuple(degs), tuple(nbr_profiles), triangles)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Backtracking isomorphism test with degree-profile pruning; intended
    for the small graphs handled by this package."""
    if _invariant(a) != _invariant(b):
        return False
    n = a.n
    prof_a = {v: (a.degree(v), tuple(sorted(a.degree(u) for u in a.adj[v]))) for v in range(n)}
    prof_b = {v: (b.degree(v), tuple(sorted(b.degree(u) for u in b.adj[v]))) for v in range(n)}
    order = sorted(range(n), key=lambda v: (-prof_a[v][0], prof_a[v][1], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if w in used or prof_a[v] != prof_b[w]:
                continue
            ok = True
            for u in mapping:
                if (u in a.adj[v]) != (mapping[u] in b.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def _all_cliques(g: Graph) -> list[frozenset[int]]:
    """Every non-empty clique (not only maximal ones)."""
    out: list[frozenset[int]] = []

    def grow(base: list[int], candidates: list[int]) -> None:
        for i, v in enumerate(candidates):
            cur = base + [v]
            out.append(frozenset(cur))
            grow(cur, [w for w in candidates[i + 1:] if w in g.adj[v]])

    grow([], list(range(g.n)))
    return out


def connected_chordal_catalog(max_n: int) -> dict[int, list[Graph]]:
    """One representative per isomorphism class of connected chordal graphs
    with up to ``max_n`` vertices.

    Every connected chordal graph arises from one on a vertex fewer by
    adding a vertex whose neighborhood is a non-empty clique (any simplicial
    vertex can be removed without losing connectivity or chordality), so
    the catalog is exhaustive by construction.
    """
    catalog: dict[int, list[Graph]] = {1: [build_graph(1, [])]}
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        reps: list[Graph] = []
        for host in catalog[n - 1]:
            for clique in _all_cliques(host):
                edges = list(host.edges()) + [(v, n - 1) for v in sorted(clique)]
                cand = build_graph(n, edges)
                key = _invariant(cand)
                bucket = buckets.setdefault(key, [])
                if any(are_isomorphic(cand, seen) for seen in bucket):
                    continue
                bucket.append(cand)
                reps.append(cand)
        catalog[n] = reps
    return catalog


def labeled_connected_chordal_count(n: int) -> int:
    """Count isomorphism classes by brute force over all labeled graphs on
    ``n`` vertices; cross-checks the catalog for small ``n``."""
    from .chordal import is_chordal
    from .graphs import is_connected

    pairs = list(combinations(range(n), 2))
    classes: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = build_graph(n, edges)
        if not is_connected(g):
            continue
        if not is_chordal(g).chordal:
            continue
        key = _invariant(g)
        bucket = buckets.setdefault(key, [])
        if any(are_isomorphic(g, seen) for seen in bucket):
            continue
        bucket.append(g)
        classes.append(g)
    return len(classes)
