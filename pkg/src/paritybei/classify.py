"""Theorem-backed classifiers for unmixedness and Cohen-Macaulayness.

Connected cactus graphs are decided through their pendant odd cycles: a
non-bipartite cactus is unmixed (equivalently Cohen-Macaulay, Gorenstein,
a complete intersection) exactly when it is a single odd cycle.  Connected
chordal graphs are decided by structural pattern matching: the unmixed ones
are paths, the triangle, and three parameterized families built from a
triangle-of-triangles (G1), a K4 glued to a triangle (G2) and a diamond
(G3), each carrying mandatory pendant paths; of these only paths, the
triangle and G3 are Cohen-Macaulay.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import spectrum
from .chordal import NotChordalError, is_chordal
from .graphs import (
    Graph,
    blocks,
    connected_components,
    is_complete,
    is_connected,
    is_cycle_graph,
    is_path,
    is_tree,
    removal_profile,
    strip_pendant_trees,
)

PATTERN_PATH = "path"
PATTERN_K3 = "k3"
PATTERN_G1 = "g1"
PATTERN_G2 = "g2"
PATTERN_G3 = "g3"

CM_PATTERNS = {PATTERN_PATH, PATTERN_K3, PATTERN_G3}
CI_PATTERNS = {PATTERN_PATH, PATTERN_K3}


@dataclass(frozen=True)
class PatternMatch:
    """A recognized unmixed chordal shape.

    ``roles`` maps pattern vertex names to internal vertices of the matched
    graph; ``path_lengths`` gives the edge count of the pendant path at each
    anchored role (always >= 1).
    """

    pattern: str
    roles: Mapping[str, int]
    path_lengths: Mapping[str, int]

    def to_doc(self, g: Graph) -> dict:
        return {
            "class": self.pattern,
            "roles": {name: g.labels[v] for name, v in sorted(self.roles.items())},
            "path_lengths": dict(sorted(self.path_lengths.items())),
        }


@dataclass(frozen=True)
class Classification:
    """Verdict record; ``None`` flags mean the theorems here do not decide
    the property (and for ``gorenstein`` render as "not-covered").

    ``witness`` holds a violating disconnector as original labels when an
    oracle supplied one.  Determined flags always satisfy the chain
    complete-intersection => Gorenstein => Cohen-Macaulay => unmixed.
    """

    unmixed: bool | None
    cohen_macaulay: bool | None
    gorenstein: bool | None
    complete_intersection: bool | None
    basis: str
    witness: tuple[int, ...] | None = None
    pattern: PatternMatch | None = None

    def to_doc(self, g: Graph | None = None) -> dict:
        return {
            "unmixed": self.unmixed,
            "cohen_macaulay": self.cohen_macaulay,
            "gorenstein": (
                "not-covered"
                if self.gorenstein is None
                else ("yes" if self.gorenstein else "no")
            ),
            "complete_intersection": self.complete_intersection,
            "basis": self.basis,
            "witness": list(self.witness) if self.witness is not None else None,
            "pattern": (
                self.pattern.to_doc(g) if (self.pattern and g is not None) else None
            ),
        }


@dataclass(frozen=True)
class ClassifyOutcome:
    """Per-component verdicts plus their conjunction."""

    graph: Graph
    components: tuple[tuple[frozenset[int], Classification], ...]
    combined: Classification

    def to_doc(self) -> dict:
        comps = []
        for vs, cl in self.components:
            sub = self.graph.induced(vs)
            doc = cl.to_doc(sub)
            doc["vertices"] = sorted(self.graph.labels[v] for v in vs)
            comps.append(doc)
        doc = self.combined.to_doc(self.graph)
        doc["vertices"] = sorted(self.graph.labels)
        doc["edges"] = [
            sorted((self.graph.labels[u], self.graph.labels[v]))
            for u, v in self.graph.edges()
        ]
        doc["components"] = comps
        return doc


# ---------------------------------------------------------------------------
# Cactus analysis


@dataclass(frozen=True)
class CactusAnalysis:
    is_cactus: bool
    odd_cycles: tuple[frozenset[int], ...]
    epsilon: Mapping[frozenset[int], int]
    pendant: tuple[tuple[frozenset[int], int], ...]  # (cycle, connecting vertex)


def is_cactus(g: Graph) -> bool:
    """Every block is a single vertex, an edge or a cycle."""
    for blk in blocks(g):
        if len(blk) <= 2:
            continue
        if not is_cycle_graph(g.induced(blk)):
            return False
    return True


def pendant_odd_cycles(g: Graph) -> CactusAnalysis:
    """Locate the odd cycles of a connected cactus and their pendant status.

    A cycle is pendant when all connections to other odd cycles leave it
    through one vertex; with at least two odd cycles that vertex is the
    unique exit ``v`` with ``epsilon(C) = 1``, and a lone odd cycle is
    pendant at any vertex (reported at its least one).
    """
    if not is_connected(g):
        raise ValueError("pendant-cycle analysis requires a connected graph")
    if not is_cactus(g):
        raise ValueError("pendant-cycle analysis requires a cactus graph")
    blks = blocks(g)
    odd = tuple(
        blk
        for blk in blks
        if len(blk) >= 3 and len(blk) % 2 == 1
    )
    # block-cut tree: block nodes plus cut-vertex nodes
    cuts = set()
    count: dict[int, int] = {}
    for blk in blks:
        for v in blk:
            count[v] = count.get(v, 0) + 1
    cuts = {v for v, k in count.items() if k > 1}
    nodes: list[object] = list(blks) + sorted(cuts)
    adjacency: dict[object, list[object]] = {x: [] for x in nodes}
    for blk in blks:
        for v in sorted(blk & cuts):
            adjacency[blk].append(v)
            adjacency[v].append(blk)
    eps: dict[frozenset[int], int] = {}
    pend: list[tuple[frozenset[int], int]] = []
    for cyc in odd:
        exits: set[int] = set()
        for other in odd:
            if other == cyc:
                continue
            exit_vertex = _first_cut_toward(adjacency, cyc, other)
            exits.add(exit_vertex)
        eps[cyc] = len(exits)
        if len(exits) == 0:
            pend.append((cyc, min(cyc)))
        elif len(exits) == 1:
            pend.append((cyc, next(iter(exits))))
    return CactusAnalysis(True, odd, eps, tuple(pend))


def _first_cut_toward(
    adjacency: Mapping[object, list[object]], src: object, dst: object
) -> int:
    """First cut-vertex node on the block-cut-tree path from src to dst."""
    prev: dict[object, object] = {src: src}
    frontier: list[object] = [src]
    while frontier and dst not in prev:
        nxt: list[object] = []
        for x in frontier:
            for y in adjacency[x]:
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    node = dst
    path = [node]
    while node != src:
        node = prev[node]
        path.append(node)
    path.reverse()
    for step in path[1:]:
        if isinstance(step, int):
            return step
    raise AssertionError("no cut vertex between two distinct cycles")


def pendant_split(g: Graph, cycle: frozenset[int], v: int) -> tuple[Graph, Graph]:
    """Split at a pendant odd cycle: the component of ``G - v`` containing
    the cycle remainder, and everything else (possibly empty)."""
    if v not in cycle:
        raise ValueError("connecting vertex must lie on the cycle")
    comps = connected_components(g, frozenset({v}))
    anchor = min(cycle - {v})
    inside = next(c for c in comps if anchor in c)
    rest: set[int] = set()
    for c in comps:
        if c != inside:
            rest |= c
    return g.induced(inside), g.induced(rest)


def classify_cactus(
    g: Graph, max_n: int = spectrum.DEFAULT_MAX_N
) -> Classification:
    """Classification of a connected cactus graph.

    Non-bipartite: all four properties are equivalent to being an odd
    cycle.  Bipartite trees reduce to the path test.  Bipartite cactus
    graphs with cycles are not covered; their unmixedness is delegated to
    the oracle when the size cap permits.
    """
    if not is_connected(g):
        raise ValueError("classify_cactus requires a connected graph")
    if not is_cactus(g):
        raise ValueError("classify_cactus requires a cactus graph")
    profile = removal_profile(g, frozenset())
    bipartite = profile.b == profile.c
    if not bipartite:
        verdict = is_cycle_graph(g) and g.n % 2 == 1
        return Classification(
            unmixed=verdict,
            cohen_macaulay=verdict,
            gorenstein=verdict,
            complete_intersection=verdict,
            basis="cactus-odd-cycle-equivalence",
        )
    if is_tree(g):
        verdict = is_path(g)
        return Classification(
            unmixed=verdict,
            cohen_macaulay=verdict,
            gorenstein=verdict,
            complete_intersection=verdict,
            basis="bipartite-tree-path-test",
        )
    unmixed: bool | None = None
    witness = None
    if g.n <= max_n:
        oracle = spectrum.unmixedness_oracle(g, max_n=max_n)
        unmixed = oracle.unmixed
        if oracle.witness is not None:
            witness = g.labels_of(oracle.witness)
    return Classification(
        unmixed=unmixed,
        cohen_macaulay=None,
        gorenstein=None,
        complete_intersection=None,
        basis="bipartite-cactus-not-covered",
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Chordal pattern matching


def match_pattern(g: Graph) -> PatternMatch | None:
    """Match a connected graph against the five unmixed chordal shapes.

    Pendant trees are stripped first; the residual core must be exactly a
    diamond (G3), a K4 glued to a triangle along an edge (G2) or a
    triangle-of-triangles (G1), with single pendant paths of length >= 1 at
    exactly the mandatory roles and nothing anywhere else.
    """
    if g.n == 0:
        return None
    if is_path(g):
        return PatternMatch(PATTERN_PATH, {}, {})
    if g.n == 3 and is_complete(g):
        return PatternMatch(PATTERN_K3, {}, {})
    stripped = strip_pendant_trees(g)
    if stripped.is_forest:
        return None
    core_vs = sorted(stripped.core_vertices)
    core = stripped.core
    attach = stripped.attachments
    if any(
        not at.is_path for lst in attach.values() for at in lst
    ):
        return None
    pendant_at = {anchor: lst for anchor, lst in attach.items()}

    def single_path_length(anchor: int) -> int | None:
        lst = pendant_at.get(anchor, ())
        if len(lst) != 1:
            return None
        return lst[0].path_edge_length

    core_deg = {v: len(g.adj[v] & stripped.core_vertices) for v in core_vs}

    if core.n == 4 and core.edge_count == 5:
        low = [v for v in core_vs if core_deg[v] == 2]
        high = [v for v in core_vs if core_deg[v] == 3]
        if len(low) != 2 or len(high) != 2 or g.has_edge(low[0], low[1]):
            return None
        anchored = [v for v in low if v in pendant_at]
        if len(anchored) != 1 or set(pendant_at) != {anchored[0]}:
            return None
        x1 = anchored[0]
        x2 = next(v for v in low if v != x1)
        length = single_path_length(x1)
        if length is None:
            return None
        alpha = sorted(high)
        return PatternMatch(
            PATTERN_G3,
            {"alpha_1": alpha[0], "alpha_2": alpha[1], "x_1": x1, "x_2": x2},
            {"x_1": length},
        )

    if core.n == 5 and core.edge_count == 8:
        deg_sorted = sorted(core_deg.values())
        if deg_sorted != [2, 3, 3, 4, 4]:
            return None
        x2 = next(v for v in core_vs if core_deg[v] == 2)
        alpha = sorted(v for v in core_vs if core_deg[v] == 4)
        pair = sorted(v for v in core_vs if core_deg[v] == 3)
        if not all(g.has_edge(x2, a) for a in alpha):
            return None
        if not g.has_edge(pair[0], pair[1]):
            return None
        if set(pendant_at) != set(pair):
            return None
        lengths = {v: single_path_length(v) for v in pair}
        if any(val is None for val in lengths.values()):
            return None
        y1, x1 = pair  # interchangeable; canonical by least label
        return PatternMatch(
            PATTERN_G2,
            {
                "alpha_1": alpha[0],
                "alpha_2": alpha[1],
                "x_1": x1,
                "x_2": x2,
                "y_1": y1,
            },
            {"y_1": lengths[y1], "x_1": lengths[x1]},
        )

    if core.n == 6 and core.edge_count == 9:
        betas = sorted(v for v in core_vs if core_deg[v] == 2)
        alphas = sorted(v for v in core_vs if core_deg[v] == 4)
        if len(betas) != 3 or len(alphas) != 3:
            return None
        if not all(
            g.has_edge(a, b) for i, a in enumerate(alphas) for b in alphas[i + 1:]
        ):
            return None
        beta_nbrs = {b: frozenset(g.adj[b] & set(alphas)) for b in betas}
        if any(len(nb) != 2 for nb in beta_nbrs.values()):
            return None
        if len(set(beta_nbrs.values())) != 3:
            return None
        if set(pendant_at) != set(betas):
            return None
        lengths = {b: single_path_length(b) for b in betas}
        if any(val is None for val in lengths.values()):
            return None
        b1 = betas[0]
        a1, a2 = sorted(beta_nbrs[b1])
        a3 = next(a for a in alphas if a not in (a1, a2))
        b2 = next(b for b in betas if beta_nbrs[b] == frozenset({a2, a3}))
        b3 = next(b for b in betas if beta_nbrs[b] == frozenset({a1, a3}))
        return PatternMatch(
            PATTERN_G1,
            {
                "alpha_1": a1,
                "alpha_2": a2,
                "alpha_3": a3,
                "beta_1": b1,
                "beta_2": b2,
                "beta_3": b3,
            },
            {"beta_1": lengths[b1], "beta_2": lengths[b2], "beta_3": lengths[b3]},
        )
    return None


def classify_chordal(g: Graph) -> Classification:
    """Classification of a connected chordal graph by pattern matching.

    Unmixed exactly for the five shapes; Cohen-Macaulay for paths, the
    triangle and G3; complete intersection for paths and the triangle.
    The Gorenstein property of G3 is not settled here and reports
    "not-covered".
    """
    if not is_connected(g):
        raise ValueError("classify_chordal requires a connected graph")
    if not is_chordal(g).chordal:
        raise NotChordalError("classify_chordal requires a chordal graph")
    match = match_pattern(g)
    if match is None:
        return Classification(
            unmixed=False,
            cohen_macaulay=False,
            gorenstein=False,
            complete_intersection=False,
            basis="chordal-unmixed-classification",
        )
    cm = match.pattern in CM_PATTERNS
    ci = match.pattern in CI_PATTERNS
    gorenstein: bool | None
    if match.pattern in CI_PATTERNS:
        gorenstein = True
    elif match.pattern == PATTERN_G3:
        gorenstein = None  # Cohen-Macaulay, Gorenstein status not covered
    else:
        gorenstein = False
    return Classification(
        unmixed=True,
        cohen_macaulay=cm,
        gorenstein=gorenstein,
        complete_intersection=ci,
        basis=f"chordal-unmixed-classification:{match.pattern}",
        pattern=match,
    )


# ---------------------------------------------------------------------------
# Dispatch


class ClassifierDisagreement(RuntimeError):
    """The chordal and cactus classifiers disagreed on a shared graph."""


def _classify_component(g: Graph, max_n: int) -> Classification:
    chordal = is_chordal(g).chordal
    cactus = is_cactus(g)
    if chordal and cactus:
        a = classify_chordal(g)
        b = classify_cactus(g, max_n=max_n)
        for name in ("unmixed", "cohen_macaulay", "gorenstein", "complete_intersection"):
            va, vb = getattr(a, name), getattr(b, name)
            if va is not None and vb is not None and va != vb:
                raise ClassifierDisagreement(
                    f"chordal and cactus classifiers disagree on {name}: "
                    f"{va} vs {vb}"
                )
        return a
    if chordal:
        return classify_chordal(g)
    if cactus:
        return classify_cactus(g, max_n=max_n)
    unmixed: bool | None = None
    witness = None
    if g.n <= max_n:
        oracle = spectrum.unmixedness_oracle(g, max_n=max_n)
        unmixed = oracle.unmixed
        if oracle.witness is not None:
            witness = g.labels_of(oracle.witness)
    return Classification(
        unmixed=unmixed,
        cohen_macaulay=None,
        gorenstein=None,
        complete_intersection=None,
        basis="outside-covered-classes",
        witness=witness,
    )


def _conjoin(flags: Iterable[bool | None]) -> bool | None:
    values = list(flags)
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


def classify(g: Graph, max_n: int = spectrum.DEFAULT_MAX_N) -> ClassifyOutcome:
    """Classify a graph component by component and combine the verdicts.

    All four properties hold for a disjoint union exactly when they hold
    for every component, so combined flags are conjunctions (``None`` when
    some component is undecided and none is negative).
    """
    comps = connected_components(g)
    results: list[tuple[frozenset[int], Classification]] = []
    for comp in comps:
        sub = g.induced(comp)
        cl = _classify_component(sub, max_n)
        if cl.witness is not None:
            # witnesses are already original labels; keep as-is
            pass
        results.append((comp, cl))
    if not results:
        combined = Classification(
            unmixed=True,
            cohen_macaulay=True,
            gorenstein=True,
            complete_intersection=True,
            basis="empty-graph",
        )
        return ClassifyOutcome(g, (), combined)
    if len(results) == 1:
        return ClassifyOutcome(g, tuple(results), results[0][1])
    witness = next(
        (cl.witness for _, cl in results if cl.witness is not None), None
    )
    combined = Classification(
        unmixed=_conjoin(cl.unmixed for _, cl in results),
        cohen_macaulay=_conjoin(cl.cohen_macaulay for _, cl in results),
        gorenstein=_conjoin(cl.gorenstein for _, cl in results),
        complete_intersection=_conjoin(cl.complete_intersection for _, cl in results),
        basis="componentwise-conjunction",
        witness=witness,
    )
    return ClassifyOutcome(g, tuple(results), combined)
