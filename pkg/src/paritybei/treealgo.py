"""Staged construction of a maximal induced tree inside a chordal graph.

Working over a clique-sum order ``K_1..K_t``, the procedure repeatedly
selects maximal index sets whose cliques still share a vertex and picks one
shared vertex per selection.  Step 0 seeds the tree; each later step grows
it by one layer until no active clique index remains.  The chosen vertices
induce a tree ``H``; the vertices outside ``H`` covered by the saturated
clique indices form a sign-split disconnector ``S``, split into ``S2``
(adjacent to the tree only) and ``S0`` (bridging to other components).

Choice points (which maximal set, which shared vertex) default to the least
option; an explicit script can override any prefix of them, and all legal
alternatives can be enumerated.  A chosen vertex is always new: pools never
offer vertices already in the tree, which is what keeps the tree growing
one layer per step and makes the disconnector facts below hold for every
run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .chordal import CliqueDecomposition
from .graphs import Graph, removal_profile, vertex_set_is_path, vertex_set_is_tree
from . import spectrum


class IllegalChoiceError(ValueError):
    """A script override is not among the legal candidates at its step."""

    def __init__(self, message: str, step: int, iteration: int, legal: tuple):
        super().__init__(message)
        self.step = step
        self.iteration = iteration
        self.legal = legal


@dataclass(frozen=True)
class ScriptChoice:
    """Overrides for one iteration: a 1-based clique index set and/or the
    original label of the vertex to pick.  ``None`` keeps the default."""

    cliques: tuple[int, ...] | None = None
    vertex: int | None = None


@dataclass(frozen=True)
class RunPolicy:
    """How choice points are resolved.

    ``lexicographic`` always takes the least candidate set (by sorted index
    tuple) and least vertex.  ``explicit-script`` consumes one
    :class:`ScriptChoice` per iteration and falls back to the default once
    the script is exhausted.
    """

    tie_break: str = "lexicographic"
    script: tuple[ScriptChoice, ...] = ()

    @staticmethod
    def lexicographic() -> "RunPolicy":
        return RunPolicy()

    @staticmethod
    def from_script(
        entries: Iterable[tuple[Iterable[int] | None, int | None]]
    ) -> "RunPolicy":
        out = tuple(
            ScriptChoice(
                cliques=None if ls is None else tuple(sorted(ls)),
                vertex=x,
            )
            for ls, x in entries
        )
        return RunPolicy(tie_break="explicit-script", script=out)


@dataclass(frozen=True)
class IterationRecord:
    """One iteration of one step, including the terminating one (which has
    no chosen set)."""

    q: int
    available: frozenset[int]  # clique indices still selectable
    maximal: tuple[frozenset[int], ...]
    single_link: tuple[frozenset[int], ...] | None  # step 0, q >= 2 only
    min_overlap: tuple[frozenset[int], ...] | None  # step 0, q >= 2 only
    chosen: frozenset[int] | None
    pool: tuple[int, ...]
    vertex: int | None


@dataclass(frozen=True)
class StepRecord:
    p: int
    iterations: tuple[IterationRecord, ...]
    d: frozenset[int]
    a2: frozenset[int]
    a1: frozenset[int]
    a0: frozenset[int]
    tree: frozenset[int]  # tree vertices accumulated through this step


@dataclass(frozen=True)
class AlgorithmResult:
    decomp: CliqueDecomposition
    last_step: int
    steps: tuple[StepRecord, ...]
    levels: tuple[tuple[int, int, int], ...]  # (step, iteration, vertex)
    tree: frozenset[int]
    s: frozenset[int]
    s2: frozenset[int]
    s0: frozenset[int]

    @property
    def graph(self) -> Graph:
        return self.decomp.graph

    def to_doc(self) -> dict:
        """JSON-ready trace using original vertex labels and 1-based clique
        indices."""
        g = self.graph

        def labs(vs: Iterable[int]) -> list[int]:
            return sorted(g.labels[v] for v in vs)

        def fams(fs: tuple[frozenset[int], ...] | None):
            return None if fs is None else sorted(sorted(f) for f in fs)

        steps = []
        for st in self.steps:
            iters = []
            for it in st.iterations:
                iters.append(
                    {
                        "q": it.q,
                        "available": sorted(it.available),
                        "maximal": fams(it.maximal),
                        "single_link": fams(it.single_link),
                        "min_overlap": fams(it.min_overlap),
                        "chosen": None if it.chosen is None else sorted(it.chosen),
                        "pool": labs(it.pool),
                        "vertex": None if it.vertex is None else g.labels[it.vertex],
                    }
                )
            steps.append(
                {
                    "p": st.p,
                    "iterations": iters,
                    "d": sorted(st.d),
                    "a2": sorted(st.a2),
                    "a1": sorted(st.a1),
                    "a0": sorted(st.a0),
                    "tree": labs(st.tree),
                }
            )
        return {
            "vertices": sorted(g.labels),
            "edges": [sorted((g.labels[u], g.labels[v])) for u, v in g.edges()],
            "cliques": [labs(c) for c in self.decomp.cliques],
            "last_step": self.last_step,
            "steps": steps,
            "tree": labs(self.tree),
            "s": labs(self.s),
            "s2": labs(self.s2),
            "s0": labs(self.s0),
        }


@dataclass(frozen=True)
class ChoiceEvent:
    kind: str  # "set" or "vertex"
    step: int
    iteration: int
    options: tuple


class _Capture(Exception):
    def __init__(self, event: ChoiceEvent):
        self.event = event


def _dedup_sets(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    return sorted(set(sets), key=lambda s: tuple(sorted(s)))


def _maximal_sets(sets: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    uniq = _dedup_sets(sets)
    return tuple(s for s in uniq if not any(s < o for o in uniq))


def _execute(
    decomp: CliqueDecomposition, decide: Callable[[ChoiceEvent], object]
) -> AlgorithmResult:
    g = decomp.graph
    t = decomp.t
    vc = decomp.cliques_of_vertex()
    all_idx = frozenset(range(1, t + 1))
    tree: set[int] = set()
    levels: list[tuple[int, int, int]] = []
    steps: list[StepRecord] = []

    # Step 0: seed the tree.  The first iteration may take any maximal index
    # set with a shared vertex; later iterations must reach into untouched
    # indices while linking back to exactly one earlier selection, with the
    # smallest possible overlap.
    chosen_ls: list[frozenset[int]] = []
    iters: list[IterationRecord] = []
    q = 1
    while True:
        used: frozenset[int] = frozenset().union(*chosen_ls) if chosen_ls else frozenset()
        remaining = all_idx - used
        if q == 1:
            maximal = _maximal_sets(vc[v] for v in range(g.n))
            single = overlap_min = None
            legal = maximal
        else:
            if not remaining:
                iters.append(
                    IterationRecord(q, remaining, (), (), (), None, (), None)
                )
                break
            cands = [vc[v] for v in range(g.n) if vc[v] & remaining]
            maximal = _maximal_sets(cands)
            single = tuple(
                L
                for L in maximal
                if sum(1 for lp in chosen_ls if L & lp) == 1
            )
            if not single:
                iters.append(
                    IterationRecord(q, remaining, maximal, single, (), None, (), None)
                )
                break

            def _overlap(L: frozenset[int]) -> int:
                lp = next(l for l in chosen_ls if L & l)
                return len(L & lp)

            best = min(_overlap(L) for L in single)
            overlap_min = tuple(L for L in single if _overlap(L) == best)
            legal = overlap_min
        chosen = decide(ChoiceEvent("set", 0, q, legal))
        assert isinstance(chosen, frozenset)
        pool = tuple(
            v for v in sorted(decomp.intersection(chosen)) if v not in tree
        )
        x = decide(ChoiceEvent("vertex", 0, q, pool))
        assert isinstance(x, int)
        iters.append(
            IterationRecord(q, remaining, maximal, single, overlap_min, chosen, pool, x)
        )
        chosen_ls.append(chosen)
        tree.add(x)
        levels.append((0, q, x))
        q += 1

    member_count = {i: sum(1 for L in chosen_ls if i in L) for i in all_idx}
    a2 = frozenset(i for i, k in member_count.items() if k >= 2)
    a1 = frozenset(i for i, k in member_count.items() if k == 1)
    a0 = all_idx - a2 - a1
    steps.append(
        StepRecord(0, tuple(iters), frozenset(range(1, len(chosen_ls) + 1)), a2, a1, a0, frozenset(tree))
    )

    # Steps p >= 1: grow the tree one layer at a time.  A candidate index
    # set is witnessed by a fresh vertex lying outside every saturated or
    # already-used clique; saturation (a2 plus this step's selections)
    # grows within the step.
    p = 0
    while steps[-1].a1:
        p += 1
        if p > t + 1:
            raise AssertionError("staged construction exceeded its step bound")
        prev = steps[-1]
        blocked = set(prev.a2)
        step_ls: list[frozenset[int]] = []
        iters = []
        q = 1
        while True:
            used_here: frozenset[int] = (
                frozenset().union(*step_ls) if step_ls else frozenset()
            )
            t_cur = (prev.a1 | prev.a0) - used_here
            witnesses = [
                v
                for v in range(g.n)
                if v not in tree and not (vc[v] & blocked) and (vc[v] & prev.a1)
            ]
            cands = [vc[v] for v in witnesses]
            if not cands:
                iters.append(
                    IterationRecord(q, t_cur, (), None, None, None, (), None)
                )
                break
            maximal = _maximal_sets(cands)
            chosen = decide(ChoiceEvent("set", p, q, maximal))
            assert isinstance(chosen, frozenset)
            pool = tuple(
                v
                for v in sorted(witnesses)
                if chosen <= vc[v]
            )
            x = decide(ChoiceEvent("vertex", p, q, pool))
            assert isinstance(x, int)
            iters.append(
                IterationRecord(q, t_cur, maximal, None, None, chosen, pool, x)
            )
            step_ls.append(chosen)
            blocked |= chosen
            tree.add(x)
            levels.append((p, q, x))
            q += 1
        used_all: frozenset[int] = (
            frozenset().union(*step_ls) if step_ls else frozenset()
        )
        a2n = prev.a2 | prev.a1
        a1n = frozenset(i for i in prev.a0 if i in used_all)
        a0n = all_idx - a2n - a1n
        steps.append(
            StepRecord(p, tuple(iters), frozenset(range(1, len(step_ls) + 1)), a2n, a1n, a0n, frozenset(tree))
        )

    final = steps[-1]
    covered: set[int] = set()
    for i in final.a2:
        covered |= decomp.clique(i)
    s = frozenset(covered) - frozenset(tree)
    s2, s0 = _split(g, frozenset(tree), s)
    return AlgorithmResult(
        decomp=decomp,
        last_step=final.p,
        steps=tuple(steps),
        levels=tuple(levels),
        tree=frozenset(tree),
        s=s,
        s2=s2,
        s0=s0,
    )


def _split(
    g: Graph, tree: frozenset[int], s: frozenset[int]
) -> tuple[frozenset[int], frozenset[int]]:
    if not s:
        return frozenset(), frozenset()
    profile = removal_profile(g, s)
    tree_idx = next(
        i for i, comp in enumerate(profile.components) if min(tree) in comp
    )
    s2 = frozenset(
        v for v in s if profile.reconnect[v] == frozenset({tree_idx})
    )
    return s2, s - s2


def split_S(result: AlgorithmResult) -> tuple[frozenset[int], frozenset[int]]:
    """Partition ``S`` into tree-only and bridging vertices by reconnection
    sets against the graph minus ``S``."""
    return _split(result.graph, result.tree, result.s)


def _policy_decider(
    g: Graph, policy: RunPolicy
) -> Callable[[ChoiceEvent], object]:
    script = list(policy.script)
    state = {"idx": -1}

    def decide(ev: ChoiceEvent) -> object:
        if ev.kind == "set":
            state["idx"] += 1
        entry = (
            script[state["idx"]]
            if 0 <= state["idx"] < len(script)
            else ScriptChoice()
        )
        if ev.kind == "set":
            if entry.cliques is not None:
                want = frozenset(entry.cliques)
                if want not in ev.options:
                    legal = sorted(sorted(o) for o in ev.options)
                    raise IllegalChoiceError(
                        f"step {ev.step} iteration {ev.iteration}: clique set "
                        f"{sorted(want)} is not among the legal candidates {legal}",
                        ev.step,
                        ev.iteration,
                        tuple(ev.options),
                    )
                return want
            return min(ev.options, key=lambda s: tuple(sorted(s)))
        # vertex choice; script vertices are original labels
        if entry.vertex is not None:
            try:
                internal = g.index_of(entry.vertex)
            except KeyError:
                internal = -1
            if internal not in ev.options:
                legal = sorted(g.labels[v] for v in ev.options)
                raise IllegalChoiceError(
                    f"step {ev.step} iteration {ev.iteration}: vertex "
                    f"{entry.vertex} is not in the legal pool {legal}",
                    ev.step,
                    ev.iteration,
                    tuple(ev.options),
                )
            return internal
        return min(ev.options)

    return decide


def run_algorithm(
    g: Graph,
    decomp: CliqueDecomposition,
    policy: RunPolicy | None = None,
) -> AlgorithmResult:
    """Run the staged tree construction once under the given policy.

    The graph must be the connected chordal graph the decomposition was
    built from.  Script overrides that are not legal at their choice point
    raise :class:`IllegalChoiceError` naming the step and the candidates.
    """
    if g is not decomp.graph and g != decomp.graph:
        raise ValueError("decomposition was built from a different graph")
    policy = policy or RunPolicy.lexicographic()
    return _execute(decomp, _policy_decider(g, policy))


@dataclass(frozen=True)
class RunEnumeration:
    results: tuple[AlgorithmResult, ...]
    truncated: bool


def enumerate_runs(
    g: Graph, decomp: CliqueDecomposition, limit: int = 256
) -> RunEnumeration:
    """Depth-first enumeration of every legal choice sequence.

    Results are deduplicated by the pair (tree, S); the flag reports whether
    unexplored branches remained when ``limit`` distinct results had been
    collected.
    """
    if limit < 1:
        raise ValueError("limit must be positive")

    def attempt(prefix: tuple) -> tuple[str, object]:
        pos = {"i": 0}

        def decide(ev: ChoiceEvent) -> object:
            if pos["i"] < len(prefix):
                sel = prefix[pos["i"]]
                pos["i"] += 1
                return sel
            raise _Capture(ev)

        try:
            return "done", _execute(decomp, decide)
        except _Capture as cap:
            return "branch", cap.event

    results: list[AlgorithmResult] = []
    seen: set[tuple[frozenset[int], frozenset[int]]] = set()
    stack: list[tuple] = [()]
    truncated = False
    while stack:
        prefix = stack.pop()
        kind, payload = attempt(prefix)
        if kind == "done":
            res = payload
            assert isinstance(res, AlgorithmResult)
            key = (res.tree, res.s)
            if key not in seen:
                seen.add(key)
                results.append(res)
                if len(results) >= limit:
                    truncated = bool(stack)
                    break
        else:
            ev = payload
            assert isinstance(ev, ChoiceEvent)
            if ev.kind == "set":
                opts = sorted(ev.options, key=lambda s: tuple(sorted(s)))
            else:
                opts = sorted(ev.options)
            for opt in reversed(opts):
                stack.append(prefix + (opt,))
    return RunEnumeration(tuple(results), truncated)


# ---------------------------------------------------------------------------
# Invariant verification


def verify_run(
    g: Graph,
    decomp: CliqueDecomposition,
    result: AlgorithmResult,
    oracle_unmixed: bool | None = None,
    max_n: int = spectrum.DEFAULT_MAX_N,
) -> list[str]:
    """Check every proved structural property of a run; returns the list of
    violations (empty for a faithful run).

    The path-shape and ``|S2| <= 1`` checks only apply when the graph is
    unmixed; pass ``oracle_unmixed`` to skip recomputing it.
    """
    out: list[str] = []
    labs = g.labels_of
    t = decomp.t
    all_idx = frozenset(range(1, t + 1))

    if len(result.steps) > t + 1:
        out.append(f"construction took {len(result.steps)} steps, bound is {t + 1}")
    if result.steps[-1].a1:
        out.append("final step left active clique indices")

    prev_tree: frozenset[int] = frozenset()
    for st in result.steps:
        if st.a2 | st.a1 | st.a0 != all_idx or (st.a2 & st.a1) or (st.a2 & st.a0) or (st.a1 & st.a0):
            out.append(f"step {st.p}: index classes do not partition 1..{t}")
        if not prev_tree <= st.tree:
            out.append(f"step {st.p}: tree lost vertices")
        prev_tree = st.tree
        if not vertex_set_is_tree(g, st.tree):
            out.append(f"step {st.p}: chosen vertices {labs(st.tree)} do not induce a tree")
        covered: set[int] = set()
        for i in st.a2:
            covered |= decomp.clique(i)
        for v in sorted(covered - st.tree):
            nbrs = [u for u in g.adj[v] if u in st.tree]
            if not any(
                g.has_edge(u, w)
                for ai, u in enumerate(nbrs)
                for w in nbrs[ai + 1:]
            ):
                out.append(
                    f"step {st.p}: vertex {g.labels[v]} outside the tree has no"
                    f" triangle into it"
                )
        for i in sorted(st.a0):
            if decomp.clique(i) & st.tree:
                out.append(
                    f"step {st.p}: untouched clique {i} meets the tree"
                )

    # adjacency layering of the chosen vertices
    level_of = {x: p for p, _, x in result.levels}
    for p, q, x in result.levels:
        if p == 0:
            continue
        prev_adj = [
            y for y, lv in level_of.items() if lv == p - 1 and g.has_edge(x, y)
        ]
        same_adj = [
            y for y, lv in level_of.items() if lv == p and y != x and g.has_edge(x, y)
        ]
        older_adj = [
            y for y, lv in level_of.items() if lv <= p - 2 and g.has_edge(x, y)
        ]
        if len(prev_adj) != 1:
            out.append(
                f"vertex {g.labels[x]} at layer {p} has {len(prev_adj)} "
                f"neighbors in layer {p - 1}, expected exactly one"
            )
        if same_adj:
            out.append(
                f"vertex {g.labels[x]} at layer {p} is adjacent to its own layer"
            )
        if older_adj:
            out.append(
                f"vertex {g.labels[x]} at layer {p} reaches layer {p - 2} or older"
            )

    # step-0 selection combinatorics
    step0 = result.steps[0]
    chosen0 = [it.chosen for it in step0.iterations if it.chosen is not None]
    for L in chosen0:
        mu = min(L)
        for i in sorted(L):
            if i != mu and i >= 2:
                if not decomp.lam[i] <= L:
                    out.append(
                        f"step 0: selection {sorted(L)} misses containers of {i}"
                    )
    for ai in range(len(chosen0)):
        for bi in range(ai + 1, len(chosen0)):
            inter = chosen0[ai] & chosen0[bi]
            if inter and min(inter) not in (min(chosen0[ai]), min(chosen0[bi])):
                out.append(
                    f"step 0: selections {sorted(chosen0[ai])} and "
                    f"{sorted(chosen0[bi])} meet below both minima"
                )

    # the disconnector facts
    final = result.steps[-1]
    covered = set()
    for i in final.a2:
        covered |= decomp.clique(i)
    expected_s = frozenset(covered) - result.tree
    if result.s != expected_s:
        out.append("S differs from the saturated-clique cover minus the tree")
    s2, s0 = _split(g, result.tree, result.s)
    if (s2, s0) != (result.s2, result.s0):
        out.append("S2/S0 split disagrees with the reconnection sets")
    if not spectrum.is_disconnector(g, result.s):
        out.append(f"S={labs(result.s)} is not a disconnector")
    elif spectrum.sign_split_assignment(g, result.s) is None:
        out.append(f"S={labs(result.s)} admits no sign-split assignment")
    if result.tree not in removal_profile(g, result.s).components:
        out.append("the tree is not a component of the graph minus S")
    if not spectrum.is_disconnector(g, result.s0):
        out.append(f"S0={labs(result.s0)} is not a disconnector")
    elif spectrum.sign_split_assignment(g, result.s0) is None:
        out.append(f"S0={labs(result.s0)} admits no sign-split assignment")
    if (result.tree | result.s2) not in removal_profile(g, result.s0).components:
        out.append("tree plus S2 is not a component of the graph minus S0")

    # consequences of unmixedness
    if oracle_unmixed is None and g.n <= max_n:
        oracle_unmixed = spectrum.unmixedness_oracle(g, max_n=max_n).unmixed
    if oracle_unmixed:
        for st in result.steps:
            if not vertex_set_is_path(g, st.tree):
                out.append(
                    f"graph is unmixed but the step-{st.p} tree is not a path"
                )
        if len(result.s2) > 1:
            out.append(
                f"graph is unmixed but S2={labs(result.s2)} has more than one vertex"
            )
    return out
