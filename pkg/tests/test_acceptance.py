"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
verdict lines of passing criteria as they complete).
"""

import json

import pytest

from paritybei.chordal import clique_sum_order, m_value
from paritybei.classify import classify, classify_chordal, match_pattern
from paritybei.cli import cli_main
from paritybei.families import (
    bowtie,
    complete_graph,
    connected_chordal_catalog,
    cycle_graph,
    diamond,
    example_4_9,
    frak_g1,
    frak_g2,
    frak_g3,
    labeled_connected_chordal_count,
    random_block,
    random_cactus,
    random_chordal,
    triple_attach,
)
from paritybei.graphs import (
    build_graph,
    component_counts,
    is_cycle_graph,
    is_path,
)
from paritybei.spectrum import (
    enumerate_sign_split_disconnectors,
    is_disconnector,
    krull_dimension,
    minimal_prime_heights,
    sign_split_assignment,
    unmixedness_oracle,
)
from paritybei.treealgo import RunPolicy, enumerate_runs, run_algorithm, verify_run


def _report(name: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {verdict}{suffix}")
    assert ok, f"{name} failed{suffix}"


@pytest.fixture(scope="module")
def catalog():
    return connected_chordal_catalog(7)


@pytest.fixture(scope="module")
def random_chordal_corpus():
    return [random_chordal(8 + i % 5, seed=i) for i in range(1000)]


@pytest.fixture(scope="module")
def cactus_corpus():
    graphs = [random_cactus(3 + i % 12, seed=i) for i in range(500)]
    graphs += [cycle_graph(n) for n in range(3, 14)]
    return graphs


def _family_instances():
    out = []
    rng = range(1, 4)
    for l1 in rng:
        for l2 in rng:
            for l3 in rng:
                out.append(("g1", (l1, l2, l3), frak_g1(l1, l2, l3)))
    for l2 in rng:
        for l3 in rng:
            out.append(("g2", (l2, l3), frak_g2(l2, l3)))
    for l1 in rng:
        out.append(("g3", (l1,), frak_g3(l1)))
    return out


def test_criterion_01_main_theorem_equivalence(catalog, random_chordal_corpus):
    # catalog duplicates nothing and misses nothing (cross-checked against
    # brute-force labeled enumeration where that is cheap)
    sizes = {n: len(v) for n, v in catalog.items()}
    assert sizes == {1: 1, 2: 1, 3: 2, 4: 5, 5: 15, 6: 58, 7: 272}
    for n in range(1, 6):
        assert labeled_connected_chordal_count(n) == sizes[n]
    disagreements = 0
    checked = 0
    for reps in catalog.values():
        for g in reps:
            checked += 1
            if classify_chordal(g).unmixed != unmixedness_oracle(g).unmixed:
                disagreements += 1
    for g in random_chordal_corpus:
        checked += 1
        if classify_chordal(g).unmixed != unmixedness_oracle(g).unmixed:
            disagreements += 1
    _report(
        "criterion-1 main-theorem equivalence",
        disagreements == 0,
        f"{checked} graphs, {disagreements} disagreements",
    )


def test_criterion_02_cactus_theorem(cactus_corpus):
    disagreements = 0
    nonbip = 0
    for g in cactus_corpus:
        c, b = component_counts(g, frozenset())
        if b == c:
            continue  # equivalence is claimed for the non-bipartite case
        nonbip += 1
        odd_cycle = is_cycle_graph(g) and g.n % 2 == 1
        if unmixedness_oracle(g).unmixed != odd_cycle:
            disagreements += 1
    _report(
        "criterion-2 cactus theorem",
        disagreements == 0 and nonbip >= 300,
        f"{nonbip} non-bipartite samples, {disagreements} disagreements",
    )


def test_criterion_03_algorithm_invariants():
    violations = 0
    runs = 0
    unmixed_runs = 0
    corpus = [random_chordal(4 + i % 9, seed=10_000 + i) for i in range(300)]
    # the known unmixed shapes keep the conditional checks well exercised
    corpus += [g for _, _, g in _family_instances() if g.n <= 12]
    for g in corpus:
        decomp = clique_sum_order(g)
        verdict = unmixedness_oracle(g).unmixed
        for res in enumerate_runs(g, decomp, limit=64).results:
            runs += 1
            found = verify_run(g, decomp, res, oracle_unmixed=verdict)
            if found:
                violations += 1
            if verdict:
                unmixed_runs += 1
                if not is_path(g.induced(res.tree)) or len(res.s2) > 1:
                    violations += 1
    _report(
        "criterion-3 algorithm invariants",
        violations == 0,
        f"{runs} runs verified ({unmixed_runs} on unmixed graphs), {violations} violations",
    )


def test_criterion_04_golden_trace():
    g = example_4_9()
    decomp = clique_sum_order(g)
    policy = RunPolicy.from_script(
        [((1, 2), 2), ((2, 3), 4), ((1,), 1), ((3,), 6)]
    )
    res = run_algorithm(g, decomp, policy)
    step0 = res.steps[0]
    ok = (
        step0.d == frozenset({1, 2})
        and step0.a2 == frozenset({2})
        and step0.a1 == frozenset({1, 3})
        and step0.a0 == frozenset({4})
        and g.labels_of(res.tree) == (1, 2, 4, 6)
        and is_path(g.induced(res.tree))
        and g.labels_of(res.s) == (3, 5)
        and g.labels_of(res.s2) == (3,)
        and g.labels_of(res.s0) == (5,)
        and res.last_step == 1
    )
    _report("criterion-4 golden trace", ok)


def test_criterion_05_family_positives():
    failures = []
    for want, lengths, g in _family_instances():
        if not unmixedness_oracle(g).unmixed:
            failures.append((want, lengths, "oracle"))
            continue
        match = match_pattern(g)
        if match is None or match.pattern != want:
            failures.append((want, lengths, "pattern"))
            continue
        got = tuple(
            match.path_lengths[k] for k in sorted(match.path_lengths)
        )
        if want == "g2":
            expected = (lengths[1], lengths[0])  # sorted keys: x_1 then y_1
        else:
            expected = tuple(lengths)  # role order tracks the builder order
        if got != expected:
            failures.append((want, lengths, f"lengths {got}"))
    _report(
        "criterion-5 family positives",
        not failures,
        f"{len(_family_instances())} instances, failures: {failures[:3]}",
    )


def _negatives_corpus():
    graphs = [("triple_attach", triple_attach(k)) for k in (3, 4, 5)]
    graphs.append(("bowtie", bowtie()))
    found = 0
    seed = 0
    while found < 10 and seed < 500:
        g = random_block(4 + seed % 7, seed)
        seed += 1
        if is_path(g) or (g.n == 3 and g.edge_count == 3):
            continue
        graphs.append((f"block-{seed}", g))
        found += 1
    assert found == 10
    graphs.append(("diamond", diamond()))
    found = 0
    seed = 0
    while found < 20 and seed < 4000:
        g = random_chordal(4 + seed % 6, seed=20_000 + seed)
        seed += 1
        c, b = component_counts(g, frozenset())
        if b == c:
            continue  # the common-intersection theorem concerns non-bipartite graphs
        if g.n == 3 and g.edge_count == 3:
            continue
        decomp = clique_sum_order(g)
        if m_value(decomp, set(range(1, decomp.t + 1))) == 0:
            continue
        graphs.append((f"mpos-{seed}", g))
        found += 1
    assert found == 20
    return graphs


def test_criterion_06_negatives():
    failures = []
    for name, g in _negatives_corpus():
        oracle = unmixedness_oracle(g).unmixed
        classifier = classify(g).combined.unmixed
        if oracle is not False or classifier is not False:
            failures.append((name, oracle, classifier))
    _report(
        "criterion-6 negatives",
        not failures,
        f"failures: {failures[:3]}",
    )


def test_criterion_07_heights_and_dimension(catalog, cactus_corpus):
    failures = []
    checked = 0

    def check(g):
        nonlocal checked
        if not unmixedness_oracle(g).unmixed:
            return
        checked += 1
        _, b = component_counts(g, frozenset())
        heights = minimal_prime_heights(g)
        if set(heights) != {g.n - b} or krull_dimension(g) != g.n + b:
            failures.append((g.labels, heights))

    for reps in catalog.values():
        for g in reps:
            check(g)
    for g in cactus_corpus:
        if g.n <= 13:
            check(g)
    for _, _, g in _family_instances():
        check(g)
    if minimal_prime_heights(complete_graph(3)) != (3, 3, 3, 3):
        failures.append(("k3-heights", minimal_prime_heights(complete_graph(3))))
    _report(
        "criterion-7 heights and dimension",
        not failures,
        f"{checked} unmixed graphs checked, failures: {failures[:3]}",
    )


def test_criterion_08_sign_split_consistency(catalog):
    inconsistencies = 0
    checked = 0
    graphs = [g for reps in catalog.values() for g in reps]
    graphs += [frak_g1(1, 1, 1), frak_g2(1, 1), frak_g3(2), triple_attach(4)]
    graphs += [random_cactus(9, seed) for seed in range(40)]
    for g in graphs:
        for rec in enumerate_sign_split_disconnectors(g):
            checked += 1
            auto = sign_split_assignment(g, rec.s, profile=rec.profile)
            full = sign_split_assignment(
                g, rec.s, profile=rec.profile, method="exhaustive"
            )
            if (auto is None) != (full is None):
                inconsistencies += 1
    # the not-all-equal constraint triangle admits no assignment at all
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
    edges += [(9, 0), (9, 3), (10, 3), (10, 6), (11, 0), (11, 6)]
    blocked = build_graph(12, edges)
    candidate = frozenset({9, 10, 11})
    excluded = (
        is_disconnector(blocked, candidate)
        and sign_split_assignment(blocked, candidate) is None
        and candidate not in {r.s for r in enumerate_sign_split_disconnectors(blocked)}
    )
    _report(
        "criterion-8 sign-split consistency",
        inconsistencies == 0 and excluded,
        f"{checked} disconnectors compared, {inconsistencies} inconsistencies",
    )


def test_criterion_09_whisker_invariance():
    failures = []
    for want, lengths, g in _family_instances():
        for pos in range(len(lengths)):
            longer = list(lengths)
            longer[pos] += 1
            extended = {
                "g1": lambda: frak_g1(*longer),
                "g2": lambda: frak_g2(*longer),
                "g3": lambda: frak_g3(*longer),
            }[want]()
            match = match_pattern(extended)
            if match is None or match.pattern != want:
                failures.append((want, lengths, pos, "pattern"))
                continue
            if unmixedness_oracle(extended).unmixed != unmixedness_oracle(g).unmixed:
                failures.append((want, lengths, pos, "oracle"))
    _report(
        "criterion-9 whisker invariance",
        not failures,
        f"failures: {failures[:3]}",
    )


def test_criterion_10_determinism(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    assert cli_main(["generate", "example_4_9"]) == 0
    graph_file.write_text(capsys.readouterr().out)

    def run(args):
        assert cli_main(args) == 0
        return capsys.readouterr().out

    outputs = {}
    for name, args in {
        "classify": ["classify", str(graph_file), "--json"],
        "trace": ["algorithm", str(graph_file), "--json"],
        "spectrum": ["spectrum", str(graph_file), "--json"],
        "dot": ["dot", str(graph_file)],
        "m2": ["emit-m2", str(graph_file)],
        "generate": ["generate", "random_chordal", "10", "--seed", "7"],
        "check": ["check", str(graph_file), "--json"],
    }.items():
        first = run(args)
        second = run(args)
        outputs[name] = first == second
    json.loads(run(["classify", str(graph_file), "--json"]))  # valid JSON
    _report(
        "criterion-10 determinism",
        all(outputs.values()),
        f"stable: {sorted(k for k, v in outputs.items() if v)}",
    )
