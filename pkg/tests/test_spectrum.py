import pytest

from paritybei.families import (
    bowtie,
    complete_graph,
    diamond,
    frak_g3,
    path_graph,
    random_cactus,
    random_chordal,
)
from paritybei.graphs import build_graph, component_counts, disjoint_union, removal_profile
from paritybei.spectrum import (
    Sign,
    SizeCapError,
    enumerate_sign_split_disconnectors,
    is_cut_set,
    is_disconnector,
    krull_dimension,
    minimal_prime_heights,
    sign_split_assignment,
    spectrum_report,
    unmixedness_oracle,
)


def two_triangles_one_connector():
    """Disjoint triangles joined through a single extra vertex."""
    return build_graph(
        7,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 0), (6, 3)],
    )


def triangle_of_constraints():
    """Three disjoint triangles, each pair bridged by its own connector;
    the connector set is a disconnector whose not-all-equal constraints
    form an odd cycle on two symbols, so no sign assignment exists."""
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (6, 7), (6, 8), (7, 8)]
    edges += [(9, 0), (9, 3)]   # bridges triangles 1 and 2
    edges += [(10, 3), (10, 6)]  # bridges triangles 2 and 3
    edges += [(11, 0), (11, 6)]  # bridges triangles 1 and 3
    return build_graph(12, edges)


def assignment_is_valid(g, s, signs):
    prof = removal_profile(g, s)
    assert set(signs) == {i for i, f in enumerate(prof.bipartite) if not f}
    for v in sorted(s):
        comps = prof.reconnect[v]
        if comps and all(not prof.bipartite[i] for i in comps):
            assert len({signs[i] for i in comps}) > 1


def test_cut_set_examples():
    assert is_cut_set(bowtie(), {2})
    assert not is_cut_set(complete_graph(3), {0})
    assert is_cut_set(complete_graph(3), set())


def test_disconnector_examples():
    g = complete_graph(3)
    assert is_disconnector(g, {0})
    assert not is_disconnector(g, {0, 1})
    assert is_disconnector(g, set())


def test_sign_assignment_trivial_on_k3():
    g = complete_graph(3)
    signs = sign_split_assignment(g, {0})
    assert signs == {}  # the single remaining component is bipartite


def test_sign_assignment_two_triangles():
    g = two_triangles_one_connector()
    signs = sign_split_assignment(g, {6})
    assert signs is not None
    assert sorted(signs.values(), key=lambda s: s.value) == [Sign.PLUS, Sign.MINUS]
    assignment_is_valid(g, {6}, signs)


def test_sign_assignment_rejects_non_disconnector():
    with pytest.raises(ValueError):
        sign_split_assignment(complete_graph(3), {0, 1})


def test_triangle_of_constraints_has_no_assignment():
    g = triangle_of_constraints()
    s = {9, 10, 11}
    assert is_disconnector(g, s)
    assert sign_split_assignment(g, s) is None
    assert sign_split_assignment(g, s, method="exhaustive") is None
    records = enumerate_sign_split_disconnectors(g)
    assert frozenset(s) not in {r.s for r in records}


def test_enumerate_k3():
    got = [sorted(r.s) for r in enumerate_sign_split_disconnectors(complete_graph(3))]
    assert got == [[], [0], [1], [2]]


def test_enumerate_path3():
    got = [sorted(r.s) for r in enumerate_sign_split_disconnectors(path_graph(3))]
    assert got == [[], [1]]


def test_enumerate_diamond_contains_both_pairs():
    got = {r.s for r in enumerate_sign_split_disconnectors(diamond())}
    assert frozenset({1, 2}) in got  # the shared edge
    assert frozenset({0, 3}) in got  # the two apexes


def test_oracle_k3_unmixed():
    assert unmixedness_oracle(complete_graph(3)).unmixed


def test_oracle_bowtie_witness():
    verdict = unmixedness_oracle(bowtie())
    assert not verdict.unmixed
    assert verdict.witness == frozenset({2})
    prof = removal_profile(bowtie(), verdict.witness)
    assert prof.b == 2  # two bipartite components, |S| + b(G) would be 1


def test_oracle_minimal_g3_unmixed():
    assert unmixedness_oracle(frak_g3(1)).unmixed


def test_oracle_cap():
    with pytest.raises(SizeCapError):
        unmixedness_oracle(path_graph(25))


def test_heights_k3():
    assert minimal_prime_heights(complete_graph(3)) == (3, 3, 3, 3)
    assert krull_dimension(complete_graph(3)) == 3


def test_heights_path3():
    assert minimal_prime_heights(path_graph(3)) == (2, 2)
    assert krull_dimension(path_graph(3)) == 4


def test_heights_bowtie():
    report = spectrum_report(bowtie())
    assert min(report.heights) == 4
    assert report.krull_dimension == 6
    assert not report.unmixed


def test_empty_set_always_first_record(small_random_graphs):
    for g in small_random_graphs[:25]:
        records = enumerate_sign_split_disconnectors(g)
        assert records[0].s == frozenset()
        assert records[0].height == g.n - records[0].profile.b


def test_disconnector_members_reconnect_or_flip(small_random_graphs):
    for g in small_random_graphs[:25]:
        for rec in enumerate_sign_split_disconnectors(g):
            prof = rec.profile
            for s in rec.s:
                comps = prof.reconnect[s]
                if len(comps) >= 2:
                    continue
                # putting s back must flip a bipartite component non-bipartite
                assert len(comps) == 1
                (idx,) = comps
                assert prof.bipartite[idx]
                merged = prof.components[idx] | {s}
                c, b = component_counts(g.induced(merged), frozenset())
                assert (c, b) == (1, 0)


def test_fast_paths_agree_with_exhaustive(small_random_graphs):
    for g in small_random_graphs[:30]:
        for rec in enumerate_sign_split_disconnectors(g):
            auto = sign_split_assignment(g, rec.s, profile=rec.profile)
            full = sign_split_assignment(
                g, rec.s, profile=rec.profile, method="exhaustive"
            )
            assert (auto is None) == (full is None)
            if auto is not None:
                assignment_is_valid(g, rec.s, auto)
                assignment_is_valid(g, rec.s, full)


def test_disjoint_union_law():
    for left, right in [
        (complete_graph(3), path_graph(3)),
        (bowtie(), complete_graph(3)),
        (diamond(), path_graph(2)),
    ]:
        both = disjoint_union(left, right)
        d_left = {r.s for r in enumerate_sign_split_disconnectors(left)}
        d_right = {r.s for r in enumerate_sign_split_disconnectors(right)}
        expected = {
            frozenset(a | {v + left.n for v in b})
            for a in d_left
            for b in d_right
        }
        got = {r.s for r in enumerate_sign_split_disconnectors(both)}
        assert got == expected
        assert unmixedness_oracle(both).unmixed == (
            unmixedness_oracle(left).unmixed and unmixedness_oracle(right).unmixed
        )


def test_unmixed_restriction_property():
    # for S in D(G) and T subset of S with G-T unmixed and b(G-T) = |T|,
    # the equality b_G(S) = |S| follows (non-bipartite G)
    for seed in range(8):
        g = random_chordal(8, seed)
        _, b_g = component_counts(g, frozenset())
        if b_g != 0:
            continue
        for rec in enumerate_sign_split_disconnectors(g):
            s = rec.s
            for t in [frozenset(list(s)[:1]), frozenset(list(s)[:2])]:
                if not t or t == s:
                    continue
                rest = g.induced(set(range(g.n)) - t)
                c_rest, b_rest = component_counts(rest, frozenset())
                if b_rest != len(t):
                    continue
                if not unmixedness_oracle(rest).unmixed:
                    continue
                assert rec.profile.b == len(s)
