import random

import pytest

from cubicdom.enumeration import EnumSpec, enumerate_graphs
from cubicdom.families import complete, complete_bipartite, cycle, edgeless, path, petersen, prism, tkl
from cubicdom.graph import Graph, bits, induced_degree_count, induced_edge_count, mask_of, popcount
from cubicdom.graph6 import parse_graph6
from cubicdom.solvers import (
    domination_number,
    independent_domination_number,
    minimum_dominating_sets,
    verify_set,
)
from cubicdom.structure import (
    A2B1Cycle,
    EmptySetError,
    MaxDegreeExceededError,
    NoA2VertexError,
    NotCubicError,
    NotIndependentError,
    NotMinimumDominatingError,
    PreconditionError,
    WalkFailure,
    classify_ab,
    constructive_independent_dominating,
    epn,
    find_a2b1_cycle,
    find_forbidden_configs,
    key_lemma_sides,
    near_independent_to_independent,
    recheck_config,
    reduce_to_near_independent,
    subset_weight,
    weight_change,
    weight_summary,
)

# First cubic C4-free graph in enumeration order with a minimum dominating set
# whose induced subgraph has a vertex of degree 2 (found by exhaustive search).
SWAP_GRAPH = "MsP@P?SCOO?h?g?E_"
SWAP_D = [0, 1, 2, 5, 13]


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def test_weight_totals():
    assert weight_summary(cycle(7)).total == 42
    assert weight_summary(tkl(6, 0)).total == 84 == 9 * 6 + 5 * 6
    assert weight_summary(edgeless(2)).total == 28
    with pytest.raises(MaxDegreeExceededError):
        weight_summary(star(4))


def test_weight_change_examples():
    assert weight_change(cycle(7), mask_of([6, 0, 1])) == 6
    assert weight_change(complete(4), mask_of([0])) == 3
    assert weight_change(edgeless(3), mask_of([0])) == 0
    with pytest.raises(EmptySetError):
        weight_change(cycle(5), 0)


def test_key_lemma_examples():
    assert key_lemma_sides(cycle(7), mask_of([0])) == (14, 12)
    assert key_lemma_sides(edgeless(1), mask_of([0])) == (14, 14)
    # N[{0}] is all of K4, so nothing survives the deletion and c = 0.
    assert key_lemma_sides(complete(4), mask_of([0])) == (14, 20)
    assert weight_change(complete(4), complete(4).vertex_mask) == 0
    with pytest.raises(NotIndependentError):
        key_lemma_sides(cycle(5), mask_of([0, 1]))
    with pytest.raises(EmptySetError):
        key_lemma_sides(cycle(5), 0)


def test_weight_identity_and_sign():
    rng = random.Random(1)
    for n in range(1, 8):
        for g in enumerate_graphs(EnumSpec(n)):
            total = weight_summary(g).total
            for _ in range(3):
                x = rng.randint(1, g.vertex_mask)
                rest, _ = g.delete(x)
                change = weight_change(g, x)
                assert change >= 0
                assert weight_summary(rest).total == total - subset_weight(g, x) + change


def test_classify_ab_examples():
    ab = classify_ab(cycle(7))
    assert ab.b2 == cycle(7).vertex_mask
    ab = classify_ab(tkl(6, 0))
    assert ab.a0 == mask_of(range(6)) and ab.other == mask_of(range(6, 12))
    assert classify_ab(petersen()).a0 == petersen().vertex_mask


def test_classify_ab_partitions():
    for n in range(1, 8):
        for g in enumerate_graphs(EnumSpec(n)):
            parts = list(classify_ab(g).parts().values())
            union = 0
            for m in parts:
                assert not union & m
                union |= m
            assert union == g.vertex_mask


def test_config_examples():
    hits = find_forbidden_configs(star(3))
    assert any(h.claim_part == "i" and h.roles[0] == 0 for h in hits)
    hits = find_forbidden_configs(cycle(7))
    assert [h.claim_part for h in hits] == ["ii"] * 7
    assert find_forbidden_configs(complete(4)) == []
    assert find_forbidden_configs(tkl(3, 2)) == []


def test_config_hits_recheck():
    for n in range(1, 8):
        for g in enumerate_graphs(EnumSpec(n)):
            for h in find_forbidden_configs(g):
                assert recheck_config(g, h)


def test_configs_on_tight_family_and_petersen():
    # The tight family and 3-regular graphs contain none of the configurations.
    for g in (tkl(5, 0), tkl(0, 5), tkl(2, 3), petersen(), complete_bipartite(3, 3)):
        assert find_forbidden_configs(g) == []


def _check_cycle(g, result):
    ab = classify_ab(g)
    cyc = result.cycle
    k = len(cyc)
    assert k >= 3 and len(set(cyc)) == k
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
    assert all((ab.a2 | ab.b1) >> v & 1 for v in cyc)
    for i in range(k):
        x, y = cyc[i], cyc[(i + 1) % k]
        if ab.a2 >> x & 1 and ab.a2 >> y & 1:
            assert g.adj[x] & ab.b0
    # B1 vertices on the cycle come in adjacent pairs.
    for i, v in enumerate(cyc):
        if ab.b1 >> v & 1:
            assert ab.b1 >> cyc[i - 1] & 1 or ab.b1 >> cyc[(i + 1) % k] & 1


def test_a2b1_walk_on_tight_family():
    g = tkl(0, 5)
    result = find_a2b1_cycle(g)
    assert isinstance(result, A2B1Cycle)
    assert result.cycle == tuple(range(20))
    _check_cycle(g, result)


def test_a2b1_walk_frozen_fixtures():
    ok = parse_graph6("Epo_")
    result = find_a2b1_cycle(ok)
    assert isinstance(result, A2B1Cycle) and result.cycle == (0, 1, 4)
    _check_cycle(ok, result)
    bad = find_a2b1_cycle(parse_graph6("Ef__"))
    assert isinstance(bad, WalkFailure)
    assert (bad.step, bad.vertex, bad.walk) == (0, 3, (3,))


def test_a2b1_walk_no_a2():
    with pytest.raises(NoA2VertexError):
        find_a2b1_cycle(petersen())


def test_a2b1_walk_results_are_valid_when_they_close():
    for n in range(5, 10):
        for g in enumerate_graphs(EnumSpec(n, forbid_c4=True, connected=True)):
            if not classify_ab(g).a2:
                continue
            result = find_a2b1_cycle(g)
            if isinstance(result, A2B1Cycle):
                _check_cycle(g, result)
            else:
                assert result.walk[result.step] == result.vertex


def test_epn_examples():
    p3 = path(3)
    assert epn(p3, 1, mask_of([0, 1])) == mask_of([2])
    assert epn(p3, 0, mask_of([0, 1])) == 0
    assert epn(complete(4), 0, mask_of([0])) == mask_of([1, 2, 3])
    with pytest.raises(PreconditionError):
        epn(p3, 2, mask_of([0]))


def test_reduce_examples():
    pg = petersen()
    for d in minimum_dominating_sets(pg):
        assert reduce_to_near_independent(pg, d) == d
    assert reduce_to_near_independent(complete(4), 1) == 1
    with pytest.raises(NotCubicError):
        reduce_to_near_independent(cycle(6), mask_of([0, 3]))
    with pytest.raises(NotMinimumDominatingError):
        reduce_to_near_independent(pg, mask_of([0]))


def test_reduce_swap_fixture():
    g = parse_graph6(SWAP_GRAPH)
    d = mask_of(SWAP_D)
    assert domination_number(g).value == len(SWAP_D)
    trace = []
    out = reduce_to_near_independent(g, d, trace)
    assert len(trace) >= 2
    assert [e for _, e in trace] == [3, 1]
    assert list(bits(out)) == [1, 2, 3, 5, 13]
    assert verify_set(g, out, "near_independent_dominating")


def test_reduce_rejects_non_minimum():
    # Whole vertex set of K4 dominates but every vertex has three D-neighbours
    # and no private neighbour.
    with pytest.raises(NotMinimumDominatingError):
        reduce_to_near_independent(complete(4), 0b1111)


def test_convert_examples():
    p = prism(3)
    out = near_independent_to_independent(p, mask_of([0, 3]))
    assert list(bits(out)) == [1, 3]
    assert verify_set(p, out, "independent_dominating")
    pg = petersen()
    d = domination_number(pg).witness
    assert near_independent_to_independent(pg, d) == d
    assert near_independent_to_independent(complete(4), 1) == 1
    with pytest.raises(PreconditionError):
        near_independent_to_independent(complete(4), 0b111)


def _cubic_c4_free(max_n):
    for n in range(4, max_n + 1, 2):
        yield from enumerate_graphs(EnumSpec(n, "cubic", forbid_c4=True, connected=True))


def test_reduce_and_convert_step_accounting():
    for g in _cubic_c4_free(12):
        i_exact = independent_domination_number(g).value
        for d in minimum_dominating_sets(g):
            trace = []
            near = reduce_to_near_independent(g, d, trace)
            sizes = [popcount(s) for s, _ in trace]
            edges = [e for _, e in trace]
            assert set(sizes) == {popcount(d)}
            assert all(b < a for a, b in zip(edges, edges[1:]))
            for s, _ in trace:
                assert verify_set(g, s, "dominating")
            assert verify_set(g, near, "near_independent_dominating")
            steps = []
            out = near_independent_to_independent(g, near, steps)
            for (x0, m0), (x1, m1) in zip(steps, steps[1:]):
                assert popcount(x1) <= popcount(x0) + 1
                assert m1 <= m0 - 2
                assert verify_set(g, x1, "dominating")
            m1 = induced_degree_count(g, near, 1)
            assert verify_set(g, out, "independent_dominating")
            assert i_exact <= popcount(out) <= popcount(near) + m1 // 2


def test_constructive_pipeline_from_solver_witness():
    for g in _cubic_c4_free(12):
        d = domination_number(g).witness
        near, out = constructive_independent_dominating(g, d)
        gamma = popcount(d)
        assert induced_edge_count(g, near) <= induced_edge_count(g, d)
        assert verify_set(g, out, "independent_dominating")
        assert 4 * popcount(out) <= 5 * gamma
