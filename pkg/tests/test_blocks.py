"""Pair decomposition: components, blocks, ends, counting identities, criterion."""

import pytest

from conftest import distance_matrix, graph, intersecting_pairs
from schrijver import (
    CycleParams,
    DegenerateInputError,
    InvariantError,
    component_counts,
    decompose,
    disjoint_middle_vertex,
    distance2_criterion,
    m_sum_bound,
    stable_set,
    witness_lower4,
)

EX1 = CycleParams(20, 7)


def ex1_pair():
    return (
        stable_set([2, 8, 10, 12, 15, 18, 20], EX1),
        stable_set([1, 6, 8, 10, 12, 14, 17], EX1),
    )


def test_example_walkthrough_components_and_blocks():
    d = decompose(*ex1_pair())
    comps = {c.interval.elements() for c in d.components}
    assert comps == {
        (20, 1, 2),
        (6,),
        (8,),
        (10,),
        (12,),
        (14, 15),
        (17, 18),
    }
    blocks = {blk.interval.elements(): blk.btype for blk in d.blocks}
    assert blocks == {
        (3, 4, 5): "IV(H)",
        (7,): "III(B)",
        (9,): "I",
        (11,): "I",
        (13,): "II(B)",
        (16,): "IV(H)",
        (19,): "IV(A)",
    }
    ms = {blk.interval.elements(): blk.m for blk in d.blocks}
    assert ms == {
        (3, 4, 5): 2,
        (7,): 1,
        (9,): 1,
        (11,): 1,
        (13,): 1,
        (16,): 0,
        (19,): 0,
    }


def test_example_walkthrough_ends_and_counts():
    d = decompose(*ex1_pair())
    assert d.ends.eA == {2, 15, 18, 20}
    assert d.ends.eB == {6, 14, 17}
    assert d.ends.eH == {8, 10, 12}
    assert d.h == 3
    counts = component_counts(d)
    assert counts.n_a == counts.n_b == 1
    assert counts.n_h_prime == 3
    assert counts.n_h_dprime == 2


def test_decompose_refusals():
    p = CycleParams(10, 4)
    a = stable_set([1, 3, 5, 7], p)
    with pytest.raises(DegenerateInputError):
        decompose(a, a)
    with pytest.raises(DegenerateInputError):
        decompose(a, stable_set([2, 4, 6, 8], p))


def test_criterion_false_for_dist3_witness_family():
    # A = {1,4,6,...,2k}, B = {1,5,7,...,2k+1}: nothing fits in the complement
    for k in (4, 5, 6):
        for n in range(2 * k + 2, 4 * k - 2):
            p = CycleParams(n, k)
            a = stable_set([1] + list(range(4, 2 * k + 1, 2)), p)
            b = stable_set([1] + list(range(5, 2 * k + 2, 2)), p)
            assert not distance2_criterion(decompose(a, b))


def test_criterion_true_when_many_blocks():
    # r >= 2k-2 forces distance 2 for every intersecting pair
    g = graph(14, 4)
    for i, j in intersecting_pairs(g):
        d = decompose(g.vertices[i], g.vertices[j])
        assert distance2_criterion(d)


def test_criterion_matches_bfs_on_example_graph():
    d = decompose(*ex1_pair())
    g = graph(20, 7)
    dist = g.bfs_distance(*ex1_pair()).distance
    assert distance2_criterion(d) == (dist == 2)
    assert dist == 2  # the walkthrough pair is closer than its P4 suggests


@pytest.mark.parametrize("n,k", [(10, 4), (11, 4), (12, 5), (13, 5)])
def test_counting_identities_exhaustive(n, k):
    g = graph(n, k)
    dmat = distance_matrix(n, k)
    for i, j in intersecting_pairs(g):
        d = decompose(g.vertices[i], g.vertices[j])
        counts = component_counts(d)
        bc = counts.block_counts
        assert counts.n_a == counts.n_b
        assert 2 * d.h == (
            2 * bc["I"] + bc["II(A)"] + bc["II(B)"] + bc["III(A)"] + bc["III(B)"]
        )
        assert (
            bc["II(A)"] + bc["III(A)"] + 2 * bc["IV(A)"]
            == bc["II(B)"] + bc["III(B)"] + 2 * bc["IV(B)"]
        )
        e = d.ends
        assert len(e.eA_prime) + 2 * len(e.eA_dprime) == len(e.eB_prime) + 2 * len(
            e.eB_dprime
        )
        assert e.eA and e.eB and e.eH
        assert len(d.components) == len(d.blocks)
        if dmat[i, j] >= 3:
            assert m_sum_bound(d)


def test_m_sum_bound_witness_equality():
    a, b = witness_lower4(12, 5)
    d = decompose(a, b)
    assert sum(blk.m for blk in d.blocks) == 12 - 15 + 2 * d.h + 2
    assert m_sum_bound(d)


def test_block_intervals_partition_cycle():
    g = graph(13, 5)
    for i, j in list(intersecting_pairs(g))[:800]:
        d = decompose(g.vertices[i], g.vertices[j])
        seen = []
        for c in d.components:
            seen.extend(c.interval.elements())
        for blk in d.blocks:
            seen.extend(blk.interval.elements())
        assert sorted(seen) == list(range(1, 14))


def test_disjoint_middle_vertex_contract():
    g = graph(12, 4)
    dmat = distance_matrix(12, 4)
    hits = 0
    for i, j in intersecting_pairs(g):
        a, b = g.vertices[i], g.vertices[j]
        d = decompose(a, b)
        if distance2_criterion(d):
            mid = disjoint_middle_vertex(d)
            assert not mid.mask & (a.mask | b.mask)
            hits += 1
        else:
            assert dmat[i, j] >= 3
            with pytest.raises(InvariantError):
                disjoint_middle_vertex(d)
    assert hits


def test_wrapping_block_normalized():
    p = CycleParams(12, 4)
    a = stable_set([2, 4, 6, 8], p)
    b = stable_set([2, 4, 6, 10], p)
    d = decompose(a, b)
    wrapped = [blk for blk in d.blocks if blk.interval.start > blk.interval.end]
    assert len(wrapped) == 1
    assert wrapped[0].interval.elements() == (11, 12, 1)
