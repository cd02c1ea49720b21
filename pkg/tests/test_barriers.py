import pytest
from conftest import bf_barriers

from matchcover import forge
from matchcover.barriers import (
    NoPerfectMatching,
    TooLarge,
    all_barriers,
    barrier_classes,
    find_2_barrier,
    is_barrier,
    is_bicritical,
    is_factor_critical,
    maximal_barrier_containing,
)
from matchcover.corpus import mixed_corpus, random_graphs
from matchcover.graph import GraphError, cycle_graph
from matchcover.matching import has_perfect_matching, is_matching_covered
from matchcover.named import graph


def test_is_barrier_examples():
    b = is_barrier(cycle_graph(4), {0, 2})
    assert b is not None and b.odd_components == ((1,), (3,))
    assert all(is_barrier(graph("K4"), p) is None for p in [(0, 1), (1, 3), (2, 3)])
    b6 = is_barrier(cycle_graph(6), {0, 2, 4})
    assert b6 is not None and len(b6.odd_components) == 3


def test_is_barrier_needs_perfect_matching():
    with pytest.raises(NoPerfectMatching):
        is_barrier(cycle_graph(5), {0})


def test_find_2_barrier():
    assert find_2_barrier(graph("K4")) is None
    assert find_2_barrier(cycle_graph(6)).vertices == (0, 2)
    k4 = graph("K4")
    assert find_2_barrier(forge.e_join(k4, 0, k4, 0)) is not None


def test_all_barriers_matches_tutte_scan():
    for _, g in mixed_corpus(8, random_count=30):
        if not has_perfect_matching(g):
            continue
        got = {frozenset(b.vertices) for b in all_barriers(g)}
        assert got == set(bf_barriers(g))


def test_all_barriers_ceiling():
    with pytest.raises(TooLarge):
        all_barriers(graph("H1"), ceiling=10)


class TestMaximal:
    def test_c6_grows(self):
        assert maximal_barrier_containing(cycle_graph(6), {0}).vertices == (0, 2, 4)

    def test_k4_stays(self):
        assert maximal_barrier_containing(graph("K4"), {0}).vertices == (0,)

    def test_c4_grows(self):
        assert maximal_barrier_containing(cycle_graph(4), {0}).vertices == (0, 2)

    def test_not_a_barrier(self):
        with pytest.raises(GraphError):
            maximal_barrier_containing(graph("K4"), {0, 1})

    def test_exhaustively_maximal_with_factor_critical_pieces(self):
        for _, g in mixed_corpus(8, random_count=40):
            if not has_perfect_matching(g):
                continue
            every = [set(b) for b in bf_barriers(g)]
            for v in range(g.n):
                big = maximal_barrier_containing(g, {v})
                s = set(big.vertices)
                assert v in s and s in every
                assert not any(s < t for t in every)
                for comp in big.odd_components:
                    sub = g.induced(comp)[0]
                    assert is_factor_critical(sub)
                assert not big.even_components


def test_classes_partition_vertices():
    for g in (cycle_graph(6), graph("H1"), graph("K33")):
        classes = barrier_classes(g)
        assert sorted(v for c in classes for v in c) == list(range(g.n))


class TestCriticality:
    def test_factor_critical(self):
        assert is_factor_critical(cycle_graph(5))
        assert not is_factor_critical(cycle_graph(6))

    def test_bicritical(self):
        assert is_bicritical(graph("K4"))
        assert not is_bicritical(cycle_graph(6))

    def test_bicritical_needs_four_vertices(self):
        with pytest.raises(GraphError):
            is_bicritical(graph("K2"))


def test_two_vertex_cut_with_odd_piece_is_barrier():
    for g in random_graphs(80, 10, 31):
        if not has_perfect_matching(g):
            continue
        for u, v in g.two_vertex_cuts():
            if any(len(c) % 2 for c in g.components((u, v))):
                assert is_barrier(g, (u, v)) is not None


def test_matching_covered_barriers_stable_and_no_even_pieces():
    for _, g in mixed_corpus(8, random_count=60):
        if not has_perfect_matching(g) or not g.is_connected():
            continue
        ok = all(
            not b.even_components and all(
                u not in g.adj[w] for u in b.vertices for w in b.vertices
            )
            for b in all_barriers(g)
        )
        assert ok == is_matching_covered(g)
