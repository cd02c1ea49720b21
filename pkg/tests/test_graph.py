from itertools import combinations

import pytest
from conftest import mg

from matchcover.graph import (
    GraphError,
    MultiGraph,
    contract,
    cycle_graph,
    edge_cut,
    find_claw,
    is_claw_free,
    ridges,
    triangle_edges,
)
from matchcover.named import complete_bipartite, graph, named, triangle_replace


def test_rejects_loops_and_bad_indices():
    with pytest.raises(GraphError):
        MultiGraph(3, ((1, 1),))
    with pytest.raises(GraphError):
        MultiGraph(3, ((0, 3),))


def test_edges_are_normalised_and_parallel_edges_kept():
    g = mg(2, (1, 0), (0, 1))
    assert g.edges == ((0, 1), (0, 1))
    assert g.m == 2 and g.degree(0) == 2
    assert not g.is_simple()


class TestEdgeCut:
    def test_vertex_of_k4_is_trivial_3_cut(self):
        c = edge_cut(graph("K4"), {0})
        assert len(c.boundary) == 3 and c.trivial

    def test_triangle_of_c6bar(self):
        g = graph("C6bar")
        c = edge_cut(g, {0, 2, 4})
        assert len(c.boundary) == 3
        assert not c.trivial

    def test_path_cut_of_c6(self):
        g = cycle_graph(6)
        c = edge_cut(g, {0, 1, 2})
        assert {g.edges[i] for i in c.boundary} == {(2, 3), (0, 5)}

    @pytest.mark.parametrize("side", [set(), set(range(4))])
    def test_rejects_empty_or_full(self, side):
        with pytest.raises(GraphError):
            edge_cut(graph("K4"), side)

    def test_boundary_symmetric_under_complement(self):
        g = graph("H1")
        for x in ({0, 1, 2}, {0, 5, 7, 11}, set(range(6))):
            a = edge_cut(g, x)
            b = edge_cut(g, set(range(g.n)) - x)
            assert a.boundary == b.boundary


class TestContract:
    def test_c6_side_becomes_4_cycle(self):
        c = contract(cycle_graph(6), {0, 1, 2})
        h = c.graph
        assert h.n == 4 and h.m == 4
        assert all(d == 2 for d in h.degrees())
        assert c.shrunk == 3

    def test_k4_three_vertices_is_k4(self):
        h = contract(graph("K4"), {0, 1, 2}).graph
        assert h.n == 4 and h.m == 6 and h.is_simple()

    def test_parallel_boundary_edges_survive(self):
        g = mg(4, (0, 2), (1, 2), (0, 1), (2, 3), (0, 3), (1, 3))
        h = contract(g, {2, 3}).graph
        # 0 and 1 both shrink into the last vertex
        assert h.multiplicity[(0, 2)] == 2 and h.multiplicity[(1, 2)] == 2

    def test_edge_count_identity(self):
        g = graph("H1")
        for x in ({0, 1, 2}, {0, 1, 2, 3, 4}, set(range(7))):
            inside = sum(1 for a, b in g.edges if a in x and b in x)
            assert contract(g, x).graph.m == inside + len(edge_cut(g, x).boundary)


class TestClawFree:
    def test_examples(self):
        assert is_claw_free(graph("K4"))
        assert is_claw_free(graph("C6bar"))
        assert not is_claw_free(complete_bipartite(1, 3))

    def test_agrees_with_4_subset_scan(self):
        import random

        rng = random.Random(5)
        for _ in range(150):
            n = rng.randint(4, 10)
            g = MultiGraph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < 0.4))
            brute = False
            for q in combinations(range(n), 4):
                for c in q:
                    rest = [v for v in q if v != c]
                    if all(v in g.adj[c] for v in rest) and all(
                        b not in g.adj[a] for a, b in combinations(rest, 2)
                    ):
                        brute = True
            assert is_claw_free(g) == (not brute)
            if brute:
                centre, *leaves = find_claw(g)
                assert all(v in g.adj[centre] for v in leaves)


class TestRidges:
    def test_k4_every_edge(self):
        assert ridges(graph("K4")) == list(range(6))

    def test_c6bar_the_three_joins(self):
        g = graph("C6bar")
        assert sorted(g.edges[i] for i in ridges(g)) == [(0, 3), (1, 4), (2, 5)]
        assert tuple(ridges(g)) == tuple(sorted(named("C6bar").markers["ridges"]))

    def test_triangle_has_none(self):
        assert ridges(cycle_graph(3)) == []

    def test_k4_with_doubled_edge_keeps_convention(self):
        g = graph("K4").add_edges([(0, 1)])
        assert ridges(g) == list(range(7))

    def test_doubled_edge_does_not_make_a_triangle(self):
        g = cycle_graph(4).add_edges([(0, 1)])
        assert ridges(g) == list(range(5))


class TestNamed:
    def test_sizes(self):
        assert (graph("K4").n, graph("K4").m) == (4, 6)
        assert (graph("C6bar").n, graph("C6bar").m) == (6, 9)

    def test_gadgets_have_two_degree_2_vertices(self):
        for tag in ("K4minus", "C6barStar"):
            ng = named(tag)
            twos = [v for v in range(ng.graph.n) if ng.graph.degree(v) == 2]
            assert tuple(twos) == ng.markers["degree2"]

    def test_h1(self):
        g = graph("H1")
        assert (g.n, g.m) == (12, 18)
        assert g.is_cubic() and is_claw_free(g)
        assert g.vertex_connectivity_at_least(3)
        assert not g.vertex_connectivity_at_least(4)
        assert g == triangle_replace(graph("K4"))
        assert len(triangle_edges(g)) == 12

    def test_cycle_tags(self):
        assert graph("C8").n == 8
        assert named("Cn", 10).graph.n == 10

    def test_unknown_tag(self):
        with pytest.raises(GraphError):
            named("K5")

    def test_triangle_replace_needs_cubic(self):
        with pytest.raises(GraphError):
            triangle_replace(cycle_graph(4))

    @pytest.mark.parametrize("base,n", [("prism", 18), ("K33", 18)])
    def test_triangle_replace_counts(self, base, n):
        g = triangle_replace(graph(base))
        assert g.n == n and g.is_cubic() and is_claw_free(g)
