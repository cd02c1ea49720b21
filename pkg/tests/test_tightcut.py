import json
from itertools import combinations

import pytest
from conftest import bf_removable, bf_tight

from matchcover import forge
from matchcover.barriers import find_2_barrier, is_barrier, is_bicritical
from matchcover.corpus import cubic_bases, matching_covered_corpus, prism_graph
from matchcover.graph import GraphError, contract, cycle_graph, edge_cut
from matchcover.matching import NotMatchingCovered, is_matching_covered
from matchcover.named import complete_bipartite, graph
from matchcover.tightcut import (
    barrier_cut,
    classify,
    decompose,
    find_nontrivial_tight_cut,
    is_tight_cut,
)

K4 = graph("K4")


def _corpus(max_n):
    return [g for _, g in matching_covered_corpus(max_n) if g.n >= 4]


class TestIsTight:
    def test_c6_path_side(self):
        g = cycle_graph(6)
        assert is_tight_cut(g, edge_cut(g, {0, 1, 2}))

    def test_c4_even_side(self):
        g = cycle_graph(4)
        assert not is_tight_cut(g, edge_cut(g, {0, 1}))

    def test_trivial_cuts(self):
        for g in (K4, graph("C6bar"), graph("H1")):
            assert all(is_tight_cut(g, edge_cut(g, {v})) for v in range(g.n))

    def test_requires_matching_covered(self, p4):
        with pytest.raises(NotMatchingCovered):
            is_tight_cut(p4, edge_cut(p4, {0}))

    def test_agrees_with_enumeration(self):
        for g in _corpus(8):
            for k in range(1, g.n):
                for x in combinations(range(g.n), k):
                    assert is_tight_cut(g, edge_cut(g, x)) == bf_tight(g, x)


class TestBarrierCut:
    def test_c6_single_vertex_piece(self):
        g = cycle_graph(6)
        c = barrier_cut(g, is_barrier(g, {0, 2, 4}), 0)
        assert c.trivial and is_tight_cut(g, c)

    def test_v_join_of_k4s(self):
        a = forge.replace_ridge(K4, 0, "k4minus")
        u = next(w.location for w in forge.bisimplicial_vertices(a))
        g = forge.v_join(a, u, a, u)
        b = find_2_barrier(g)
        assert b is not None
        for i in range(len(b.odd_components)):
            c = barrier_cut(g, b, i)
            assert bf_tight(g, c.x_side)
            assert len(c) == len(edge_cut(g, b.odd_components[i]).boundary)

    def test_e_join_of_k4s(self):
        g = forge.e_join(K4, 0, K4, 0)
        b = find_2_barrier(g)
        big = [i for i, comp in enumerate(b.odd_components) if len(comp) > 1]
        assert big
        c = barrier_cut(g, b, big[0])
        assert not c.trivial and bf_tight(g, c.x_side)

    def test_index_out_of_range(self):
        g = cycle_graph(6)
        with pytest.raises(GraphError):
            barrier_cut(g, is_barrier(g, {0, 2, 4}), 3)


class TestFind:
    def test_examples(self):
        assert find_nontrivial_tight_cut(K4) is None
        assert find_nontrivial_tight_cut(complete_bipartite(3, 3)) is None
        assert find_nontrivial_tight_cut(graph("C6bar")) is None
        c = find_nontrivial_tight_cut(cycle_graph(6))
        assert c.shore() == (0, 1, 2)

    def test_returned_cuts_are_tight_and_nontrivial(self):
        for g in _corpus(10):
            c = find_nontrivial_tight_cut(g)
            if c is not None:
                assert not c.trivial
                assert bf_tight(g, c.x_side)

    def test_absent_only_when_none_exists(self):
        for g in _corpus(8):
            found = find_nontrivial_tight_cut(g) is not None
            exists = any(
                bf_tight(g, x)
                for k in range(3, g.n - 2, 2)
                for x in combinations(range(g.n), k)
            )
            assert found == exists


class TestDecompose:
    def test_c6_two_braces(self):
        t = decompose(cycle_graph(6))
        assert [lf.kind for lf in t.leaves] == ["brace", "brace"]
        assert all(h.n == 4 for h in t.braces())
        assert t.b_star == 0

    def test_k4_single_brick(self):
        t = decompose(K4)
        assert t.root.is_leaf and t.root.kind == "brick" and t.b_star == 0

    def test_h1(self):
        t = decompose(graph("H1"))
        assert t.root.is_leaf and t.b_star == 1 and t.leaf_orders == [12]

    def test_children_are_the_two_contractions(self):
        for g in _corpus(10)[:60]:
            stack = [decompose(g).root]
            while stack:
                node = stack.pop()
                if node.is_leaf:
                    assert find_nontrivial_tight_cut(node.graph) is None
                    continue
                c = node.cut
                want = [contract(node.graph, c.x_side).graph, contract(node.graph, c.complement()).graph]
                assert [ch.graph for ch in node.children] == want
                assert all(is_matching_covered(h) for h in want)
                stack.extend(node.children)

    def test_seeds_agree(self):
        for g in _corpus(9)[:40]:
            forms = decompose(g).leaf_forms()
            assert all(decompose(g, seed=s).leaf_forms() == forms for s in range(3))

    def test_serialisations(self):
        t = decompose(cycle_graph(6))
        text = t.to_text()
        assert text.splitlines()[0].startswith("cut n=6 m=6 X={0,1,2}")
        assert text.endswith("b_star=0 leaf_orders=[]")
        d = json.loads(t.to_json())
        assert d["root"]["cut"]["shore"] == [0, 1, 2]
        assert [leaf["class"] for leaf in d["leaves"]] == ["brace", "brace"]

    def test_requires_matching_covered(self, p4):
        with pytest.raises(NotMatchingCovered):
            decompose(p4)


class TestClassify:
    @pytest.mark.parametrize(
        "g,kind",
        [(K4, "brick"), (graph("C6bar"), "brick"), (complete_bipartite(3, 3), "brace"), (cycle_graph(6), "neither")],
    )
    def test_examples(self, g, kind):
        assert classify(g) == kind

    def test_cubic_bicritical_is_brick(self):
        cubic = [g for g in _corpus(12) if g.is_cubic()] + list(cubic_bases().values())
        cubic.append(prism_graph(5))
        for g in cubic:
            if is_matching_covered(g) and is_bicritical(g):
                assert classify(g) == "brick"


def test_removable_in_contractions():
    for g in _corpus(8):
        re = set(bf_removable(g))
        for k in range(3, g.n - 2, 2):
            for x in combinations(range(g.n), k):
                if not bf_tight(g, x):
                    continue
                sides = [contract(g, x), contract(g, set(range(g.n)) - set(x))]
                for e in range(g.m):
                    verdicts = [
                        side.edge_map[e] in bf_removable(side.graph)
                        for side in sides
                        if e in side.edge_map
                    ]
                    assert (e in re) == all(verdicts)


def test_tight_3_cuts_in_3_connected_graphs_are_matchings():
    for g in _corpus(10):
        if not g.vertex_connectivity_at_least(3):
            continue
        for k in range(3, g.n - 2, 2):
            for x in combinations(range(g.n), k):
                c = edge_cut(g, x)
                if len(c) == 3 and is_tight_cut(g, c):
                    ends = [v for i in c.boundary for v in g.edges[i]]
                    assert len(set(ends)) == 6


def test_odd_sets_of_2_connected_cubic_graphs():
    graphs = [g for g in _corpus(12) if g.is_cubic()] + [h for h in cubic_bases().values() if h.n <= 12]
    assert len(graphs) >= 8
    for g in graphs:
        if not g.vertex_connectivity_at_least(2):
            continue
        for k in range(1, g.n, 2):
            for x in combinations(range(g.n), k):
                assert len(edge_cut(g, x)) >= 3
