"""Brute-force oracles shared by the tests.

Nothing here calls into the package's matching code: perfect matchings are
enumerated by plain recursion over edge lists, isomorphism goes through
networkx.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from matchcover.graph import MultiGraph


def bf_matchings(g: MultiGraph, removed=()) -> list[frozenset[int]]:
    """All perfect matchings of ``g - removed`` as edge-id sets."""
    dead = set(removed)
    alive = [v for v in range(g.n) if v not in dead]
    if len(alive) % 2:
        return []
    out = []

    def rec(free: frozenset, chosen: list):
        if not free:
            out.append(frozenset(chosen))
            return
        v = min(free)
        for i, (a, b) in enumerate(g.edges):
            if v in (a, b):
                w = b if a == v else a
                if w in free and w != v:
                    rec(free - {v, w}, chosen + [i])

    rec(frozenset(alive), [])
    return out


def bf_has_pm(g: MultiGraph, removed=()) -> bool:
    return bool(bf_matchings(g, removed))


def bf_connected(g: MultiGraph) -> bool:
    if g.n == 0:
        return False
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.is_connected(h)


def bf_matching_covered(g: MultiGraph) -> bool:
    if g.m == 0 or not bf_connected(g):
        return False
    covered = set().union(*bf_matchings(g)) if g.n % 2 == 0 else set()
    return covered == set(range(g.m))


def without_edge(g: MultiGraph, e: int) -> MultiGraph:
    return MultiGraph(g.n, tuple(x for i, x in enumerate(g.edges) if i != e))


def bf_removable(g: MultiGraph) -> list[int]:
    return [e for e in range(g.m) if bf_matching_covered(without_edge(g, e))]


def bf_tight(g: MultiGraph, x) -> bool:
    xs = set(x)
    cut = {i for i, (a, b) in enumerate(g.edges) if (a in xs) != (b in xs)}
    return all(len(m & cut) == 1 for m in bf_matchings(g))


def bf_odd_components(g: MultiGraph, removed) -> int:
    h = nx.Graph()
    dead = set(removed)
    h.add_nodes_from(v for v in range(g.n) if v not in dead)
    h.add_edges_from((a, b) for a, b in g.edges if a not in dead and b not in dead)
    return sum(1 for c in nx.connected_components(h) if len(c) % 2)


def bf_barriers(g: MultiGraph) -> list[frozenset[int]]:
    return [
        frozenset(b)
        for k in range(1, g.n + 1)
        for b in combinations(range(g.n), k)
        if bf_odd_components(g, b) == k
    ]


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    return nx.is_isomorphic(to_nx(g1), to_nx(g2))


def all_graphs(n: int):
    """Every labelled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield MultiGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))


def mg(n: int, *edges) -> MultiGraph:
    return MultiGraph(n, tuple(edges))


@pytest.fixture
def p4() -> MultiGraph:
    return mg(4, (0, 1), (1, 2), (2, 3))



def inherited_removable_graphs(operands, g) -> tuple[list[int], list[int]]:
    """(RE(g), RE predicted from the operands ``g`` was built from).

    The prediction keeps exactly the surviving operand edges that were
    removable in their operand; fresh edges are never removable.
    """
    from matchcover.matching import removable_edges

    re_ops = [set(removable_edges(h)) for h in operands]
    want = [i for i, o in enumerate(g.origin) if o is not None and o[1] in re_ops[o[0]]]
    return removable_edges(g), want


def inherited_removable(r) -> tuple[list[int], list[int]]:
    """:func:`inherited_removable_graphs` for the top node of a recipe."""
    from matchcover import recipe as R

    operands = [R.evaluate(c) for c in R.children(r)]
    return inherited_removable_graphs(operands, R.apply(r, operands))
