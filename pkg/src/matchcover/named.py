"""Catalogue of the small graphs the theory keeps returning to.

Vertex numbering per tag:

* ``K2``: edge 0-1.
* ``K4``: vertices 0..3, edges in lexicographic order.
* ``C6bar``: complement of the 6-cycle 0-1-2-3-4-5-0.  Triangles are
  {0,2,4} and {1,3,5}; the ridges are 0-3, 1-4, 2-5.
* ``K4minus``: K4 without edge 0-1; vertices 0 and 1 have degree 2.
* ``C6barStar``: C6bar without ridge 0-3; vertices 0 and 3 have degree 2.
* ``C<k>`` (or ``Cn(k)``): the cycle 0-1-...-(k-1)-0.
* ``K33``: parts {0,1,2} and {3,4,5}.
* ``prism``: triangles {0,1,2}, {3,4,5} and rungs i-(i+3); isomorphic to C6bar.
* ``H1``: :func:`triangle_replace` applied to K4 (12 vertices).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

from .graph import GraphError, MultiGraph, cycle_graph


@dataclass(frozen=True)
class NamedGraph:
    tag: str
    graph: MultiGraph
    markers: dict = field(default_factory=dict, compare=False)


def complete_graph(k: int) -> MultiGraph:
    return MultiGraph(k, tuple(combinations(range(k), 2)))


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def complement(g: MultiGraph) -> MultiGraph:
    return MultiGraph(g.n, tuple(p for p in combinations(range(g.n), 2) if p[1] not in g.adj[p[0]]))


def triangle_replace(g: MultiGraph) -> MultiGraph:
    """Replace every vertex of a simple cubic graph by a triangle.

    Vertex ``v`` becomes ``3v, 3v+1, 3v+2``; the ``k``-th edge at ``v`` (by
    edge id) is attached to ``3v+k``.  The edges of ``g`` keep their ids and
    the triangle edges follow.
    """
    if not g.is_simple() or not g.is_cubic():
        raise GraphError("triangle replacement needs a simple cubic graph")
    slot = {}
    for v in range(g.n):
        for k, eid in enumerate(g.incidence[v]):
            slot[eid, v] = 3 * v + k
    edges = [(slot[i, u], slot[i, v]) for i, (u, v) in enumerate(g.edges)]
    for v in range(g.n):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    return MultiGraph(3 * g.n, tuple(edges))


def _prism() -> MultiGraph:
    return MultiGraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)))


def named(tag: str, k: int | None = None) -> NamedGraph:
    if tag == "K2":
        return NamedGraph(tag, MultiGraph(2, ((0, 1),)))
    if tag == "K4":
        return NamedGraph(tag, complete_graph(4))
    if tag == "C6bar":
        g = complement(cycle_graph(6))
        return NamedGraph(tag, g, {"ridges": (g.edge_id(0, 3), g.edge_id(1, 4), g.edge_id(2, 5))})
    if tag == "K4minus":
        g = complete_graph(4)
        return NamedGraph(tag, g.delete_edge(g.edge_id(0, 1)), {"degree2": (0, 1)})
    if tag == "C6barStar":
        g = complement(cycle_graph(6))
        return NamedGraph(tag, g.delete_edge(g.edge_id(0, 3)), {"degree2": (0, 3)})
    if tag == "K33":
        return NamedGraph(tag, complete_bipartite(3, 3))
    if tag == "prism":
        return NamedGraph(tag, _prism())
    if tag == "H1":
        return NamedGraph(tag, triangle_replace(complete_graph(4)))
    m = re.fullmatch(r"C(\d+)|Cn\((\d+)\)|Cn", tag)
    if m:
        size = int(m.group(1) or m.group(2) or (k or 0))
        return NamedGraph(f"C{size}", cycle_graph(size))
    raise GraphError(f"unknown graph tag {tag!r}")


def graph(tag: str) -> MultiGraph:
    """Shorthand for ``named(tag).graph``."""
    return named(tag).graph
