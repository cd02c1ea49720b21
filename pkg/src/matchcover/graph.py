"""Loopless undirected multigraphs with stable edge ids, cuts and contractions.

Vertices are the integers ``0..n-1``.  Every edge is stored as a sorted pair
``(u, v)`` with ``u < v``; its position in :attr:`MultiGraph.edges` is its
edge id.  Parallel edges are simply repeated pairs.  Graphs are immutable:
deletion and contraction return new graphs together with id maps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex/edge arguments."""


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()
    # provenance of each edge when the graph was built by a composite
    # operation: (operand index, operand edge id) or None for a fresh edge
    origin: tuple[tuple[int, int] | None, ...] | None = field(
        default=None, compare=False, repr=False
    )

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> MultiGraph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, in increasing order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Simple neighbourhoods (parallel edges collapsed)."""
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(i) for i in self.incidence]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_ids_between(self, u: int, v: int) -> list[int]:
        key = (u, v) if u < v else (v, u)
        return [i for i in self.incidence[u] if self.edges[i] == key]

    def edge_id(self, u: int, v: int) -> int:
        ids = self.edge_ids_between(u, v)
        if not ids:
            raise GraphError(f"no edge {u}-{v}")
        return ids[0]

    def check_edge(self, eid: int) -> None:
        if not (0 <= eid < self.m):
            raise GraphError(f"invalid edge id {eid}")

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"invalid vertex {v}")

    def is_simple(self) -> bool:
        return len(self.multiplicity) == self.m

    def underlying_simple(self) -> MultiGraph:
        return MultiGraph(self.n, tuple(sorted(self.multiplicity)))

    def is_cubic(self) -> bool:
        return all(len(i) == 3 for i in self.incidence)

    # -- derived graphs -------------------------------------------------

    def delete_edges(self, ids: Iterable[int]) -> tuple[MultiGraph, dict[int, int]]:
        """Drop edges; returns the new graph and the old->new edge id map."""
        gone = set(ids)
        for i in gone:
            self.check_edge(i)
        kept, emap = [], {}
        for i, e in enumerate(self.edges):
            if i not in gone:
                emap[i] = len(kept)
                kept.append(e)
        return MultiGraph(self.n, tuple(kept)), emap

    def delete_edge(self, eid: int) -> MultiGraph:
        return self.delete_edges([eid])[0]

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> MultiGraph:
        return MultiGraph(self.n, self.edges + tuple((u, v) for u, v in pairs))

    def induced(self, keep: Iterable[int]) -> tuple[MultiGraph, dict[int, int], dict[int, int]]:
        """Subgraph induced by ``keep``; returns (graph, vertex map, edge map)."""
        order = sorted(set(keep))
        vmap = {v: i for i, v in enumerate(order)}
        kept, emap = [], {}
        for i, (u, v) in enumerate(self.edges):
            if u in vmap and v in vmap:
                emap[i] = len(kept)
                kept.append((vmap[u], vmap[v]))
        return MultiGraph(len(order), tuple(kept)), vmap, emap

    def delete_vertices(self, gone: Iterable[int]):
        gone = set(gone)
        return self.induced(v for v in range(self.n) if v not in gone)

    def relabel(self, perm: Sequence[int]) -> MultiGraph:
        """Rename vertex ``v`` to ``perm[v]``; edge ids are preserved."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of the vertices")
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    # -- connectivity ---------------------------------------------------

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components of ``G - removed`` as sorted vertex lists."""
        dead = set(removed)
        seen = set(dead)
        comps = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def two_coloring(self) -> list[int] | None:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if color[y] < 0:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        return color

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def vertex_connectivity_at_least(self, k: int) -> bool:
        """True iff ``n > k`` and deleting fewer than ``k`` vertices never disconnects.

        Brute force over vertex subsets; only meant for ``k <= 3``.
        """
        if self.n <= k:
            return False
        for r in range(k):
            for cut in combinations(range(self.n), r):
                if len(self.components(cut)) != 1:
                    return False
        return True

    def two_vertex_cuts(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if len(self.components((u, v))) > 1
        ]

    def __str__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cut:
    """The edge cut of a nonempty proper vertex set ``x_side``."""

    x_side: frozenset[int]
    boundary: tuple[int, ...]
    n: int

    @property
    def trivial(self) -> bool:
        return len(self.x_side) == 1 or self.n - len(self.x_side) == 1

    def complement(self) -> frozenset[int]:
        return frozenset(range(self.n)) - self.x_side

    def shore(self) -> tuple[int, ...]:
        """The side containing vertex 0, sorted; used to order cuts."""
        side = self.x_side if 0 in self.x_side else self.complement()
        return tuple(sorted(side))

    def __len__(self) -> int:
        return len(self.boundary)


def _check_side(g: MultiGraph, x: Iterable[int]) -> frozenset[int]:
    xs = frozenset(x)
    if not xs or len(xs) >= g.n:
        raise GraphError("cut side must be a nonempty proper vertex subset")
    for v in xs:
        g.check_vertex(v)
    return xs


def edge_cut(g: MultiGraph, x: Iterable[int]) -> Cut:
    xs = _check_side(g, x)
    boundary = tuple(i for i, (u, v) in enumerate(g.edges) if (u in xs) != (v in xs))
    return Cut(xs, boundary, g.n)


@dataclass(frozen=True)
class Contraction:
    """``G{X}``: ``X`` kept, its complement shrunk to ``shrunk``."""

    graph: MultiGraph
    vertex_map: dict[int, int]
    edge_map: dict[int, int]
    shrunk: int


def contract(g: MultiGraph, x: Iterable[int]) -> Contraction:
    """Shrink the complement of ``x`` to a single new vertex.

    Vertices of ``x`` are renumbered in increasing order and the shrunk vertex
    is the last one.  Edges inside the complement vanish, boundary edges are
    redirected and parallel edges survive.
    """
    xs = _check_side(g, x)
    order = sorted(xs)
    vmap = {v: i for i, v in enumerate(order)}
    bar = len(order)
    kept, emap = [], {}
    for i, (u, v) in enumerate(g.edges):
        iu, iv = u in xs, v in xs
        if not iu and not iv:
            continue
        emap[i] = len(kept)
        kept.append((vmap[u] if iu else bar, vmap[v] if iv else bar))
    return Contraction(MultiGraph(bar + 1, tuple(kept)), vmap, emap, bar)


def triangles(g: MultiGraph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in sorted(g.multiplicity):
        for w in g.adj[u] & g.adj[v]:
            if w > v:
                out.append((u, v, w))
    return out


def triangle_edges(g: MultiGraph) -> list[int]:
    """Edge ids whose ends have a common neighbour."""
    return [i for i, (u, v) in enumerate(g.edges) if g.adj[u] & g.adj[v]]


def is_k4(g: MultiGraph) -> bool:
    """True when the underlying simple graph is K4."""
    return g.n == 4 and len(g.multiplicity) == 6


def ridges(g: MultiGraph) -> list[int]:
    """Edge ids lying in no triangle of the underlying simple graph.

    Every edge counts as a ridge when the underlying simple graph is K4,
    including parallel copies.
    """
    if is_k4(g):
        return list(range(g.m))
    return [i for i, (u, v) in enumerate(g.edges) if not (g.adj[u] & g.adj[v])]


def find_claw(g: MultiGraph) -> tuple[int, int, int, int] | None:
    """Return ``(centre, a, b, c)`` of an induced K_{1,3}, or None."""
    for c in range(g.n):
        nb = sorted(g.adj[c])
        if len(nb) < 3:
            continue
        for a, b, d in combinations(nb, 3):
            if b not in g.adj[a] and d not in g.adj[a] and d not in g.adj[b]:
                return (c, a, b, d)
    return None


def is_claw_free(g: MultiGraph) -> bool:
    return find_claw(g) is None


def is_clique(g: MultiGraph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(b in g.adj[a] for a, b in combinations(vs, 2))


def path_graph(k: int) -> MultiGraph:
    return MultiGraph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> MultiGraph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return MultiGraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def is_even_cycle(g: MultiGraph) -> bool:
    return (
        g.n >= 4
        and g.n % 2 == 0
        and g.m == g.n
        and g.is_connected()
        and all(d == 2 for d in g.degrees())
    )


def disjoint_union(*graphs: MultiGraph) -> tuple[MultiGraph, list[int]]:
    """Union with vertex offsets; edge ids follow operand order."""
    offsets, edges, n = [], [], 0
    for h in graphs:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in h.edges)
        n += h.n
    return MultiGraph(n, tuple(edges)), offsets
