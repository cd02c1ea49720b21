"""Constructions: ridge replacement, the four compounds, expansions.

Numbering conventions (all deterministic, relied upon by recipes):

* Splitting a bisimplicial vertex ``u`` keeps ``u`` as ``u'`` (joined to the
  *prime* clique) and appends ``u''`` as the next free index.
* Binary operations place the first operand's vertices first and append the
  second operand's remaining vertices in increasing order.
* Fresh path or gadget vertices are appended with the highest indices.
* Surviving edges keep their operand order (first operand, then second) and
  new edges come last.  ``graph.origin[i]`` is ``(operand, old edge id)`` for
  surviving edges and ``None`` for new ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import GraphError, MultiGraph, is_clique, is_k4, ridges
from .named import named, triangle_replace  # noqa: F401  (re-exported)


class PreconditionError(GraphError):
    pass


@dataclass(frozen=True)
class BisimplicialWitness:
    kind: str  # "vertex" or "edge"
    location: int  # vertex, or edge id
    cliques: tuple[tuple[int, ...], tuple[int, ...]]
    k4_convention: bool = False


def vertex_cliques(g: MultiGraph, u: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The two cliques of a bisimplicial vertex, or None.

    ``G[N(u)]`` must consist of exactly two components, each complete with at
    least two vertices.  The clique holding the smallest neighbour comes first.
    """
    nb = g.adj[u]
    if len(nb) < 4:
        return None
    sub, vmap, _ = g.induced(nb)
    comps = sub.components()
    if len(comps) != 2:
        return None
    inv = sorted(nb)
    parts = tuple(tuple(inv[i] for i in c) for c in comps)
    if any(len(p) < 2 or not is_clique(g, p) for p in parts):
        return None
    return tuple(sorted(parts))


def edge_cliques(g: MultiGraph, e: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    a, b = g.edges[e]
    na = tuple(sorted(g.adj[a] - {b}))
    nb = tuple(sorted(g.adj[b] - {a}))
    if len(na) < 2 or len(nb) < 2 or set(na) & set(nb):
        return None
    if not (is_clique(g, na) and is_clique(g, nb)):
        return None
    return na, nb


def is_bisimplicial_edge(g: MultiGraph, e: int) -> bool:
    return is_k4(g) or edge_cliques(g, e) is not None


def bisimplicial_vertices(g: MultiGraph) -> list[BisimplicialWitness]:
    out = []
    for u in range(g.n):
        cl = vertex_cliques(g, u)
        if cl is not None:
            out.append(BisimplicialWitness("vertex", u, cl))
    return out


def bisimplicial_edges(g: MultiGraph) -> list[BisimplicialWitness]:
    k4 = is_k4(g)
    out = []
    for e in range(g.m):
        a, b = g.edges[e]
        cl = edge_cliques(g, e)
        if k4 and cl is None:
            cl = (tuple(sorted(g.adj[a] - {b})), tuple(sorted(g.adj[b] - {a})))
        if cl is not None:
            out.append(BisimplicialWitness("edge", e, cl, k4))
    return out


def _prime_split(g: MultiGraph, u: int, prime) -> tuple[tuple[int, ...], tuple[int, ...]]:
    cl = vertex_cliques(g, u)
    if cl is None:
        raise PreconditionError(f"vertex {u} is not bisimplicial")
    if prime is None:
        return cl
    p = tuple(sorted(prime))
    if p == cl[0]:
        return cl
    if p == cl[1]:
        return cl[1], cl[0]
    raise PreconditionError(f"{p} is not one of the cliques {cl} at vertex {u}")


def split_vertex(g: MultiGraph, u: int, prime=None) -> tuple[MultiGraph, int, int]:
    """The ``u``-splitting: returns ``(graph, u', u'')`` with ``u' = u``."""
    _, other = _prime_split(g, u, prime)
    other = set(other)
    u2 = g.n
    edges = []
    for x, y in g.edges:
        if x == u and y in other:
            edges.append((u2, y))
        elif y == u and x in other:
            edges.append((x, u2))
        else:
            edges.append((x, y))
    return MultiGraph(g.n + 1, tuple(edges)), u, u2


def _oriented(g: MultiGraph, e: int, orientation: int) -> tuple[int, int]:
    g.check_edge(e)
    a, b = g.edges[e]
    return (a, b) if orientation == 0 else (b, a)


def _even(*gs):
    for h in gs:
        if h.n % 2:
            raise PreconditionError(f"{h} has odd order")


def _assemble(n, parts, extra):
    """Edges from ``parts`` = [(operand, graph, vertex map, skipped ids)] + ``extra``."""
    edges, origin = [], []
    for k, h, vmap, skip in parts:
        for i, (x, y) in enumerate(h.edges):
            if i in skip:
                continue
            edges.append((vmap[x], vmap[y]))
            origin.append((k, i))
    for x, y in extra:
        edges.append((x, y))
        origin.append(None)
    return MultiGraph(n, tuple(edges), tuple(origin))


def v_join(g1: MultiGraph, u1: int, g2: MultiGraph, u2: int, prime1=None, prime2=None) -> MultiGraph:
    """Split both anchors and add the edges ``u1'u2'`` and ``u1''u2''``.

    ``prime1``/``prime2`` choose which clique goes to the primed split
    vertex; together they fix the pairing of the two splittings.
    """
    _even(g1, g2)
    s1, a1, b1 = split_vertex(g1, u1, prime1)
    s2, a2, b2 = split_vertex(g2, u2, prime2)
    off = s1.n
    return _assemble(
        s1.n + s2.n,
        [(0, s1, list(range(s1.n)), ()), (1, s2, [v + off for v in range(s2.n)], ())],
        [(a1, a2 + off), (b1, b2 + off)],
    )


def _merge_map(n1: int, n2: int, ident: dict[int, int]) -> list[int]:
    vmap, nxt = [], n1
    for v in range(n2):
        if v in ident:
            vmap.append(ident[v])
        else:
            vmap.append(nxt)
            nxt += 1
    return vmap


def v_attach(g1: MultiGraph, u1: int, g2: MultiGraph, u2: int, prime1=None, prime2=None) -> MultiGraph:
    """Split both anchors and identify ``u1'`` with ``u2'`` and ``u1''`` with ``u2''``."""
    _even(g1, g2)
    s1, a1, b1 = split_vertex(g1, u1, prime1)
    s2, a2, b2 = split_vertex(g2, u2, prime2)
    vmap = _merge_map(s1.n, s2.n, {a2: a1, b2: b1})
    return _assemble(
        s1.n + s2.n - 2, [(0, s1, list(range(s1.n)), ()), (1, s2, vmap, ())], []
    )


def e_join(g1: MultiGraph, e1: int, g2: MultiGraph, e2: int, orientation: int = 0) -> MultiGraph:
    """Delete ``e1 = a1b1`` and ``e2 = a2b2``, add ``a1a2`` and ``b1b2``.

    ``orientation`` 1 swaps the ends of ``e2``.
    """
    _even(g1, g2)
    for h, e in ((g1, e1), (g2, e2)):
        h.check_edge(e)
        if not is_bisimplicial_edge(h, e):
            raise PreconditionError(f"edge {e} ({h.edges[e]}) is not bisimplicial")
    a1, b1 = g1.edges[e1]
    a2, b2 = _oriented(g2, e2, orientation)
    off = g1.n
    return _assemble(
        g1.n + g2.n,
        [(0, g1, list(range(g1.n)), {e1}), (1, g2, [v + off for v in range(g2.n)], {e2})],
        [(a1, a2 + off), (b1, b2 + off)],
    )


def ev_attach(
    g1: MultiGraph, e1: int, g2: MultiGraph, u2: int, orientation: int = 0, prime2=None
) -> MultiGraph:
    """Delete ``e1 = a1b1``, identify ``a1`` with ``u2'`` and add ``b1u2''``.

    ``orientation`` 1 swaps the ends of ``e1``.
    """
    _even(g1, g2)
    g1.check_edge(e1)
    if not is_bisimplicial_edge(g1, e1):
        raise PreconditionError(f"edge {e1} ({g1.edges[e1]}) is not bisimplicial")
    a1, b1 = _oriented(g1, e1, orientation)
    s2, a2, c2 = split_vertex(g2, u2, prime2)
    vmap = _merge_map(g1.n, s2.n, {a2: a1})
    return _assemble(
        g1.n + s2.n - 1,
        [(0, g1, list(range(g1.n)), {e1}), (1, s2, vmap, ())],
        [(b1, vmap[c2])],
    )


GADGETS = {"k4minus": "K4minus", "c6barstar": "C6barStar"}


def replace_ridge(g: MultiGraph, e: int, gadget: str, orientation: int = 0) -> MultiGraph:
    """Delete ridge ``e`` and glue a K4minus / C6barStar onto its ends."""
    g.check_edge(e)
    if e not in ridges(g):
        raise PreconditionError(f"edge {e} ({g.edges[e]}) is not a ridge")
    key = gadget.lower().replace("-", "").replace("_", "")
    if key not in GADGETS:
        raise PreconditionError(f"unknown gadget {gadget!r}")
    ng = named(GADGETS[key])
    gg, (d1, d2) = ng.graph, ng.markers["degree2"]
    u1, u2 = _oriented(g, e, orientation)
    vmap, nxt = {d1: u1, d2: u2}, g.n
    for v in range(gg.n):
        if v not in vmap:
            vmap[v] = nxt
            nxt += 1
    return _assemble(
        nxt, [(0, g, list(range(g.n)), {e}), (1, gg, [vmap[v] for v in range(gg.n)], ())], []
    )


def _path_edges(start: int, end: int, first_new: int, length: int) -> list[tuple[int, int]]:
    inner = list(range(first_new, first_new + length - 1))
    seq = [start] + inner + [end]
    return list(zip(seq, seq[1:]))


def bisubdivide(g: MultiGraph, e: int, path_len: int) -> MultiGraph:
    """Replace ``e`` by an odd path of length ``path_len >= 3``."""
    g.check_edge(e)
    if path_len < 3 or path_len % 2 == 0:
        raise PreconditionError("bisubdivision needs an odd path of length at least 3")
    u, v = g.edges[e]
    return _assemble(
        g.n + path_len - 1,
        [(0, g, list(range(g.n)), {e})],
        _path_edges(u, v, g.n, path_len),
    )


def expand_vertex(g: MultiGraph, u: int, split, path_len: int) -> MultiGraph:
    """Split bisimplicial ``u`` and join ``u'``, ``u''`` by an even path.

    ``split`` is the clique for ``u'`` (None: the one with the smallest
    vertex).  ``u''`` gets index ``n``; the path's inner vertices follow.
    """
    g.check_vertex(u)
    if path_len < 2 or path_len % 2:
        raise PreconditionError("vertex expansion needs an even path of length at least 2")
    s, a, b = split_vertex(g, u, split)
    return _assemble(
        s.n + path_len - 1,
        [(0, s, list(range(s.n)), ())],
        _path_edges(a, b, s.n, path_len),
    )


def splice(g1: MultiGraph, u1: int, g2: MultiGraph, u2: int, pairing) -> MultiGraph:
    """Splice at equal-degree vertices.

    ``pairing[k]`` is the edge id at ``u2`` matched with the ``k``-th edge id
    at ``u1`` (in increasing order).
    """
    inc1, inc2 = g1.incidence[u1], g2.incidence[u2]
    if len(inc1) != len(inc2) or sorted(pairing) != sorted(inc2):
        raise PreconditionError("splicing needs a bijection between the two stars")
    keep1 = [v for v in range(g1.n) if v != u1]
    keep2 = [v for v in range(g2.n) if v != u2]
    m1 = {v: i for i, v in enumerate(keep1)}
    m2 = {v: len(keep1) + i for i, v in enumerate(keep2)}
    edges = [(m1[x], m1[y]) for x, y in g1.edges if u1 not in (x, y)]
    edges += [(m2[x], m2[y]) for x, y in g2.edges if u2 not in (x, y)]
    for f1, f2 in zip(inc1, pairing):
        edges.append((m1[g1.other_end(f1, u1)], m2[g2.other_end(f2, u2)]))
    return MultiGraph(len(keep1) + len(keep2), tuple(edges))


def is_expansion_shape(g: MultiGraph) -> bool:
    """Degrees in [2,4], K4-free unless K4, degree-4 neighbourhoods are 2K2."""
    if any(not 2 <= d <= 4 for d in g.degrees()):
        return False
    if not is_k4(g):
        for q in combinations(range(g.n), 4):
            if is_clique(g, q):
                return False
    for v in range(g.n):
        if g.degree(v) == 4:
            sub = g.induced(g.adj[v])[0]
            if sub.m != 2 or len(sub.components()) != 2:
                return False
    return True
