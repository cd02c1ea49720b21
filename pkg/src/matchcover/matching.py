"""Perfect matchings, admissibility, removable edges and edge dependence.

Existence questions go through Edmonds' blossom-shrinking augmenting path
search.  Admissibility of ``uv`` is decided by taking one perfect matching
``M`` of ``G``, deleting ``u`` and ``v`` together with their ``M``-edges and
running a single augmentation between the two freed mates.  The exponential
enumerator :func:`enumerate_perfect_matchings` is kept independent of all of
this and serves as the test oracle.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import GraphError, MultiGraph


class NotMatchingCovered(GraphError):
    pass


def _augment_from(adj, mate: list[int], root: int, alive: list[bool]) -> bool:
    """Search an augmenting path from exposed ``root``; flip it if found."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if not alive[to] or base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark(v, cur, to, blossom)
                mark(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = mate[pv]
                        mate[to] = pv
                        mate[pv] = to
                        to = nxt
                    return True
                used[mate[to]] = True
                queue.append(mate[to])
    return False


def maximum_matching(
    g: MultiGraph, removed: Iterable[int] = (), initial: list[int] | None = None
) -> list[int]:
    """Maximum matching of ``G - removed`` as a mate array (-1 = exposed).

    ``initial`` may be any mate array; pairs that are not edges of
    ``G - removed`` are dropped before augmenting.
    """
    alive = [True] * g.n
    for v in removed:
        alive[v] = False
    adj = [sorted(s) for s in g.adj]
    mate = [-1] * g.n
    if initial is not None:
        for v, w in enumerate(initial):
            if w > v and alive[v] and alive[w] and w in g.adj[v]:
                mate[v], mate[w] = w, v
    for v in range(g.n):
        if alive[v] and mate[v] == -1:
            _augment_from(adj, mate, v, alive)
    return mate


def _mate_to_edges(g: MultiGraph, mate: list[int]) -> tuple[int, ...]:
    return tuple(sorted(g.edge_id(v, w) for v, w in enumerate(mate) if w > v))


def perfect_matching(g: MultiGraph, removed: Iterable[int] = ()) -> tuple[int, ...] | None:
    removed = set(removed)
    mate = maximum_matching(g, removed)
    if any(mate[v] == -1 for v in range(g.n) if v not in removed):
        return None
    return _mate_to_edges(g, mate)


def has_perfect_matching(g: MultiGraph, removed: Iterable[int] = ()) -> bool:
    removed = set(removed)
    if (g.n - len(removed)) % 2:
        return False
    return perfect_matching(g, removed) is not None


def _perfect_mate(g: MultiGraph, hint: list[int] | None = None) -> list[int] | None:
    if g.n % 2:
        return None
    mate = maximum_matching(g, initial=hint)
    return None if -1 in mate else mate


def _admissibility(g: MultiGraph, mate: list[int] | None) -> list[bool]:
    if mate is None:
        return [False] * g.m
    adj = [sorted(s) for s in g.adj]
    memo: dict[tuple[int, int], bool] = {}
    out = []
    for u, v in g.edges:
        if (u, v) not in memo:
            if mate[u] == v:
                memo[u, v] = True
            else:
                a, b = mate[u], mate[v]
                trial = list(mate)
                for x in (u, v, a, b):
                    trial[x] = -1
                alive = [True] * g.n
                alive[u] = alive[v] = False
                memo[u, v] = _augment_from(adj, trial, a, alive)
        out.append(memo[u, v])
    return out


def admissible_edges(g: MultiGraph) -> list[bool]:
    """Admissibility flag per edge id."""
    return _admissibility(g, _perfect_mate(g))


def is_admissible(g: MultiGraph, e: int) -> bool:
    g.check_edge(e)
    u, v = g.edges[e]
    return has_perfect_matching(g, (u, v))


def inadmissible_edge(g: MultiGraph) -> int | None:
    for i, ok in enumerate(admissible_edges(g)):
        if not ok:
            return i
    return None


def _mc_with_hint(g: MultiGraph, hint: list[int] | None) -> bool:
    if g.n < 2 or g.m == 0 or g.n % 2 or not g.is_connected():
        return False
    mate = _perfect_mate(g, hint)
    return mate is not None and all(_admissibility(g, mate))


def is_matching_covered(g: MultiGraph) -> bool:
    return _mc_with_hint(g, None)


def require_matching_covered(g: MultiGraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCovered(f"{g} is not matching covered")


def removable_edges(g: MultiGraph) -> list[int]:
    """Sorted ids of the edges ``e`` with ``G - e`` matching covered."""
    require_matching_covered(g)
    mate = _perfect_mate(g)
    return [e for e in range(g.m) if _mc_with_hint(g.delete_edge(e), mate)]


def is_removable(g: MultiGraph, e: int) -> bool:
    g.check_edge(e)
    require_matching_covered(g)
    return is_matching_covered(g.delete_edge(e))


def is_minimal(g: MultiGraph) -> bool:
    return not removable_edges(g)


def depends_on(g: MultiGraph, e: int, f: int) -> bool:
    """True iff every perfect matching containing ``e`` also contains ``f``."""
    g.check_edge(e)
    g.check_edge(f)
    if e == f:
        raise GraphError("dependence is defined for distinct edges")
    h, emap = g.delete_edges([f])
    u, v = h.edges[emap[e]]
    return not has_perfect_matching(h, (u, v))


def dependence_matrix(g: MultiGraph) -> list[list[bool]]:
    """``dep[e][f]`` is True iff ``e`` depends on ``f`` (diagonal False)."""
    mate = _perfect_mate(g)
    dep = [[False] * g.m for _ in range(g.m)]
    for f in range(g.m):
        h, emap = g.delete_edges([f])
        adm = _admissibility(h, _perfect_mate(h, mate))
        for e, i in emap.items():
            dep[e][f] = not adm[i]
    return dep


def dependence_classes(g: MultiGraph) -> list[list[int]]:
    """Equivalence classes of mutual dependence, sorted."""
    require_matching_covered(g)
    dep = dependence_matrix(g)
    seen: set[int] = set()
    classes = []
    for e in range(g.m):
        if e in seen:
            continue
        cls = [e] + [f for f in range(e + 1, g.m) if dep[e][f] and dep[f][e]]
        seen.update(cls)
        classes.append(cls)
    return classes


def enumerate_perfect_matchings(g: MultiGraph) -> list[tuple[int, ...]]:
    """Every perfect matching as a sorted edge-id tuple, in lexicographic order.

    Exponential; a test oracle, not used by the polynomial routines.
    """
    if g.n % 2:
        return []
    covered = [False] * g.n
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []

    def rec(start):
        v = start
        while v < g.n and covered[v]:
            v += 1
        if v == g.n:
            out.append(tuple(sorted(chosen)))
            return
        covered[v] = True
        for eid in g.incidence[v]:
            w = g.other_end(eid, v)
            if not covered[w]:
                covered[w] = True
                chosen.append(eid)
                rec(v + 1)
                chosen.pop()
                covered[w] = False
        covered[v] = False

    rec(0)
    out.sort()
    return out


def pair_deletion_table(g: MultiGraph) -> list[list[bool]] | None:
    """``ok[u][v]`` iff ``G - u - v`` has a perfect matching (``u != v``).

    Returns None when ``G`` itself has no perfect matching.
    """
    mate = _perfect_mate(g)
    if mate is None:
        return None
    adj = [sorted(s) for s in g.adj]
    ok = [[False] * g.n for _ in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if mate[u] == v:
                res = True
            else:
                a, b = mate[u], mate[v]
                trial = list(mate)
                for x in (u, v, a, b):
                    trial[x] = -1
                alive = [True] * g.n
                alive[u] = alive[v] = False
                res = _augment_from(adj, trial, a, alive)
            ok[u][v] = ok[v][u] = res
    return ok
