"""Canonical forms by colour refinement plus individualisation search.

The search explores an individualise/refine tree, keeps only branches whose
refinement traces tie with the best seen so far, and skips children that
lie in one orbit of the automorphisms discovered at leaves.  Edge
multiplicities are part of the refinement signatures, so the multigraph form
distinguishes parallel edges and the simple form ignores them.
"""

from __future__ import annotations

import hashlib

from .graph import MultiGraph


def _weighted_adj(g: MultiGraph) -> list[list[tuple[int, int]]]:
    nb: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), k in g.multiplicity.items():
        nb[u].append((v, k))
        nb[v].append((u, k))
    return nb


def _refine(nb, colors: list[int]) -> tuple[list[int], tuple]:
    k = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], mult) for w, mult in nb[v])))
            for v in range(len(colors))
        ]
        counts: dict = {}
        for s in sigs:
            counts[s] = counts.get(s, 0) + 1
        uniq = sorted(counts)
        rank = {s: i for i, s in enumerate(uniq)}
        new = [rank[s] for s in sigs]
        if len(uniq) == k:
            return new, tuple((s, counts[s]) for s in uniq)
        colors, k = new, len(uniq)


def _individualize(colors: list[int], v: int) -> list[int]:
    keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(keys)))}
    return [rank[s] for s in keys]


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


class _Orbits:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(g: MultiGraph) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is canonical."""
    n = g.n
    if n == 0:
        return []
    nb = _weighted_adj(g)
    edge_list = sorted(g.multiplicity.items())

    def certificate(lab):
        return tuple(
            sorted(
                ((min(lab[u], lab[v]), max(lab[u], lab[v])), k)
                for (u, v), k in edge_list
            )
        )

    best_traces: list = []
    best = {"cert": None, "lab": None}
    autos: list[list[int]] = []

    def search(colors, trace, depth, path):
        if len(best_traces) <= depth:
            best_traces.append(trace)
        elif trace < best_traces[depth]:
            return
        elif trace > best_traces[depth]:
            del best_traces[depth:]
            best_traces.append(trace)
            best["cert"] = best["lab"] = None
        cell = _target_cell(colors)
        if cell is None:
            cert = certificate(colors)
            if best["cert"] is None or cert > best["cert"]:
                best["cert"], best["lab"] = cert, colors
            elif cert == best["cert"]:
                inv = [0] * n
                for v, c in enumerate(best["lab"]):
                    inv[c] = v
                autos.append([inv[colors[v]] for v in range(n)])
            return
        done: list[int] = []
        for v in cell:
            if done:
                orb = _Orbits(n)
                for a in autos:
                    if all(a[p] == p for p in path):
                        for x in range(n):
                            orb.union(x, a[x])
                rv = orb.find(v)
                if any(orb.find(d) == rv for d in done):
                    continue
            done.append(v)
            child, tr = _refine(nb, _individualize(colors, v))
            search(child, tr, depth + 1, path + [v])

    start, tr = _refine(nb, [0] * n)
    search(start, tr, 0, [])
    return list(best["lab"])


def canonical_graph(g: MultiGraph) -> MultiGraph:
    h = g.relabel(canonical_labeling(g))
    return MultiGraph(h.n, tuple(sorted(h.edges)))


def canonical_form(g: MultiGraph) -> bytes:
    h = canonical_graph(g)
    body = ",".join(f"{u}-{v}" for u, v in h.edges)
    return f"mg:{h.n}:{body}".encode("ascii")


def simple_canonical_form(g: MultiGraph) -> bytes:
    return canonical_form(g.underlying_simple())


def is_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def isomorphism(g1: MultiGraph, g2: MultiGraph) -> list[int] | None:
    """A vertex map ``phi`` with ``g1.relabel(phi)`` equal to ``g2`` up to edge order."""
    if not is_isomorphic(g1, g2):
        return None
    p1, p2 = canonical_labeling(g1), canonical_labeling(g2)
    inv2 = [0] * g2.n
    for v, c in enumerate(p2):
        inv2[c] = v
    return [inv2[p1[v]] for v in range(g1.n)]


def digest(g: MultiGraph) -> str:
    return hashlib.sha256(canonical_form(g)).hexdigest()
