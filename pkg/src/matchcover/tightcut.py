"""Tight cuts and the tight cut decomposition into bricks and braces."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .barriers import Barrier, TooLarge, barrier_classes
from .canon import canonical_form, simple_canonical_form
from .graph import Cut, GraphError, MultiGraph, contract, edge_cut
from .matching import has_perfect_matching, pair_deletion_table, require_matching_covered
from .named import graph as named_graph

SCAN_THRESHOLD = 10
BIPARTITE_CEILING = 16


def is_tight_cut(g: MultiGraph, c: Cut) -> bool:
    """True iff every perfect matching uses exactly one edge of ``c``.

    Every perfect matching meets ``c`` in a number of edges with the parity of
    ``|X|``.  For odd ``|X|`` the cut fails to be tight exactly when three
    pairwise disjoint cut edges extend to a perfect matching.
    """
    require_matching_covered(g)
    if len(c.x_side) % 2 == 0:
        return False
    ends = [g.edges[i] for i in c.boundary]
    for a, b, d in combinations(ends, 3):
        vs = {*a, *b, *d}
        if len(vs) == 6 and has_perfect_matching(g, vs):
            return False
    return True


def barrier_cut(g: MultiGraph, barrier: Barrier, component_index: int) -> Cut:
    if not 0 <= component_index < len(barrier.odd_components):
        raise GraphError(f"component index {component_index} out of range")
    return edge_cut(g, barrier.odd_components[component_index])


def _least(cuts):
    cuts = [c for c in cuts if not c.trivial]
    return min(cuts, key=Cut.shore) if cuts else None


def _barrier_stage(g, ok):
    if all(ok[u][v] for u, v in combinations(range(g.n), 2)):
        return None  # bicritical: only trivial barriers
    cuts = []
    for cls in barrier_classes(g):
        if len(cls) < 2:
            continue
        for comp in g.components(cls):
            if len(comp) >= 3:
                cuts.append(edge_cut(g, comp))
    return _least(cuts)


def _separation_stage(g):
    cuts = []
    for u, v in g.two_vertex_cuts():
        for comp in g.components((u, v)):
            for end in (u, v):
                c = edge_cut(g, comp + [end])
                if not c.trivial and is_tight_cut(g, c):
                    cuts.append(c)
    return _least(cuts)


def _bipartite_stage(g, coloring, ceiling):
    sides = [[v for v in range(g.n) if coloring[v] == k] for k in (0, 1)]
    if min(len(s) for s in sides) > ceiling:
        raise TooLarge(f"bipartite tight cut scan refused: colour classes exceed {ceiling}")
    cuts = []
    for side in sides:
        for k in range(1, len(side)):
            for s in combinations(side, k):
                nb = set().union(*(g.adj[v] for v in s))
                if len(nb) == k + 1:
                    x = set(s) | nb
                    if 3 <= len(x) <= g.n - 2:
                        c = edge_cut(g, x)
                        if is_tight_cut(g, c):
                            cuts.append(c)
    return _least(cuts)


def _scan_stage(g):
    rest = list(range(1, g.n))
    best = None
    for k in range(2, g.n - 2, 2):
        for extra in combinations(rest, k):
            c = edge_cut(g, (0,) + extra)
            if (best is None or c.shore() < best.shore()) and is_tight_cut(g, c):
                best = c
    return best


def find_nontrivial_tight_cut(
    g: MultiGraph, scan_threshold: int = SCAN_THRESHOLD, bipartite_ceiling: int = BIPARTITE_CEILING
) -> Cut | None:
    """A nontrivial tight cut of a matching covered graph, or None.

    Stages, first hit wins, least shore (side holding vertex 0) within a stage:

    1. cuts around nontrivial components of maximal barriers;
    2. for bicritical graphs, 2-separation cuts ``L + u`` validated as tight;
    3. bipartite graphs: sets ``S + N(S)`` with ``|N(S)| = |S| + 1`` inside one
       colour class; other graphs with ``n <= scan_threshold``: every odd
       vertex set.
    """
    require_matching_covered(g)
    if g.n < 4:
        return None
    ok = pair_deletion_table(g)
    cut = _barrier_stage(g, ok)
    if cut is not None:
        return cut
    coloring = g.two_coloring()
    if coloring is None:
        cut = _separation_stage(g)
        if cut is not None:
            return cut
        return _scan_stage(g) if g.n <= scan_threshold else None
    return _bipartite_stage(g, coloring, bipartite_ceiling)


@lru_cache(maxsize=None)
def _special_forms() -> frozenset[bytes]:
    return frozenset(canonical_form(named_graph(t)) for t in ("K4", "C6bar"))


def is_k4_or_c6bar(g: MultiGraph) -> bool:
    return simple_canonical_form(g) in _special_forms()


@dataclass
class DecompNode:
    graph: MultiGraph
    cut: Cut | None = None
    children: tuple[DecompNode, ...] = ()
    kind: str | None = None  # "brick" / "brace" on leaves

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[DecompNode]:
        if self.is_leaf:
            return [self]
        return [lf for c in self.children for lf in c.leaves()]


@dataclass
class DecompositionTree:
    root: DecompNode
    permutation: list[int] | None = None
    leaves: list[DecompNode] = field(init=False)
    b_star: int = field(init=False)
    leaf_orders: list[int] = field(init=False)

    def __post_init__(self):
        self.leaves = self.root.leaves()
        special = [
            lf for lf in self.leaves if lf.kind == "brick" and not is_k4_or_c6bar(lf.graph)
        ]
        self.b_star = len(special)
        self.leaf_orders = sorted(lf.graph.n for lf in special)

    def bricks(self) -> list[MultiGraph]:
        return [lf.graph for lf in self.leaves if lf.kind == "brick"]

    def braces(self) -> list[MultiGraph]:
        return [lf.graph for lf in self.leaves if lf.kind == "brace"]

    def leaf_forms(self) -> list[tuple[str, bytes]]:
        """Sorted (kind, simple canonical form) pairs; comparable across runs."""
        return sorted((lf.kind, simple_canonical_form(lf.graph)) for lf in self.leaves)

    def to_text(self) -> str:
        lines: list[str] = []

        def walk(node, depth):
            pad = "  " * depth
            g = node.graph
            if node.is_leaf:
                lines.append(f"{pad}{node.kind} n={g.n} m={g.m}")
            else:
                shore = ",".join(map(str, node.cut.shore()))
                lines.append(f"{pad}cut n={g.n} m={g.m} X={{{shore}}} |C|={len(node.cut)}")
                for ch in node.children:
                    walk(ch, depth + 1)

        walk(self.root, 0)
        lines.append(f"b_star={self.b_star} leaf_orders={self.leaf_orders}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        def enc(node):
            d = {"n": node.graph.n, "edges": [list(e) for e in node.graph.edges]}
            if node.is_leaf:
                d["class"] = node.kind
            else:
                d["cut"] = {
                    "shore": list(node.cut.shore()),
                    "boundary": list(node.cut.boundary),
                }
                d["children"] = [enc(c) for c in node.children]
            return d

        return {
            "root": enc(self.root),
            "b_star": self.b_star,
            "leaf_orders": self.leaf_orders,
            "leaves": [
                {"class": lf.kind, "n": lf.graph.n, "m": lf.graph.m} for lf in self.leaves
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _decompose(g: MultiGraph, scan_threshold: int) -> DecompNode:
    cut = find_nontrivial_tight_cut(g, scan_threshold)
    if cut is None:
        return DecompNode(g, kind="brace" if g.is_bipartite() else "brick")
    kids = []
    for side in (cut.x_side, cut.complement()):
        h = contract(g, side).graph
        require_matching_covered(h)
        kids.append(_decompose(h, scan_threshold))
    return DecompNode(g, cut, tuple(kids))


def decompose(g: MultiGraph, seed: int | None = None, scan_threshold: int = SCAN_THRESHOLD) -> DecompositionTree:
    """Tight cut decomposition.

    With a ``seed`` the vertices are first relabelled by a seeded random
    permutation, which changes every tie-break along the way.
    """
    require_matching_covered(g)
    perm = None
    if seed is not None:
        perm = list(range(g.n))
        random.Random(seed).shuffle(perm)
        g = g.relabel(perm)
    return DecompositionTree(_decompose(g, scan_threshold), perm)


def is_brick_elp(g: MultiGraph) -> bool:
    """3-connected and bicritical."""
    if g.n < 4 or not g.vertex_connectivity_at_least(3):
        return False
    ok = pair_deletion_table(g)
    return ok is not None and all(ok[u][v] for u, v in combinations(range(g.n), 2))


def classify(g: MultiGraph, scan_threshold: int = SCAN_THRESHOLD) -> str:
    """``"brick"``, ``"brace"`` or ``"neither"``."""
    require_matching_covered(g)
    if find_nontrivial_tight_cut(g, scan_threshold) is not None:
        kind = "neither"
    else:
        kind = "brace" if g.is_bipartite() else "brick"
    if (kind == "brick") != is_brick_elp(g) and g.n >= 4:
        raise AssertionError(f"brick test disagrees with 3-connected+bicritical on {g}")
    return kind
