"""Deterministic graph collections used by the tests, the acceptance suite and the CLI."""

from __future__ import annotations

import random
from itertools import combinations

from . import forge
from .canon import canonical_form
from .families import generate_family
from .graph import MultiGraph, cycle_graph, is_claw_free
from .matching import is_matching_covered
from .named import complete_bipartite, graph as named_graph, triangle_replace


def prism_graph(k: int) -> MultiGraph:
    """C_k x K_2: rims 0..k-1 and k..2k-1, rungs i-(i+k)."""
    edges = []
    for i in range(k):
        edges += [(i, (i + 1) % k), (k + i, k + (i + 1) % k), (i, k + i)]
    return MultiGraph(2 * k, tuple(sorted((min(a, b), max(a, b)) for a, b in edges)))


def moebius_ladder(k: int) -> MultiGraph:
    """Cycle on ``2k`` vertices plus the ``k`` long diagonals (k=4 gives the Wagner graph)."""
    n = 2 * k
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    edges |= {(i, i + k) for i in range(k)}
    return MultiGraph(n, tuple(sorted(edges)))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, tuple(sorted((min(a, b), max(a, b)) for a, b in outer + spokes + inner)))


def cube() -> MultiGraph:
    return prism_graph(4)


def cubic_bases() -> dict[str, MultiGraph]:
    """Small 3-connected simple cubic graphs."""
    return {
        "K4": named_graph("K4"),
        "prism": named_graph("prism"),
        "K33": complete_bipartite(3, 3),
        "cube": cube(),
        "wagner": moebius_ladder(4),
        "petersen": petersen(),
        "pentagonal_prism": prism_graph(5),
    }


def _ridge_edge(g: MultiGraph, k: int = 0) -> int:
    """The ``k``-th bisimplicial ridge of ``g`` (K4: any edge)."""
    edges = [w.location for w in forge.bisimplicial_edges(g)]
    return edges[k % len(edges)]


def _join_many(base: MultiGraph, other: MultiGraph, times: int) -> MultiGraph:
    g = base
    for _ in range(times):
        g = forge.e_join(g, _ridge_edge(g), other, _ridge_edge(other))
    return g


def cubic_nonminimal_corpus(max_n: int = 30) -> list[tuple[str, MultiGraph]]:
    """Simple cubic claw-free matching covered graphs with removable edges.

    Triangle replacements of the cubic bases, and E-joins of those with K4,
    C6bar and each other at ridges.  Isomorphic repeats are dropped.
    """
    k4, c6 = named_graph("K4"), named_graph("C6bar")
    ej = forge.e_join(k4, 0, k4, 0)
    bricks = {name: triangle_replace(g) for name, g in cubic_bases().items()}
    items: list[tuple[str, MultiGraph]] = []
    for name, g in bricks.items():
        items.append((f"tr({name})", g))
    partners = {"K4": k4, "C6bar": c6, "ejoin(K4,K4)": ej}
    for name, g in bricks.items():
        for pname, p in partners.items():
            items.append((f"ejoin(tr({name}),{pname})", forge.e_join(g, _ridge_edge(g), p, _ridge_edge(p))))
    h1 = bricks["K4"]
    for times in (2, 3, 4):
        items.append((f"tr(K4)+{times}xK4", _join_many(h1, k4, times)))
    for a, b in combinations(sorted(bricks), 2):
        g1, g2 = bricks[a], bricks[b]
        items.append((f"ejoin(tr({a}),tr({b}))", forge.e_join(g1, _ridge_edge(g1), g2, _ridge_edge(g2))))
    items.append(("ejoin(tr(K4),tr(K4))", forge.e_join(h1, _ridge_edge(h1), h1, _ridge_edge(h1, 3))))
    chain = forge.e_join(h1, _ridge_edge(h1), ej, _ridge_edge(ej))
    items.append(("ejoin(tr(K4),ejoin(K4,K4))+C6bar", forge.e_join(chain, _ridge_edge(chain, 5), c6, _ridge_edge(c6))))
    out, seen = [], set()
    for name, g in items:
        if g.n > max_n:
            continue
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        out.append((name, g))
    return out


def named_corpus() -> list[tuple[str, MultiGraph]]:
    out = [(t, named_graph(t)) for t in ("K2", "K4", "C6bar", "K33", "H1", "C4", "C6", "C8", "K4minus", "C6barStar")]
    out += [("cube", cube()), ("wagner", moebius_ladder(4)), ("petersen", petersen())]
    out += [("C5", cycle_graph(5)), ("P4", MultiGraph(4, ((0, 1), (1, 2), (2, 3))))]
    return out


def random_graphs(count: int, max_n: int, seed: int, multi: bool = False, p: float | None = None):
    """Seeded random connected graphs on 4..max_n vertices (parallel edges if ``multi``).

    Edge density is drawn from [0.3, 0.8] per graph unless ``p`` is given.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        p_edge = p if p is not None else rng.uniform(0.3, 0.8)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p_edge]
        if multi and edges:
            edges += [rng.choice(edges) for _ in range(rng.randint(1, 3))]
        g = MultiGraph(n, tuple(edges))
        if g.is_connected():
            out.append(g)
    return out


def mixed_corpus(max_n: int = 10, seed: int = 2024, random_count: int = 60) -> list[tuple[str, MultiGraph]]:
    """Named graphs, family members and seeded random graphs, at most ``max_n`` vertices."""
    items = [(name, g) for name, g in named_corpus() if g.n <= max_n]
    for fam in ("expansionsOfF",):
        for i, m in enumerate(generate_family(fam, max_n)):
            items.append((f"{fam}[{i}]", m.graph))
    for i, g in enumerate(random_graphs(random_count, max_n, seed)):
        items.append((f"random[{i}]", g))
    for i, g in enumerate(random_graphs(random_count // 3, min(max_n, 8), seed + 1, multi=True)):
        items.append((f"multi[{i}]", g))
    return items


def matching_covered_corpus(max_n: int = 10, seed: int = 2024) -> list[tuple[str, MultiGraph]]:
    """The matching covered members of :func:`mixed_corpus`."""
    return [(n, g) for n, g in mixed_corpus(max_n, seed, random_count=150) if is_matching_covered(g)]


def claw_free_mc_corpus(max_n: int = 10, seed: int = 2024) -> list[tuple[str, MultiGraph]]:
    return [(n, g) for n, g in matching_covered_corpus(max_n, seed) if is_claw_free(g)]
