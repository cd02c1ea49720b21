"""Generators for the ridge-replacement family, its compound closure and expansions.

Members are produced in order of vertex count.  Up to ``exhaustive_threshold``
vertices every applicable operation is tried and isomorphic duplicates are
dropped by canonical form, so the output is complete up to isomorphism.
Between the threshold and ``max_n`` recipes are sampled with a seeded RNG.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from . import forge
from . import recipe as R
from .canon import canonical_form
from .graph import GraphError, MultiGraph, ridges

FAMILIES = ("G", "F", "expansionsOfF")
EXHAUSTIVE_THRESHOLD = 12
DEFAULT_SAMPLES = 200


@dataclass(frozen=True)
class Member:
    recipe: R.Recipe
    graph: MultiGraph

    @property
    def n(self) -> int:
        return self.graph.n



def _vertex_anchors(g: MultiGraph) -> list[tuple[int, tuple[int, ...]]]:
    """(vertex, prime clique) for every bisimplicial vertex and both clique choices."""
    return [(w.location, cl) for w in forge.bisimplicial_vertices(g) for cl in w.cliques]


def _edge_anchors(g: MultiGraph) -> list[tuple[int, int]]:
    return [g.edges[w.location] for w in forge.bisimplicial_edges(g)]


def _replace_moves(m: Member):
    g = m.graph
    for e in ridges(g):
        for gadget in ("k4minus", "c6barstar"):
            for orient in (0, 1):
                yield R.Replace(m.recipe, g.edges[e], gadget, orient)


def _compound_moves(m1: Member, m2: Member, target: int):
    """Compounds of ``m1`` and ``m2`` with exactly ``target`` vertices."""
    g1, g2 = m1.graph, m2.graph
    if g1.n + g2.n + 2 == target:
        for u1, p1 in _vertex_anchors(g1):
            for u2, p2 in _vertex_anchors(g2):
                yield R.VJoin(m1.recipe, m2.recipe, u1, p1, u2, p2)
    if g1.n + g2.n != target:
        return
    va2 = _vertex_anchors(g2)
    for u1, p1 in _vertex_anchors(g1):
        for u2, p2 in va2:
            yield R.VAttach(m1.recipe, m2.recipe, u1, p1, u2, p2)
    ea2 = _edge_anchors(g2)
    for a1, b1 in _edge_anchors(g1):
        for a2, b2 in ea2:
            yield R.EJoin(m1.recipe, m2.recipe, (a1, b1), (a2, b2))
            yield R.EJoin(m1.recipe, m2.recipe, (a1, b1), (b2, a2))
        for u2, p2 in va2:
            yield R.EVAttach(m1.recipe, m2.recipe, (a1, b1), u2, p2)
            yield R.EVAttach(m1.recipe, m2.recipe, (b1, a1), u2, p2)


def _expansion_moves(m: Member, bisub_len: int = 3, expand_len: int = 2):
    g = m.graph
    for e in ridges(g):
        yield R.Bisub(m.recipe, g.edges[e], bisub_len)
    for u, p in _vertex_anchors(g):
        yield R.Expand(m.recipe, u, p, expand_len)


class _Pool:
    """Members grouped by vertex count with a canonical-form dedup set."""

    def __init__(self):
        self.seen: set[bytes] = set()
        self.by_n: dict[int, list[Member]] = {}

    def offer(self, r: R.Recipe, operands: list[MultiGraph]) -> Member | None:
        try:
            g = R.apply(r, operands)
        except GraphError:
            return None
        key = canonical_form(g)
        if key in self.seen:
            return None
        self.seen.add(key)
        m = Member(r, g)
        self.by_n.setdefault(g.n, []).append(m)
        return m

    def at(self, n: int) -> list[Member]:
        return self.by_n.get(n, [])

    def upto(self, n: int) -> list[Member]:
        return [m for k in sorted(self.by_n) if k <= n for m in self.by_n[k]]


def _leaves(pool: _Pool) -> None:
    pool.offer(R.K4, [])
    pool.offer(R.C6BAR, [])


def _grow_g(pool: _Pool, top: int) -> None:
    for n in range(4, top + 1, 2):
        for src in (n - 2, n - 4):
            for m in list(pool.at(src)):
                for r in _replace_moves(m):
                    if m.n + (2 if r.gadget == "k4minus" else 4) == n:
                        pool.offer(r, [m.graph])


def _grow_f(pool: _Pool, top: int) -> None:
    """Add compounds level by level; ``pool`` already holds the G members."""
    for n in range(8, top + 1, 2):
        known = pool.upto(n - 4)
        for m1 in known:
            for m2 in known:
                if m1.n + m2.n > n:
                    continue
                for r in _compound_moves(m1, m2, n):
                    pool.offer(r, [m1.graph, m2.graph])


def _grow_exp(pool: _Pool, top: int) -> None:
    for n in range(6, top + 1, 2):
        for m in list(pool.at(n - 2)):
            for r in _expansion_moves(m):
                pool.offer(r, [m.graph])


def _exhaustive(family: str, top: int) -> _Pool:
    g_pool = _Pool()
    _leaves(g_pool)
    _grow_g(g_pool, top)
    if family == "G":
        return g_pool
    _grow_f(g_pool, top)
    if family == "F":
        return g_pool
    _grow_exp(g_pool, top)
    return g_pool


def _random_move(rng: random.Random, family: str, members: list[Member]):
    """One random recipe step over ``members``; returns (recipe, operands) or None."""
    kinds = ["replace"]
    if family != "G":
        kinds += ["vjoin", "vattach", "ejoin", "evattach"]
    if family == "expansionsOfF":
        kinds += ["bisub", "expand"]
    kind = rng.choice(kinds)
    m1 = rng.choice(members)
    g1 = m1.graph
    if kind == "replace":
        # ridge replacement is only a G-step; keep it on unexpanded bases
        if not _in_g(m1.recipe):
            return None
        rs = ridges(g1)
        if not rs:
            return None
        e = g1.edges[rng.choice(rs)]
        return R.Replace(m1.recipe, e, rng.choice(("k4minus", "c6barstar")), rng.randint(0, 1)), [g1]
    if kind in ("bisub", "expand"):
        if kind == "bisub":
            rs = ridges(g1)
            if not rs:
                return None
            e = g1.edges[rng.choice(rs)]
            return R.Bisub(m1.recipe, e, rng.choice((3, 3, 5))), [g1]
        va = _vertex_anchors(g1)
        if not va:
            return None
        u, p = rng.choice(va)
        return R.Expand(m1.recipe, u, p, rng.choice((2, 2, 4))), [g1]
    # compounds take operands that are themselves in F
    pool_f = [m for m in members if _in_f(m.recipe)]
    if not _in_f(m1.recipe):
        return None
    m2 = rng.choice(pool_f)
    g2 = m2.graph
    if kind in ("vjoin", "vattach"):
        va1, va2 = _vertex_anchors(g1), _vertex_anchors(g2)
        if not va1 or not va2:
            return None
        (u1, p1), (u2, p2) = rng.choice(va1), rng.choice(va2)
        cls = R.VJoin if kind == "vjoin" else R.VAttach
        return cls(m1.recipe, m2.recipe, u1, p1, u2, p2), [g1, g2]
    ea1 = _edge_anchors(g1)
    if not ea1:
        return None
    e1 = rng.choice(ea1)
    if rng.random() < 0.5:
        e1 = e1[::-1]
    if kind == "ejoin":
        ea2 = _edge_anchors(g2)
        if not ea2:
            return None
        e2 = rng.choice(ea2)
        if rng.random() < 0.5:
            e2 = e2[::-1]
        return R.EJoin(m1.recipe, m2.recipe, e1, e2), [g1, g2]
    va2 = _vertex_anchors(g2)
    if not va2:
        return None
    u2, p2 = rng.choice(va2)
    return R.EVAttach(m1.recipe, m2.recipe, e1, u2, p2), [g1, g2]


def _in_g(r: R.Recipe) -> bool:
    return all(h in ("k4", "c6bar", "replace") for h in R.ops(r))


def _in_f(r: R.Recipe) -> bool:
    return not any(h in ("bisub", "expand") for h in R.ops(r))


def generate_family(
    family: str,
    max_n: int,
    seed: int = 0,
    exhaustive_threshold: int = EXHAUSTIVE_THRESHOLD,
    samples: int = DEFAULT_SAMPLES,
    max_attempts: int | None = None,
) -> Iterator[Member]:
    """Members of ``family`` with at most ``max_n`` vertices, without isomorphic repeats.

    Everything up to ``min(max_n, exhaustive_threshold)`` vertices comes first,
    ordered by vertex count then discovery.  Above the threshold at most
    ``samples`` further members are drawn by random recipe steps under
    ``random.Random(seed)``.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if max_n < 4:
        raise ValueError("max_n must be at least 4")
    top = min(max_n, exhaustive_threshold)
    pool = _exhaustive(family, top)
    base = pool.upto(top)
    yield from base
    if max_n <= top or samples <= 0:
        return
    rng = random.Random(seed)
    members = list(base)
    produced = 0
    attempts = 0
    limit = max_attempts if max_attempts is not None else 200 * samples
    while produced < samples and attempts < limit:
        attempts += 1
        move = _random_move(rng, family, members)
        if move is None:
            continue
        r, operands = move
        if _predicted_order(r, operands) > max_n:
            continue
        m = pool.offer(r, operands)
        if m is None:
            continue
        members.append(m)
        if m.n > top:
            produced += 1
            yield m


def _predicted_order(r: R.Recipe, operands: list[MultiGraph]) -> int:
    ns = [g.n for g in operands]
    if isinstance(r, R.Replace):
        return ns[0] + (2 if r.gadget == "k4minus" else 4)
    if isinstance(r, R.VJoin):
        return ns[0] + ns[1] + 2
    if isinstance(r, (R.VAttach, R.EJoin, R.EVAttach)):
        return ns[0] + ns[1]
    if isinstance(r, R.Bisub):
        return ns[0] + r.length - 1
    if isinstance(r, R.Expand):
        return ns[0] + r.length
    return 0


def sample_recipes(
    family: str, max_n: int, seed: int = 0, count: int = DEFAULT_SAMPLES, base_n: int = 8
) -> Iterator[Member]:
    """``count`` randomly built members, repeats up to isomorphism allowed.

    Starts from the exhaustive list up to ``base_n`` vertices and keeps
    applying random steps.  Unlike :func:`generate_family` this does not stop
    when the isomorphism classes below ``max_n`` run out, so it suits checks
    that want many independent recipes.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    rng = random.Random(seed)
    members = _exhaustive(family, min(base_n, max_n)).upto(max_n)
    produced = 0
    attempts = 0
    while produced < count and attempts < 1000 * count:
        attempts += 1
        move = _random_move(rng, family, members)
        if move is None:
            continue
        r, operands = move
        if _predicted_order(r, operands) > max_n:
            continue
        try:
            g = R.apply(r, operands)
        except GraphError:
            continue
        m = Member(r, g)
        members.append(m)
        produced += 1
        yield m
