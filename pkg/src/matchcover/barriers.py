"""Barriers, factor-criticality and bicriticality.

A barrier of a graph with a perfect matching is a nonempty vertex set ``B``
whose deletion leaves exactly ``|B|`` odd components.  Exhaustive searches
here are exponential and refuse graphs above ``ceiling`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import GraphError, MultiGraph
from .matching import has_perfect_matching, is_matching_covered, pair_deletion_table

DEFAULT_CEILING = 16


class NoPerfectMatching(GraphError):
    pass


class TooLarge(GraphError):
    pass


@dataclass(frozen=True)
class Barrier:
    vertices: tuple[int, ...]
    odd_components: tuple[tuple[int, ...], ...]
    even_components: tuple[tuple[int, ...], ...] = ()
    maximal: bool | None = None

    def __len__(self) -> int:
        return len(self.vertices)


def _require_pm(g: MultiGraph) -> None:
    if not has_perfect_matching(g):
        raise NoPerfectMatching(f"{g} has no perfect matching")


def _guard(g: MultiGraph, ceiling: int) -> None:
    if g.n > ceiling:
        raise TooLarge(f"exhaustive barrier search refused: n={g.n} > ceiling={ceiling}")


def _make(g: MultiGraph, b: tuple[int, ...], maximal=None) -> Barrier | None:
    comps = g.components(b)
    odd = tuple(tuple(c) for c in comps if len(c) % 2)
    if len(odd) != len(b):
        return None
    even = tuple(tuple(c) for c in comps if len(c) % 2 == 0)
    return Barrier(b, odd, even, maximal)


def is_barrier(g: MultiGraph, b: Iterable[int]) -> Barrier | None:
    """The barrier certificate for ``b``, or None if ``o(G-b) != |b|``."""
    bt = tuple(sorted(set(b)))
    if not bt:
        raise GraphError("barriers are nonempty")
    for v in bt:
        g.check_vertex(v)
    _require_pm(g)
    return _make(g, bt)


def all_barriers(g: MultiGraph, max_size: int | None = None, ceiling: int = DEFAULT_CEILING) -> list[Barrier]:
    """Every barrier with at most ``max_size`` vertices, by size then lexicographically.

    The ``maximal`` flag is filled in only when the scan covers all sizes.
    """
    _guard(g, ceiling)
    _require_pm(g)
    top = g.n if max_size is None else min(max_size, g.n)
    found = []
    for k in range(1, top + 1):
        for b in combinations(range(g.n), k):
            bar = _make(g, b)
            if bar is not None:
                found.append(bar)
    if top < g.n:
        return found
    sets = [frozenset(b.vertices) for b in found]
    return [
        Barrier(b.vertices, b.odd_components, b.even_components, not any(s < t for t in sets))
        for b, s in zip(found, sets)
    ]


def find_2_barrier(g: MultiGraph) -> Barrier | None:
    """Lexicographically least 2-barrier, or None."""
    _require_pm(g)
    for b in combinations(range(g.n), 2):
        bar = _make(g, b)
        if bar is not None:
            return bar
    return None


def barrier_classes(g: MultiGraph) -> list[tuple[int, ...]]:
    """Maximal barriers of a matching covered graph.

    In a matching covered graph ``u`` and ``v`` lie in a common maximal barrier
    exactly when ``G - u - v`` has no perfect matching, and the maximal
    barriers partition the vertex set.
    """
    ok = pair_deletion_table(g)
    if ok is None:
        raise NoPerfectMatching(f"{g} has no perfect matching")
    seen: set[int] = set()
    classes = []
    for u in range(g.n):
        if u in seen:
            continue
        cls = (u,) + tuple(v for v in range(u + 1, g.n) if not ok[u][v])
        seen.update(cls)
        classes.append(cls)
    return classes


def maximal_barrier_containing(g: MultiGraph, b: Iterable[int], ceiling: int = DEFAULT_CEILING) -> Barrier:
    bt = tuple(sorted(set(b)))
    if is_barrier(g, bt) is None:
        raise GraphError(f"{bt} is not a barrier")
    if is_matching_covered(g):
        for cls in barrier_classes(g):
            if bt[0] in cls:
                bar = _make(g, cls, maximal=True)
                if bar is None or not set(bt) <= set(cls):
                    raise AssertionError("barrier classes violated the partition property")
                return bar
    # not matching covered: largest superset first, lexicographic among equals
    _guard(g, ceiling)
    rest = [v for v in range(g.n) if v not in bt]
    for k in range(len(rest), -1, -1):
        for extra in combinations(rest, k):
            bar = _make(g, tuple(sorted(bt + extra)), maximal=True)
            if bar is not None:
                return bar
    raise AssertionError("unreachable: b itself is a barrier")


def is_factor_critical(g: MultiGraph) -> bool:
    if g.n == 0:
        return False
    return all(has_perfect_matching(g, (v,)) for v in range(g.n))


def is_bicritical(g: MultiGraph) -> bool:
    if g.n < 4:
        raise GraphError("bicriticality needs at least four vertices")
    ok = pair_deletion_table(g)
    if ok is None:
        return False
    return all(ok[u][v] for u, v in combinations(range(g.n), 2))
