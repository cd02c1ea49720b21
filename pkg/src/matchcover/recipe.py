"""Construction recipes and their s-expression text form.

Grammar (tokens separated by single spaces, vertex ids refer to the
evaluated numbering of the operand they belong to)::

    recipe   := "(k4)" | "(c6bar)"
              | "(replace " recipe " ridge=" E " gadget=" GADGET " orient=" BIT ")"
              | "(vjoin " recipe " " recipe " u1=" V " prime1=" VS " u2=" V " prime2=" VS ")"
              | "(vattach " recipe " " recipe " u1=" V " prime1=" VS " u2=" V " prime2=" VS ")"
              | "(ejoin " recipe " " recipe " e1=" E " e2=" E ")"
              | "(evattach " recipe " " recipe " e1=" E " u2=" V " prime2=" VS ")"
              | "(bisub " recipe " e=" E " len=" INT ")"
              | "(expand " recipe " u=" V " prime=" VS " len=" INT ")"
    E        := V "-" V          (ordered: first end is a1 / the replaced u1)
    VS       := V ("." V)*       (sorted clique)
    GADGET   := "k4minus" | "c6barstar"

``ejoin`` adds the edges a1a2 and b1b2 for ``e1=a1-b1 e2=a2-b2``;
``evattach`` identifies a1 with u2' and joins b1 to u2''; ``replace`` glues
the gadget's first degree-2 vertex to the first end when ``orient=0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import forge
from .graph import GraphError, MultiGraph
from .named import graph as named_graph


class RecipeError(GraphError):
    pass


@dataclass(frozen=True)
class Leaf:
    name: str  # "k4" | "c6bar"


@dataclass(frozen=True)
class Replace:
    base: Recipe
    ridge: tuple[int, int]
    gadget: str
    orient: int = 0


@dataclass(frozen=True)
class VJoin:
    left: Recipe
    right: Recipe
    u1: int
    prime1: tuple[int, ...]
    u2: int
    prime2: tuple[int, ...]


@dataclass(frozen=True)
class VAttach:
    left: Recipe
    right: Recipe
    u1: int
    prime1: tuple[int, ...]
    u2: int
    prime2: tuple[int, ...]


@dataclass(frozen=True)
class EJoin:
    left: Recipe
    right: Recipe
    e1: tuple[int, int]
    e2: tuple[int, int]


@dataclass(frozen=True)
class EVAttach:
    left: Recipe
    right: Recipe
    e1: tuple[int, int]
    u2: int
    prime2: tuple[int, ...]


@dataclass(frozen=True)
class Bisub:
    base: Recipe
    e: tuple[int, int]
    length: int


@dataclass(frozen=True)
class Expand:
    base: Recipe
    u: int
    prime: tuple[int, ...]
    length: int


Recipe = Union[Leaf, Replace, VJoin, VAttach, EJoin, EVAttach, Bisub, Expand]

K4 = Leaf("k4")
C6BAR = Leaf("c6bar")


def _edge(g: MultiGraph, pair: tuple[int, int]) -> tuple[int, int]:
    """Edge id and orientation (0 if stored as given) for an ordered pair."""
    a, b = pair
    ids = g.edge_ids_between(a, b)
    if not ids:
        raise RecipeError(f"no edge {a}-{b}")
    return ids[0], 0 if g.edges[ids[0]] == (a, b) else 1


def evaluate(r: Recipe) -> MultiGraph:
    try:
        return _eval(r)
    except RecursionError:
        raise RecipeError("recipe nested too deeply") from None
    except RecipeError:
        raise
    except GraphError as exc:
        raise RecipeError(str(exc)) from exc


def _eval(r: Recipe) -> MultiGraph:
    return apply(r, [_eval(c) for c in children(r)])


def apply(r: Recipe, operands: list[MultiGraph]) -> MultiGraph:
    """Evaluate the top node of ``r`` on already evaluated children."""
    if isinstance(r, Leaf):
        if r.name == "k4":
            return named_graph("K4")
        if r.name == "c6bar":
            return named_graph("C6bar")
        raise RecipeError(f"unknown leaf {r.name!r}")
    if isinstance(r, Replace):
        g = operands[0]
        e, o = _edge(g, r.ridge)
        return forge.replace_ridge(g, e, r.gadget, o ^ r.orient)
    if isinstance(r, (VJoin, VAttach)):
        op = forge.v_join if isinstance(r, VJoin) else forge.v_attach
        g1, g2 = operands
        return op(g1, r.u1, g2, r.u2, r.prime1, r.prime2)
    if isinstance(r, EJoin):
        g1, g2 = operands
        e1, o1 = _edge(g1, r.e1)
        if o1:
            # e_join reads a1b1 from the stored order; flip e2 instead
            e2, o2 = _edge(g2, r.e2[::-1])
        else:
            e2, o2 = _edge(g2, r.e2)
        return forge.e_join(g1, e1, g2, e2, o2)
    if isinstance(r, EVAttach):
        g1, g2 = operands
        e1, o1 = _edge(g1, r.e1)
        return forge.ev_attach(g1, e1, g2, r.u2, o1, r.prime2)
    if isinstance(r, Bisub):
        g = operands[0]
        e, _ = _edge(g, r.e)
        return forge.bisubdivide(g, e, r.length)
    if isinstance(r, Expand):
        return forge.expand_vertex(operands[0], r.u, r.prime, r.length)
    raise RecipeError(f"not a recipe: {r!r}")


def size(r: Recipe) -> int:
    """Number of operation nodes."""
    if isinstance(r, Leaf):
        return 1
    return 1 + sum(size(c) for c in children(r))


def children(r: Recipe) -> tuple:
    if isinstance(r, Leaf):
        return ()
    if isinstance(r, (Replace, Bisub, Expand)):
        return (r.base,)
    return (r.left, r.right)


def ops(r: Recipe) -> list[str]:
    """Head symbols in prefix order."""
    return [head(r)] + [h for c in children(r) for h in ops(c)]


_HEADS = {
    Replace: "replace", VJoin: "vjoin", VAttach: "vattach", EJoin: "ejoin",
    EVAttach: "evattach", Bisub: "bisub", Expand: "expand",
}


def head(r: Recipe) -> str:
    return r.name if isinstance(r, Leaf) else _HEADS[type(r)]


def _e(p):
    return f"{p[0]}-{p[1]}"


def _vs(vs):
    return ".".join(str(v) for v in sorted(vs))


def to_sexpr(r: Recipe) -> str:
    if isinstance(r, Leaf):
        return f"({r.name})"
    if isinstance(r, Replace):
        return f"(replace {to_sexpr(r.base)} ridge={_e(r.ridge)} gadget={r.gadget} orient={r.orient})"
    if isinstance(r, (VJoin, VAttach)):
        return (
            f"({head(r)} {to_sexpr(r.left)} {to_sexpr(r.right)} u1={r.u1} prime1={_vs(r.prime1)}"
            f" u2={r.u2} prime2={_vs(r.prime2)})"
        )
    if isinstance(r, EJoin):
        return f"(ejoin {to_sexpr(r.left)} {to_sexpr(r.right)} e1={_e(r.e1)} e2={_e(r.e2)})"
    if isinstance(r, EVAttach):
        return (
            f"(evattach {to_sexpr(r.left)} {to_sexpr(r.right)} e1={_e(r.e1)}"
            f" u2={r.u2} prime2={_vs(r.prime2)})"
        )
    if isinstance(r, Bisub):
        return f"(bisub {to_sexpr(r.base)} e={_e(r.e)} len={r.length})"
    if isinstance(r, Expand):
        return f"(expand {to_sexpr(r.base)} u={r.u} prime={_vs(r.prime)} len={r.length})"
    raise RecipeError(f"not a recipe: {r!r}")


_TOKEN = re.compile(r"\(|\)|[^\s()]+")

_ARGS = {
    "replace": (1, ("ridge", "gadget", "orient")),
    "vjoin": (2, ("u1", "prime1", "u2", "prime2")),
    "vattach": (2, ("u1", "prime1", "u2", "prime2")),
    "ejoin": (2, ("e1", "e2")),
    "evattach": (2, ("e1", "u2", "prime2")),
    "bisub": (1, ("e", "len")),
    "expand": (1, ("u", "prime", "len")),
}


def parse_sexpr(text: str) -> Recipe:
    tokens = _TOKEN.findall(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            got = tokens[pos] if pos < len(tokens) else "end of input"
            raise RecipeError(f"expected {tok!r}, got {got!r}")
        pos += 1

    def parse():
        nonlocal pos
        expect("(")
        if pos >= len(tokens):
            raise RecipeError("unexpected end of input")
        name = tokens[pos]
        pos += 1
        if name in ("k4", "c6bar"):
            expect(")")
            return Leaf(name)
        if name not in _ARGS:
            raise RecipeError(f"unknown operation {name!r}")
        arity, keys = _ARGS[name]
        subs = [parse() for _ in range(arity)]
        kv = {}
        for key in keys:
            if pos >= len(tokens) or "=" not in tokens[pos]:
                raise RecipeError(f"{name}: missing {key}=")
            k, _, v = tokens[pos].partition("=")
            if k != key:
                raise RecipeError(f"{name}: expected {key}=, got {k}=")
            kv[k] = v
            pos += 1
        expect(")")
        return _build(name, subs, kv)

    r = parse()
    if pos != len(tokens):
        raise RecipeError(f"trailing tokens: {' '.join(tokens[pos:])}")
    return r


def _pe(s):
    a, sep, b = s.partition("-")
    if not sep:
        raise RecipeError(f"bad edge {s!r}")
    return int(a), int(b)


def _pvs(s):
    return tuple(sorted(int(x) for x in s.split(".")))


def _build(name, subs, kv):
    try:
        if name == "replace":
            if kv["gadget"] not in forge.GADGETS:
                raise RecipeError(f"unknown gadget {kv['gadget']!r}")
            return Replace(subs[0], _pe(kv["ridge"]), kv["gadget"], int(kv["orient"]))
        if name in ("vjoin", "vattach"):
            cls = VJoin if name == "vjoin" else VAttach
            return cls(subs[0], subs[1], int(kv["u1"]), _pvs(kv["prime1"]), int(kv["u2"]), _pvs(kv["prime2"]))
        if name == "ejoin":
            return EJoin(subs[0], subs[1], _pe(kv["e1"]), _pe(kv["e2"]))
        if name == "evattach":
            return EVAttach(subs[0], subs[1], _pe(kv["e1"]), int(kv["u2"]), _pvs(kv["prime2"]))
        if name == "bisub":
            return Bisub(subs[0], _pe(kv["e"]), int(kv["len"]))
        return Expand(subs[0], int(kv["u"]), _pvs(kv["prime"]), int(kv["len"]))
    except ValueError as exc:
        raise RecipeError(f"{name}: {exc}") from None
