"""Matching covered graphs: perfect matching oracles, removable edges,
tight cut decomposition, and the claw-free minimal families."""

from .graph import Cut, GraphError, MultiGraph, contract, edge_cut, is_claw_free, ridges
from .matching import (
    dependence_classes,
    depends_on,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_admissible,
    is_matching_covered,
    is_minimal,
    removable_edges,
)
from .canon import canonical_form, is_isomorphic, simple_canonical_form
from .named import graph as named_graph, named, triangle_replace
from .tightcut import classify, decompose, find_nontrivial_tight_cut, is_tight_cut
from .recipe import evaluate, parse_sexpr, to_sexpr
from .families import generate_family
from .recognize import cubic_brick_re_count, recognize, verify_thm13

__version__ = "0.1.0"
