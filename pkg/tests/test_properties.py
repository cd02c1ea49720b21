from hypothesis import given, settings
from hypothesis import strategies as st
from conftest import bf_has_pm, bf_matching_covered, bf_removable, nx_isomorphic

from matchcover.canon import canonical_form, is_isomorphic
from matchcover.graph import MultiGraph
from matchcover.matching import has_perfect_matching, is_matching_covered, removable_edges
from matchcover.mgio import format_mg, parse_mg


@st.composite
def multigraphs(draw, max_n=8, max_m=14):
    n = draw(st.integers(2, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m))
    return MultiGraph(n, tuple(edges))


@st.composite
def relabelled(draw):
    g = draw(multigraphs())
    perm = draw(st.permutations(range(g.n)))
    return g, g.relabel(list(perm))


@settings(max_examples=200, deadline=None)
@given(multigraphs())
def test_perfect_matching_agrees_with_enumeration(g):
    assert has_perfect_matching(g) == bf_has_pm(g)


@settings(max_examples=200, deadline=None)
@given(multigraphs(max_n=7, max_m=12))
def test_matching_covered_and_removable_agree_with_enumeration(g):
    mc = is_matching_covered(g)
    assert mc == bf_matching_covered(g)
    if mc:
        assert removable_edges(g) == bf_removable(g)


@settings(max_examples=200, deadline=None)
@given(relabelled())
def test_canonical_form_ignores_labels(pair):
    g, h = pair
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_n=7), multigraphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx_isomorphic(g, h)


@settings(max_examples=100, deadline=None)
@given(multigraphs())
def test_mg_round_trip(g):
    assert parse_mg(format_mg(g)) == g
