import pytest

from matchcover import forge
from matchcover import recipe as R
from matchcover.canon import canonical_form, is_isomorphic
from matchcover.families import generate_family
from matchcover.named import graph

EJOIN_TEXT = "(ejoin (k4) (c6bar) e1=0-1 e2=0-3)"


def test_leaves():
    assert R.evaluate(R.K4) == graph("K4")
    assert R.evaluate(R.parse_sexpr("(c6bar)")) == graph("C6bar")


def test_ejoin_matches_direct_construction():
    g = R.evaluate(R.parse_sexpr(EJOIN_TEXT))
    c6 = graph("C6bar")
    want = forge.e_join(graph("K4"), 0, c6, c6.edge_id(0, 3))
    assert g == want


def test_ejoin_anchor_order_decides_new_edges():
    a = R.evaluate(R.parse_sexpr("(ejoin (k4) (k4) e1=0-1 e2=2-3)"))
    b = R.evaluate(R.parse_sexpr("(ejoin (k4) (k4) e1=1-0 e2=3-2)"))
    assert a == b
    assert (0, 6) in a.edges and (1, 7) in a.edges


def test_round_trip_over_generated_recipes():
    for m in generate_family("expansionsOfF", 12):
        text = R.to_sexpr(m.recipe)
        back = R.parse_sexpr(text)
        assert back == m.recipe
        assert R.to_sexpr(back) == text
        assert canonical_form(R.evaluate(back)) == canonical_form(m.graph)


def test_evaluation_is_deterministic():
    r = R.parse_sexpr("(expand (replace (k4) ridge=0-1 gadget=k4minus orient=0) u=0 prime=2.3 len=2)")
    assert R.evaluate(r) == R.evaluate(r)
    assert R.evaluate(r).n == 8


def test_replace_orientation_symmetric():
    a = R.evaluate(R.parse_sexpr("(replace (c6bar) ridge=0-3 gadget=c6barstar orient=0)"))
    b = R.evaluate(R.parse_sexpr("(replace (c6bar) ridge=0-3 gadget=c6barstar orient=1)"))
    assert is_isomorphic(a, b)


def test_size_and_ops():
    r = R.parse_sexpr(EJOIN_TEXT)
    assert R.size(r) == 3
    assert R.ops(r) == ["ejoin", "k4", "c6bar"]
    assert R.head(R.K4) == "k4"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "(k5)",
        "(k4",
        "(k4) (k4)",
        "(bisub (k4) len=3 e=0-1)",
        "(bisub (k4) e=0-1)",
        "(bisub (k4) e=01 len=3)",
        "(bisub (k4) e=0-1 len=three)",
        "(replace (k4) ridge=0-1 gadget=petersen orient=0)",
        "(ejoin (k4) e1=0-1 e2=0-1)",
    ],
)
def test_parse_errors(text):
    with pytest.raises(R.RecipeError):
        R.parse_sexpr(text)


@pytest.mark.parametrize(
    "text",
    [
        "(bisub (k4) e=0-9 len=3)",
        "(bisub (k4) e=0-1 len=2)",
        "(replace (c6bar) ridge=0-2 gadget=k4minus orient=0)",
        "(vjoin (k4) (k4) u1=0 prime1=1.2 u2=0 prime2=1.2)",
        "(ejoin (k4) (c6bar) e1=0-1 e2=0-2)",
        "(expand (k4) u=0 prime=1.2 len=2)",
    ],
)
def test_evaluation_errors(text):
    with pytest.raises(R.RecipeError):
        R.evaluate(R.parse_sexpr(text))


def test_deep_nesting_is_reported():
    r = R.K4
    for _ in range(5000):
        r = R.Bisub(r, (0, 1), 3)
    with pytest.raises(R.RecipeError):
        R.evaluate(r)
