import pytest
from hypothesis import given, strategies as st

from skewpbw import catalog
from skewpbw.errors import ParseError
from skewpbw.parser import Add, Literal, Mul, Neg, Pow, Sub, Var, evaluate, normalize, parse, render, tokenize


def pres(name):
    return catalog.load(name).presentation


CORPUS = [
    "x1", "x2*x1", "x1^2*t", "x1*t", "x1^0", "-x1", "--x1", "1 - x1 - x2", "1 - (x1 - x2)",
    "(x1 + x2)^3", "x1*(x2*x1)", "(x1*x2)*x1", "2*x1^2 + 3", "(0,1)*x1 + (1,0)", "[0,1/2]*x1",
    "ut(0,1,0)*x1", "poly(1,2)*x1", "#3 * x1", "-x1^2", "(-x1)^2", "x1*-x2", "t^2*x1 - t",
]


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    tree = parse(text)
    assert parse(render(tree)) == tree


def test_precedence():
    assert parse("1 + 2*x1^2") == Add(Literal("1"), Mul(Literal("2"), Pow(Var(1), 2)))
    assert parse("x1 - x2 - x3") == Sub(Sub(Var(1), Var(2)), Var(3))
    assert parse("-x1^2") == Neg(Pow(Var(1), 2))


def test_multiplication_keeps_operand_order():
    assert parse("x2*x1") == Mul(Var(2), Var(1))
    assert parse("x2*x1") != parse("x1*x2")


def test_literal_shapes():
    kinds = [(t.kind, t.text) for t in tokenize("(0,1)*[1,1/2] + ut(1,0,1) + #2 + t")]
    lits = [text for kind, text in kinds if kind == "LIT"]
    assert lits == ["(0,1)", "[1,1/2]", "ut(1,0,1)", "#2", "t"]


@pytest.mark.parametrize("bad", ["", "x1 +", "x1^x2", "y", "(x1", "x1)", "x0", "x1^-1", "2 x1"])
def test_errors(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_variable_range_is_checked_at_evaluation():
    with pytest.raises(ParseError):
        normalize("x3", pres("weyl-z5"))


def test_bad_literal_for_ring():
    with pytest.raises(ParseError):
        normalize("[0,1]*x1", pres("z4-trivial"))


@pytest.mark.parametrize("name,expr,want", [
    ("quantum-plane-z3", "x2*x1", "2*x1*x2"),
    ("weyl-z5", "x2*x1", "x1*x2 + 1"),
    ("diff-poly-z5", "x1*t", "t*x1 + 1"),
    ("diff-poly-z5", "x1^2*t", "t*x1^2 + 2*x1"),
    ("z2-trivial", "x1^0", "1"),
    ("weyl-z5", "x1^0", "1"),
    ("z2xz2-swap", "x1*(1,0)", "(0,1)*x1"),
    ("matrix-zq-half", "x1*[0,1]", "[0,1/2]*x1"),
    ("z2poly-eval0", "x1*t", "0"),
])
def test_evaluation(name, expr, want):
    assert str(normalize(expr, pres(name))) == want


atoms = st.sampled_from(["x1", "x2", "1", "2", "3", "4"])


def _tree_text(depth):
    if depth == 0:
        return atoms
    sub = _tree_text(depth - 1)
    return st.one_of(
        atoms,
        st.tuples(sub, st.sampled_from([" + ", " - ", "*"]), sub).map(lambda t: f"({t[0]}){t[1]}({t[2]})"),
        st.tuples(sub, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
        sub.map(lambda s: f"-({s})"),
    )


@given(_tree_text(3))
def test_random_round_trip_and_normalization(text):
    p = pres("weyl-z5")
    tree = parse(text)
    assert parse(render(tree)) == tree
    f = evaluate(tree, p)
    assert evaluate(parse(render(tree)), p) == f
    assert normalize(str(f), p) == f
