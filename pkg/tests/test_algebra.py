import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from skewpbw import catalog
from skewpbw.algebra import (SkewPresentation, check_extension_hypotheses, extend_delta, extend_sigma,
                             monomials_up_to, order_key, validate_presentation)
from skewpbw.errors import HypothesesFail, PresentationInconsistent
from skewpbw.maps import builtin_sigma, inner_derivation, identity_map
from skewpbw.rings import ModularRing, PolyFieldRing


def pres(name):
    return catalog.load(name).presentation


def test_monomial_orders():
    mons = monomials_up_to(2, 2)
    assert mons[0] == (0, 0)
    assert order_key("deglex")((2, 0)) < order_key("deglex")((1, 1)) < order_key("deglex")((0, 2))
    assert order_key("lex")((5, 0)) < order_key("lex")((0, 1))
    assert sorted(mons, key=order_key("degrevlex"))[-1] == (0, 2)


def test_rewrite_rules_on_generators():
    assert str(pres("weyl-z5").var(2) * pres("weyl-z5").var(1)) == "x1*x2 + 1"
    q = pres("quantum-plane-z3")
    assert str(q.var(2) * q.var(1)) == "2*x1*x2"
    d = pres("diff-poly-z5")
    t = d.const(d.ring.parse("t"))
    assert str(d.var(1) * t) == "t*x1 + 1"


@pytest.mark.parametrize("name,c,r", [("quantum-plane-z3", 2, (0, 0, 0)), ("weyl-z5", 1, (1, 0, 0))])
def test_two_variable_products_match_word_rewriting(name, c, r):
    p = pres(name)
    mod = p.ring.modulus
    for a, b in itertools.product(monomials_up_to(2, 3), repeat=2):
        got = (p.monomial(a) * p.monomial(b)).terms
        want = oracles.word_normal_form(mod, c, r, {oracles.mono_word(a) + oracles.mono_word(b): 1})
        assert {e: int(p.ring.format(v)) for e, v in got.items()} == want, (a, b)


def test_differential_products_match_leibniz():
    p = pres("diff-poly-z5")
    R = p.ring
    for k in range(4):
        for r in R.candidates()[:20]:
            got = (p.monomial((k,)) * p.const(r)).terms
            want = oracles.weyl_leibniz(k, r, 5)
            assert {e[0]: v for e, v in got.items()} == want


def test_swap_extension_matches_ore_oracle():
    p = pres("z2xz2-swap")
    R = p.ring
    O = oracles.product(oracles.zn(2), oracles.zn(2))
    by_label = {O.label(x): x for x in O.elements}
    swap = lambda x: (x[1], x[0])
    for f_c in itertools.product(R.elements(), repeat=2):
        f = p.const(f_c[0]) + p.monomial((1,), f_c[1])
        for g_c in itertools.product(R.elements(), repeat=2):
            g = p.const(g_c[0]) + p.monomial((1,), g_c[1])
            got = f * g
            of = [by_label[R.format(c)] for c in f_c]
            og = [by_label[R.format(c)] for c in g_c]
            want = oracles.ore_mul(O, swap, lambda x: O.zero, of, og)
            for k, c in enumerate(want):
                assert R.format(got.terms.get((k,), R.zero)) == O.label(c)


def test_zero_c_is_inconsistent():
    R = ModularRing(3)
    with pytest.raises(PresentationInconsistent):
        validate_presentation(SkewPresentation(R, 2, c={(1, 2): 0}))


def test_bijective_flag_is_checked():
    R = PolyFieldRing(2)
    s = builtin_sigma(R, "eval0")
    p = SkewPresentation(R, 1, [s], None, bijective=True)
    with pytest.raises(PresentationInconsistent):
        validate_presentation(p)


def test_extension_hypotheses():
    check_extension_hypotheses(pres("weyl-z5"))
    p = pres("diff-poly-z5")
    f = p.monomial((2,), p.ring.parse("t^2"))
    assert str(extend_delta(p, 1)(f)) == "2*t*x1^2"
    assert extend_sigma(p, 1)(f) == f


def test_extension_hypotheses_can_fail():
    R = PolyFieldRing(3)
    s = identity_map(R)
    from skewpbw.maps import builtin_delta
    d = builtin_delta(R, s, "derivative")
    p = SkewPresentation(R, 2, [s, s], [d, d], c={(1, 2): R.parse("t")})
    with pytest.raises(HypothesesFail):
        check_extension_hypotheses(p)


def test_leading_data():
    p = pres("weyl-z5")
    f = p.var(1) * p.var(2) * 3 + p.var(1)
    ld = f.leading_data()
    assert ld["exp"] == (1, 1) and ld["lc"] == 3 and ld["deg"] == 2
    assert p.zero().leading_data()["exp"] is None


def test_power_zero_is_one():
    p = pres("weyl-z5")
    assert (p.var(1) ** 0) == p.one()


# property-based ---------------------------------------------------------------


def poly_strategy(name, degree=2):
    p = pres(name)
    monos = monomials_up_to(p.n, degree)
    coeffs = st.sampled_from(p.ring.candidates()[:12])
    return st.lists(st.tuples(st.sampled_from(monos), coeffs), max_size=4).map(
        lambda ts: sum((p.monomial(e, c) for e, c in ts), p.zero()))


@pytest.mark.parametrize("name", ["quantum-plane-z3", "weyl-z5", "diff-poly-z5", "z2xz2-swap",
                                  "matrix-zq-half", "z2poly-eval0"])
def test_associativity_and_distributivity(name):
    s = poly_strategy(name)

    @given(s, s, s)
    def check(f, g, h):
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h

    check()


@given(poly_strategy("weyl-z5"))
def test_normal_form_is_parse_stable(f):
    from skewpbw.parser import normalize
    assert normalize(str(f), f.pres) == f
