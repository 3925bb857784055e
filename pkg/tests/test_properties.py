import pytest

import oracles
from skewpbw import catalog
from skewpbw.errors import SkewPBWError
from skewpbw.properties import (ALL_PROPERTIES, ARMENDARIZ, CHAINS, decide, implication_report,
                                kebab, property_id, replay, report_to_dict, sd_ideals)
from skewpbw.verdict import Status


def pres(name):
    return catalog.load(name).presentation


ORACLE_RINGS = {
    "z2-trivial": (oracles.zn(2), lambda x: x),
    "z4-trivial": (oracles.zn(4), lambda x: x),
    "z6-trivial": (oracles.zn(6), lambda x: x),
    "z2xz2-swap": (oracles.product(oracles.zn(2), oracles.zn(2)), lambda x: (x[1], x[0])),
    "ut2z2-trivial": (oracles.upper_triangular(oracles.zn(2)), lambda x: x),
}


@pytest.mark.parametrize("prop", sorted(ARMENDARIZ))
@pytest.mark.parametrize("name", sorted(ORACLE_RINGS))
def test_linear_armendariz_matches_oracle(name, prop):
    O, sigma = ORACLE_RINGS[name]
    v = decide(pres(name), prop, 1)
    expected = oracles.linear_armendariz_counterexample(O, sigma, ARMENDARIZ[prop]) is None
    assert v.status in (Status.HOLDS, Status.FAILS, Status.VERIFIED_UP_TO)
    assert v.fails != expected


@pytest.mark.parametrize("name", sorted(ORACLE_RINGS))
def test_sigma_rigid_matches_oracle(name):
    O, sigma = ORACLE_RINGS[name]
    assert decide(pres(name), "SigmaRigid").holds == oracles.is_sigma_rigid(O, sigma)


def test_swap_skew_armendariz_witness_shape():
    p = pres("z2xz2-swap")
    v = decide(p, "skew-armendariz", 1)
    assert v.fails
    w = v.witness
    f, g = w.polys["f"], w.polys["g"]
    R = p.ring
    e, e_ = R.parse("(1,0)"), R.parse("(0,1)")
    assert f == p.const(e_) + p.monomial((1,), e_)
    assert g == p.const(e) - p.monomial((1,), e_)
    assert (f * g).is_zero
    assert w.elements["a0*b1"] == e_
    assert replay(p, "SkewArmendariz", w)


def test_replay_rejects_a_doctored_witness():
    p = pres("z2xz2-swap")
    w = decide(p, "SkewArmendariz", 1).witness
    w.polys["g"] = p.one()
    assert not replay(p, "SkewArmendariz", w)


def test_known_sigma_rigid_witnesses():
    v = decide(pres("matrix-zq-half"), "SigmaRigid")
    assert v.fails and v.witness.to_dict()["r"] == "[0,1]"
    assert replay(pres("matrix-zq-half"), "SigmaRigid", v.witness)
    v = decide(pres("z2poly-eval0"), "SigmaRigid")
    assert v.fails and v.witness.to_dict()["r"] == "t"
    assert replay(pres("z2poly-eval0"), "SigmaRigid", v.witness)


def test_weak_variants_use_degree_one():
    p = pres("ut2z2-trivial")
    assert decide(p, "WeakSkewArmendariz", 3) is decide(p, "WeakSkewArmendariz", 1)


def test_domain_rule_gives_analytic_holds():
    v = decide(pres("diff-poly-z5"), "SkewArmendariz", 2)
    assert v.holds and v.scope == "analytic"


def test_structured_search_is_honest():
    v = decide(pres("matrix-zq-half"), "SkewArmendariz", 1)
    assert v.status is Status.INCONCLUSIVE and v.scope == "sampled"


def test_sd_ideals_of_swap():
    ideals = sd_ideals(pres("z2xz2-swap"))
    assert sorted(len(I.elements) for I in ideals) == [1, 4]


def test_property_names():
    assert property_id("weak-skew-armendariz") == "WeakSkewArmendariz"
    assert property_id("sd-quasi-baer") == "SDQuasiBaer"
    assert {kebab(p) for p in ALL_PROPERTIES} == {kebab(property_id(kebab(p))) for p in ALL_PROPERTIES}
    with pytest.raises(KeyError):
        property_id("nope")


@pytest.mark.parametrize("name", catalog.names())
def test_chains_are_consistent(name):
    rep = implication_report(pres(name), 2)
    assert rep["inconsistent"] == []
    assert len(rep["chains"]) == len(CHAINS)
    d = report_to_dict(rep)
    assert set(d["rows"]) == set(ALL_PROPERTIES)


@pytest.mark.parametrize("name", catalog.names())
def test_every_witness_replays(name):
    p = pres(name)
    for prop in ALL_PROPERTIES:
        try:
            v = decide(p, prop, 2)
        except SkewPBWError:
            continue
        if v.fails:
            assert replay(p, prop, v.witness), prop
