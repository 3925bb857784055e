import pytest

from skewpbw import catalog
from skewpbw.errors import PresentationInconsistent
from skewpbw.algebra import SkewPresentation
from skewpbw.rings import ModularRing
from skewpbw.theorems import (THEOREMS, _equivalence, _implication, corner_presentation, run_all,
                              summary, theorem_id, verify)
from skewpbw.verdict import Status, TheoremStatus, Verdict, Witness


def pres(name):
    return catalog.load(name).presentation


def V(status, witness=None):
    return Verdict("x", status, witness=witness)


H, F, U, I = Status.HOLDS, Status.FAILS, Status.VERIFIED_UP_TO, Status.INCONCLUSIVE


@pytest.mark.parametrize("hyps,concl,want", [
    ([H], H, TheoremStatus.CONSISTENT),
    ([H], U, TheoremStatus.CONSISTENT),
    ([F], F, TheoremStatus.HYPOTHESES_NOT_MET),
    ([H, H], F, TheoremStatus.VIOLATION),
    ([H, U], F, TheoremStatus.INCONCLUSIVE),
    ([H], I, TheoremStatus.INCONCLUSIVE),
])
def test_implication_rule(hyps, concl, want):
    assert _implication([V(s) for s in hyps], V(concl)) is want


def test_equivalence_rule():
    w = Witness("probe", ModularRing(2))
    assert _equivalence([V(H)], [V(H), V(U)]) is TheoremStatus.CONSISTENT
    assert _equivalence([V(H)], [V(F), V(I, w)]) is TheoremStatus.CONSISTENT
    assert _equivalence([V(H)], [V(H), V(F)]) is TheoremStatus.VIOLATION
    assert _equivalence([V(U)], [V(H), V(F)]) is TheoremStatus.INCONCLUSIVE
    assert _equivalence([V(F)], [V(H), V(F)]) is TheoremStatus.HYPOTHESES_NOT_MET
    assert _equivalence([V(H)], [V(H), V(I)]) is TheoremStatus.INCONCLUSIVE


def test_theorem_names():
    assert theorem_id("rigid-equivalence") == "RIGID_EQUIVALENCE"
    assert len(THEOREMS) == 14
    with pytest.raises(KeyError):
        theorem_id("fermat")


def test_rigid_equivalence_on_swap_is_definitely_false():
    r = verify("RIGID_EQUIVALENCE", pres("z2xz2-swap"), 2)
    assert r.status is TheoremStatus.CONSISTENT
    statements = [v for k, v in r.conclusions.items() if k.startswith("(")]
    assert len(statements) == 3
    assert all(v.status is Status.FAILS for v in statements)


def test_weak_implies_abelian_contrapositive():
    p = pres("ut2z2-trivial")
    r = verify("WEAK_IMPLIES_ABELIAN", p, 2)
    assert r.status is TheoremStatus.CONSISTENT
    f, g = r.witness.polys["f"], r.witness.polys["g"]
    assert f.degree() == 1 and g.degree() == 1
    assert (f * g).is_zero
    a0 = f.terms[(0,)]
    assert any(not p.ring.is_zero(p.ring.mul(a0, b)) for b in g.terms.values())


def test_delta_annihilation_on_weyl_uses_word_closure():
    r = verify("DELTA_ANNIHILATION", pres("diff-poly-z5"), 2)
    assert r.status is TheoremStatus.CONSISTENT


def test_delta_annihilation_reports_unmet_hypothesis():
    r = verify("DELTA_ANNIHILATION", pres("z2xz2-swap"), 2)
    assert r.status is TheoremStatus.HYPOTHESES_NOT_MET
    assert "conclusion holds" in r.note


@pytest.mark.parametrize("name", ["diff-poly-z5", "weyl-z5"])
def test_extended_derivation(name):
    r = verify("EXTENDED_DERIVATION", pres(name), 2)
    assert r.status is TheoremStatus.CONSISTENT
    assert all(v.status.presumed_true for v in r.conclusions.values())


def test_idempotent_decomposition_on_z6():
    r = verify("IDEMPOTENT_DECOMPOSITION", pres("z6-trivial"), 1)
    assert r.status is TheoremStatus.CONSISTENT
    assert r.note == "stable idempotents: 0, 1, 3, 4"


def test_corner_ring_of_z6():
    p = pres("z6-trivial")
    q = corner_presentation(p, 3)
    assert q.ring.size == 2
    assert str(q.var(1) * q.var(1)) == "x1^2"


def test_eval0_gates_fail():
    p = pres("z2poly-eval0")
    for t in ("RIGID_EQUIVALENCE", "LOCALIZATION_ARMENDARIZ"):
        assert verify(t, p, 1).status is TheoremStatus.HYPOTHESES_NOT_MET


def test_invalid_presentation_is_refused():
    p = SkewPresentation(ModularRing(3), 2, c={(1, 2): 0})
    with pytest.raises(PresentationInconsistent):
        run_all(p, 1)


@pytest.mark.parametrize("name", catalog.names())
def test_no_violations_at_degree_one(name):
    reports = run_all(pres(name), 1)
    assert summary(reports)["violation"] == 0
    assert [r.theorem for r in reports] == list(THEOREMS)
    for r in reports:
        d = r.to_dict()
        assert d["status"] in {s.value for s in TheoremStatus}
