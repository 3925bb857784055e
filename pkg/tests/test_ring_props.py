import pytest

import oracles
from skewpbw.errors import UnsupportedInfinite
from skewpbw.ring_props import (CLASSICAL, central_idempotents, decide_classical,
                                enumerate_two_sided_ideals, idempotents, replay_classical,
                                right_annihilator, semicentral_idempotents)
from skewpbw.rings import (MatrixZQRing, ModularRing, PolyFieldRing, ProductRing, TruncatedPolyRing,
                           UpperTriangularRing)
from skewpbw.verdict import Status

Z2, Z3, Z4 = ModularRing(2), ModularRing(3), ModularRing(4)

CASES = [
    ("Z4", Z4, oracles.zn(4)),
    ("Z6", ModularRing(6), oracles.zn(6)),
    ("Z8", ModularRing(8), oracles.zn(8)),
    ("Z9", ModularRing(9), oracles.zn(9)),
    ("Z2xZ2", ProductRing([Z2, Z2]), oracles.product(oracles.zn(2), oracles.zn(2))),
    ("Z2xZ4", ProductRing([Z2, Z4]), oracles.product(oracles.zn(2), oracles.zn(4))),
    ("Z3xZ3", ProductRing([Z3, Z3]), oracles.product(oracles.zn(3), oracles.zn(3))),
    ("UT2(Z2)", UpperTriangularRing(Z2), oracles.upper_triangular(oracles.zn(2))),
    ("Z2[t]/t^2", TruncatedPolyRing(Z2, ["0", "0", "1"]), oracles.truncated_z2()),
]

ORACLE = {
    "Reduced": oracles.is_reduced,
    "Abelian": oracles.is_abelian,
    "IFP": oracles.is_ifp,
    "Baer": oracles.is_baer,
    "QuasiBaer": oracles.is_quasi_baer,
    "PP": oracles.is_pp,
    "PQBaer": oracles.is_pq_baer,
}


@pytest.mark.parametrize("prop", CLASSICAL)
@pytest.mark.parametrize("label,R,O", CASES, ids=[c[0] for c in CASES])
def test_classical_deciders_match_oracle(label, R, O, prop):
    v = decide_classical(R, prop)
    assert v.status in (Status.HOLDS, Status.FAILS)
    assert v.holds == ORACLE[prop](O)
    if v.fails:
        assert v.witness is not None
        assert replay_classical(R, prop, v.witness)


@pytest.mark.parametrize("label,R,O", CASES, ids=[c[0] for c in CASES])
def test_idempotents_match_oracle(label, R, O):
    assert sorted(R.format(e) for e in idempotents(R)) == sorted(O.label(e) for e in oracles.idempotents(O))


@pytest.mark.parametrize("label,R,O", CASES, ids=[c[0] for c in CASES])
def test_two_sided_ideals_match_oracle(label, R, O):
    ours = sorted(sorted(R.format(a) for a in I.elements) for I in enumerate_two_sided_ideals(R))
    theirs = sorted(sorted(O.label(a) for a in I) for I in oracles.two_sided_ideals(O))
    assert ours == theirs


def test_z4_baer_witness_is_r_of_2():
    v = decide_classical(Z4, "Baer")
    assert v.fails
    assert v.witness.to_dict()["annihilator"] == ["0", "2"]
    assert right_annihilator(Z4, [2]) == {0, 2}


def test_z6_idempotents():
    assert idempotents(ModularRing(6)) == [0, 1, 3, 4]


def test_ut2_abelian_fails_with_noncentral_idempotent():
    R = UpperTriangularRing(Z2)
    v = decide_classical(R, "Abelian")
    w = v.witness.to_dict()
    e, x = R.parse(w["e"]), R.parse(w["x"])
    assert R.mul(e, e) == e and R.mul(e, x) != R.mul(x, e)
    assert central_idempotents(R) == [0, 1]
    assert len(semicentral_idempotents(R, "left")) > 2


def test_structured_rings():
    assert decide_classical(MatrixZQRing(), "Reduced").fails
    assert decide_classical(PolyFieldRing(5), "Baer").holds
    with pytest.raises(UnsupportedInfinite):
        decide_classical(MatrixZQRing(), "Baer")


def test_tampered_witness_does_not_replay():
    v = decide_classical(Z4, "Reduced")
    v.witness.elements["a"] = 1
    assert not replay_classical(Z4, "Reduced", v.witness)
