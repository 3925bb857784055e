import numpy as np

from skewpbw import catalog
from skewpbw.bounded import (BoundedSpace, bounded_right_annihilator, idempotents_up_to,
                             is_reduced_up_to, scan_pairs)
from skewpbw.verdict import Status


def pres(name):
    return catalog.load(name).presentation


def test_space_round_trip():
    p = pres("z2xz2-swap")
    space = BoundedSpace(p, 1)
    assert space.N == 16
    for k, vec in enumerate(space.vectors):
        f = space.poly(vec)
        assert space.vector_of(f) == tuple(int(v) for v in vec)
        assert space.index_of(vec) == k


def test_left_table_agrees_with_engine():
    p = pres("quantum-plane-z3")
    space = BoundedSpace(p, 1)
    rng = np.random.default_rng(0)
    for _ in range(30):
        a, b = rng.integers(0, 3, space.M), rng.integers(0, 3, space.M)
        f, g = space.poly(a), space.poly(b)
        assert space.out_poly(space.apply(space.left_table(a), b)) == f * g


def test_generic_table_matches_products():
    p = pres("ut2z2-trivial")
    space = BoundedSpace(p, 1)
    f = p.var(1) + p.const(2)
    P, monos = space.generic_table(f)
    rows = space.products(P)
    for k in (0, 5, 17, 63):
        g = space.poly(space.vectors[k])
        assert space.out_poly(rows[k], monos) == f * g


def test_reduced_up_to():
    assert is_reduced_up_to(pres("z2-trivial"), 2).status is Status.VERIFIED_UP_TO
    v = is_reduced_up_to(pres("z4-trivial"), 1)
    assert v.fails
    f = v.witness.polys["f"]
    assert not f.is_zero and (f * f).is_zero


def test_idempotents_up_to_z6():
    got = sorted(str(e) for e in idempotents_up_to(pres("z6-trivial"), 1))
    assert got == ["0", "1", "3", "4"]


def test_bounded_annihilator_of_two():
    p = pres("z4-trivial")
    ann = bounded_right_annihilator(p, [p.const(2)], 1)
    assert all((p.const(2) * g).is_zero for g in ann)
    assert len(ann) == 4  # coefficients in {0, 2}


def test_scan_pairs_is_independent_of_workers():
    p = pres("z4-trivial")
    space = BoundedSpace(p, 1)

    def violation(avec, bvec):
        return {"x-coefficient": int(bvec[0])} if int(bvec[0]) else None

    serial = scan_pairs(space, violation, workers=1)
    assert serial[0] is not None
    assert scan_pairs(space, violation, workers=3) == serial

    hit, _ = scan_pairs(space, violation, workers=1)
    f, g = space.poly(space.vectors[hit[0]]), space.poly(space.vectors[hit[1]])
    assert (f * g).is_zero
