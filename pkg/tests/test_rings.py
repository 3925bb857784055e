import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from skewpbw.errors import AxiomViolation, InvalidTable, LiteralError, UnsupportedInfinite
from skewpbw.rings import (FiniteRing, IntegerRing, MatrixZQRing, ModularRing, PolyFieldRing, ProductRing,
                           TableRing, TruncatedPolyRing, UpperTriangularRing, ring_from_descriptor,
                           split_top_level, validate_ring)

FINITE = [ModularRing(4), ModularRing(6), ProductRing([ModularRing(2), ModularRing(2)]),
          UpperTriangularRing(ModularRing(2))]


@pytest.mark.parametrize("R", FINITE, ids=lambda R: R.name())
def test_canonical_indices(R):
    assert R.zero == 0 and R.one == 1
    for a in R.elements():
        assert R.add(a, 0) == a
        assert R.mul(a, 1) == a == R.mul(1, a)
        assert R.add(a, R.neg(a)) == 0


@pytest.mark.parametrize("R", FINITE, ids=lambda R: R.name())
def test_literal_round_trip(R):
    for a in R.elements():
        assert R.parse(R.format(a)) == a
        assert R.parse(f"#{a}") == a


def test_product_labels_match_oracle():
    R = ProductRing([ModularRing(2), ModularRing(2)])
    O = oracles.product(oracles.zn(2), oracles.zn(2))
    assert sorted(R.format(a) for a in R.elements()) == sorted(O.label(x) for x in O.elements)
    for x, y in itertools.product(O.elements, repeat=2):
        a, b = R.parse(O.label(x)), R.parse(O.label(y))
        assert R.format(R.mul(a, b)) == O.label(O.mul(x, y))
        assert R.format(R.add(a, b)) == O.label(O.add(x, y))


def test_upper_triangular_multiplication_matches_oracle():
    R = UpperTriangularRing(ModularRing(2))
    O = oracles.upper_triangular(oracles.zn(2))
    for x, y in itertools.product(O.elements, repeat=2):
        assert R.format(R.mul(R.parse(O.label(x)), R.parse(O.label(y)))) == O.label(O.mul(x, y))


def test_truncated_poly_ring_is_z2_t_mod_t2():
    R = TruncatedPolyRing(ModularRing(2), ["0", "0", "1"])
    assert R.size == 4
    t = R.parse("tp(0,1)")
    assert R.mul(t, t) == R.zero


def test_split_top_level():
    assert split_top_level("(1,2),[3,4],5") == ["(1,2)", "[3,4]", "5"]


def test_bad_table_is_rejected():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 0]]  # 1 is not an identity
    with pytest.raises(AxiomViolation):
        TableRing(add, mul, [0, 1], ["0", "1"])


def test_descriptor_round_trip():
    for R in FINITE + [MatrixZQRing(), PolyFieldRing(5), IntegerRing()]:
        assert ring_from_descriptor(R.descriptor()) == R


def test_finite_table_zero_must_be_index_zero():
    desc = FiniteRing.descriptor(ModularRing(2))
    desc["zero"] = 1
    with pytest.raises(InvalidTable):
        ring_from_descriptor(desc)


def test_unknown_literal():
    with pytest.raises(LiteralError):
        ModularRing(3).parse("x")


def test_structured_rings_refuse_enumeration():
    with pytest.raises(UnsupportedInfinite):
        MatrixZQRing().elements()


def test_matrix_ring_arithmetic():
    R = MatrixZQRing()
    e12 = R.parse("[0,1]")
    assert R.mul(e12, e12) == R.zero
    x = R.parse("[2,1/3]")
    assert R.mul(x, R.parse("[1,0]")) == x
    assert R.format(R.inverse(R.parse("[-1,1/2]"))) == "[-1,-1/2]"
    assert R.mul(R.parse("[-1,1/2]"), R.inverse(R.parse("[-1,1/2]"))) == R.one


def test_poly_field_literals():
    R = PolyFieldRing(5)
    assert R.parse("2*t^2 + t + 1") == (1, 1, 2)
    assert R.parse("poly(1,1,2)") == (1, 1, 2)
    assert R.format((1, 1, 2)) == "2*t^2 + t + 1"
    assert R.parse("t^5 - t") == (0, 4, 0, 0, 0, 1)


def test_poly_field_division():
    R = PolyFieldRing(5)
    f, g = R.parse("t^3 + 2*t + 1"), R.parse("t + 3")
    q, r = R.divmod(f, g)
    assert R.add(R.mul(q, g), r) == f
    assert len(r) < len(g)


def test_validate_ring_on_structured():
    for R in (MatrixZQRing(), PolyFieldRing(3), IntegerRing()):
        assert validate_ring(R) is R


poly5 = st.lists(st.integers(0, 4), max_size=5).map(lambda c: PolyFieldRing(5).make(c))


@given(poly5, poly5, poly5)
def test_poly_field_ring_axioms(f, g, h):
    R = PolyFieldRing(5)
    assert R.mul(R.mul(f, g), h) == R.mul(f, R.mul(g, h))
    assert R.mul(f, R.add(g, h)) == R.add(R.mul(f, g), R.mul(f, h))
    assert R.mul(f, g) == R.mul(g, f)


rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
mat = st.tuples(st.integers(-20, 20), rationals)


@given(mat, mat, mat)
def test_matrix_ring_axioms(x, y, z):
    R = MatrixZQRing()
    assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
    assert R.mul(R.add(x, y), z) == R.add(R.mul(x, z), R.mul(y, z))
    assert R.parse(R.format(x)) == (x[0], Fraction(x[1]))
