import pytest
from hypothesis import given, strategies as st

from skewpbw.errors import AxiomViolation, InvalidTable
from skewpbw.maps import (EndoMap, SigmaDerivation, builtin_delta, builtin_sigma, identity_map,
                          inner_derivation, monoid_closure, sigma_alpha, validate_derivation,
                          validate_endomorphism)
from skewpbw.rings import MatrixZQRing, ModularRing, PolyFieldRing, ProductRing


def z2xz2():
    return ProductRing([ModularRing(2), ModularRing(2)])


def test_swap_is_an_automorphism_of_order_two():
    R = z2xz2()
    s = validate_endomorphism(builtin_sigma(R, "swap"))
    assert s.bijective
    assert all(s(s(a)) == a for a in R.elements())
    assert len(monoid_closure([s])) == 2


def test_table_map_must_be_multiplicative():
    R = ModularRing(4)
    with pytest.raises(AxiomViolation):
        validate_endomorphism(EndoMap(R, table=[0, 1, 0, 1]))


def test_table_length_is_checked():
    with pytest.raises(InvalidTable):
        EndoMap(ModularRing(3), table=[0, 1])


def test_inner_derivation_is_a_sigma_derivation():
    R = ModularRing(6)
    s = identity_map(R)
    d = validate_derivation(inner_derivation(R, s, 3))
    # commutative ring: inner derivations vanish
    assert all(d(a) == 0 for a in R.elements())


def test_bad_derivation_is_rejected():
    R = ModularRing(3)
    s = identity_map(R)
    with pytest.raises(AxiomViolation):
        validate_derivation(SigmaDerivation(R, s, table=[0, 1, 2]))


def test_eval0_is_not_injective():
    R = PolyFieldRing(2)
    s = validate_endomorphism(builtin_sigma(R, "eval0"))
    assert s.injective is False
    assert s(R.parse("t + 1")) == R.one


def test_half_sigma():
    R = MatrixZQRing()
    s = validate_endomorphism(builtin_sigma(R, "half"))
    assert s(R.parse("[3,1]")) == R.parse("[3,1/2]")


def test_derivative_is_a_derivation():
    R = PolyFieldRing(5)
    s = identity_map(R)
    d = validate_derivation(builtin_delta(R, s, "derivative"))
    assert d(R.parse("t^3 + t")) == R.parse("3*t^2 + 1")


def test_sigma_alpha_applies_last_variable_first():
    R = ModularRing(5)
    doubling = EndoMap(R, table=[0, 1, 2, 3, 4], name="identity")
    f = sigma_alpha([doubling, doubling], (2, 3))
    assert f(3) == 3


@given(st.integers(0, 3), st.integers(0, 3))
def test_swap_is_additive(a, b):
    R = z2xz2()
    s = builtin_sigma(R, "swap")
    assert s(R.add(a, b)) == R.add(s(a), s(b))
