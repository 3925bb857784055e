"""Named, validated instances used by the acceptance suite.

Every entry carries an expected verdict table.  Each row records where the
expectation comes from: ``source`` (stated in the literature), ``derived`` (an
independent oracle or a short hand computation) or ``trivial``.  The table
is a claim to be re-checked, never an input to a decider.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import SkewPresentation, validate_presentation
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import UnknownEntry
from .maps import builtin_delta, builtin_sigma
from .rings import MatrixZQRing, ModularRing, PolyFieldRing, ProductRing, Ring, UpperTriangularRing


@dataclass(frozen=True)
class Expectation:
    status: str  # holds | fails | verified-up-to(D) | inconclusive
    provenance: str  # source | derived | trivial
    reason: str = ""


@dataclass
class CatalogEntry:
    name: str
    ring: Ring
    presentation: SkewPresentation
    provenance: str
    expected: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)


def _pres(ring, n, name, sigma="identity", delta="zero", c=None, r=None) -> SkewPresentation:
    sigmas = [builtin_sigma(ring, sigma) for _ in range(n)]
    deltas = [builtin_delta(ring, s, delta) for s in sigmas]
    return SkewPresentation(ring, n, sigmas, deltas, c=c, r=r, name=name)


def _exp(status, provenance, reason=""):
    return Expectation(status, provenance, reason)


H, F = "holds", "fails"


def _z2_trivial():
    R = ModularRing(2)
    exp = {p: _exp(H, "trivial", "field, identity maps") for p in (
        "Reduced", "Abelian", "IFP", "Baer", "QuasiBaer", "PP", "PQBaer", "SigmaRigid",
        "SDWeakArmendariz", "WeakSigmaSkewArmendariz", "WeakSkewArmendariz", "SDQuasiBaer")}
    for p in ("SDArmendariz", "SigmaSkewArmendariz", "SkewArmendariz"):
        exp[p] = _exp("verified-up-to(2)", "trivial", "Z_2[x] is a domain; bounded search finds nothing")
    return R, _pres(R, 1, "z2-trivial"), "commutative polynomial ring over a field", exp


def _z4_trivial():
    R = ModularRing(4)
    exp = {
        "Reduced": _exp(F, "derived", "2^2 = 0"),
        "Baer": _exp(F, "derived", "r(2) = {0,2} is not eR"),
        "PP": _exp(F, "derived", "r(2) = {0,2} is not eR"),
        "QuasiBaer": _exp(F, "derived", "r(2Z_4) = {0,2}"),
        "Abelian": _exp(H, "trivial", "commutative"),
        "IFP": _exp(H, "trivial", "commutative"),
        "SigmaRigid": _exp(F, "derived", "2 * 2 = 0"),
        "SkewArmendariz": _exp("verified-up-to(2)", "derived", "Z_4 is Armendariz"),
        "WeakSkewArmendariz": _exp(H, "derived", "Z_4 is Armendariz"),
    }
    return R, _pres(R, 1, "z4-trivial"), "Z_4 is Armendariz but not reduced", exp


def _z6_trivial():
    R = ModularRing(6)
    exp = {
        "Reduced": _exp(H, "derived", "Z_6 = Z_2 x Z_3"),
        "Abelian": _exp(H, "trivial", "commutative"),
        "Baer": _exp(H, "derived", "product of fields"),
        "SigmaRigid": _exp(H, "derived", "reduced with identity maps"),
        "WeakSkewArmendariz": _exp(H, "derived", "reduced commutative rings are Armendariz"),
        "SkewArmendariz": _exp("verified-up-to(2)", "derived", "reduced commutative rings are Armendariz"),
    }
    return R, _pres(R, 1, "z6-trivial"), "reduced ring with nontrivial idempotents", exp


def _z2xz2_swap():
    Z2 = ModularRing(2)
    R = ProductRing([Z2, Z2])
    exp = {
        "Reduced": _exp(H, "trivial", "product of fields"),
        "Baer": _exp(H, "derived", "product of fields"),
        "SigmaRigid": _exp(F, "source", "e swap(e) = 0"),
        "SkewArmendariz": _exp(F, "source", "f = e' + e'x, g = e - e'x"),
        "WeakSkewArmendariz": _exp(F, "derived", "the same linear pair"),
        "SDQuasiBaer": _exp(H, "derived", "only swap-stable ideals are 0 and R"),
    }
    return R, _pres(R, 1, "z2xz2-swap", sigma="swap"), "swap automorphism of Z_2 x Z_2", exp


def _ut2z2_trivial():
    R = UpperTriangularRing(ModularRing(2))
    exp = {
        "Abelian": _exp(F, "derived", "E22 is not central"),
        "Reduced": _exp(F, "derived", "E12 squares to zero"),
        "SDArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
        "SDWeakArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
        "SigmaSkewArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
        "WeakSigmaSkewArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
        "SkewArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
        "WeakSkewArmendariz": _exp(F, "derived", "non-Abelian, so not weak skew-Armendariz"),
    }
    return R, _pres(R, 1, "ut2z2-trivial"), "upper triangular 2x2 matrices over Z_2", exp


def _quantum_plane_z3():
    R = ModularRing(3)
    exp = {
        "SigmaRigid": _exp(H, "trivial", "field with identity maps"),
        "WeakSkewArmendariz": _exp(H, "trivial", "A is a domain"),
    }
    return R, _pres(R, 2, "quantum-plane-z3", c={(1, 2): 2}), "x2 x1 = 2 x1 x2 over Z_3", exp


def _weyl_z5():
    R = ModularRing(5)
    exp = {
        "SigmaRigid": _exp(H, "trivial", "field with identity maps"),
        "SkewArmendariz": _exp(H, "derived", "A is a domain (search cap exceeded at degree 2)"),
    }
    return (R, _pres(R, 2, "weyl-z5", r={(1, 2): (1, 0, 0)}),
            "x2 x1 = x1 x2 + 1 over Z_5", exp)


def _diff_poly_z5():
    R = PolyFieldRing(5)
    exp = {
        "SigmaRigid": _exp(H, "derived", "domain with identity sigma"),
        "SkewArmendariz": _exp(H, "derived", "A is a domain"),
    }
    return R, _pres(R, 1, "diff-poly-z5", delta="derivative"), "Z_5[t] with x t = t x + 1", exp


def _matrix_zq_half():
    R = MatrixZQRing()
    exp = {
        "SigmaRigid": _exp(F, "source", "[0,1] sigma([0,1]) = 0"),
        "Reduced": _exp(F, "derived", "[0,1]^2 = 0"),
    }
    return R, _pres(R, 1, "matrix-zq-half", sigma="half"), "matrices (a t; 0 a), sigma halves t", exp


def _z2poly_eval0():
    R = PolyFieldRing(2)
    exp = {
        "SigmaRigid": _exp(F, "source", "t sigma(t) = t * 0 = 0"),
        "Reduced": _exp(H, "trivial", "domain"),
    }
    return R, _pres(R, 1, "z2poly-eval0", sigma="eval0"), "Z_2[t] with sigma(f) = f(0)", exp


_BUILDERS: dict[str, Callable] = {
    "z2-trivial": _z2_trivial,
    "z4-trivial": _z4_trivial,
    "z6-trivial": _z6_trivial,
    "z2xz2-swap": _z2xz2_swap,
    "ut2z2-trivial": _ut2z2_trivial,
    "quantum-plane-z3": _quantum_plane_z3,
    "weyl-z5": _weyl_z5,
    "diff-poly-z5": _diff_poly_z5,
    "matrix-zq-half": _matrix_zq_half,
    "z2poly-eval0": _z2poly_eval0,
}

_CACHE: dict = {}


def names() -> list[str]:
    return list(_BUILDERS)


def build(name: str, config: SearchConfig = DEFAULT_CONFIG) -> CatalogEntry:
    """A freshly constructed entry with empty decider caches."""
    if name not in _BUILDERS:
        raise UnknownEntry(f"no catalog entry named {name!r}; known: {', '.join(_BUILDERS)}")
    ring, pres, note, expected = _BUILDERS[name]()
    validate_presentation(pres, config)
    return CatalogEntry(name, ring, pres, note, expected)


def load(name: str, config: SearchConfig = DEFAULT_CONFIG) -> CatalogEntry:
    key = (name, config)
    if key not in _CACHE:
        _CACHE[key] = build(name, config)
    return _CACHE[key]


def expected_table(name: str) -> dict:
    return load(name).expected


list_entries = names

__all__ = ["CatalogEntry", "Expectation", "build", "load", "names", "list_entries", "expected_table"]
