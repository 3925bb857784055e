"""Regular elements, the Ore condition and rings of left fractions.

Two constructions cover the cases that arise here.  When every denominator is
a unit (always true for regular elements of a finite ring) a fraction
``s^-1 a`` is represented by the ring element ``s^-1 * a`` itself.  For
commutative structured domains fractions are canonical ``(num, den)`` pairs
and the fraction field is a ``Ring`` in its own right, so presentations over
it can be fed to the deciders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import SkewPresentation
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import (DenominatorNotRegular, InvalidTable, LiteralError, NotOre, SigmaDoesNotPreserveS,
                     SkewPBWError, UnsupportedInfinite)
from .maps import EndoMap, SigmaDerivation
from .rings import Ring, split_top_level
from .verdict import Status, TheoremReport, TheoremStatus, Verdict, Witness


def regular_elements(ring: Ring) -> set:
    """Elements that are neither left nor right zero divisors."""
    if not ring.finite:
        raise UnsupportedInfinite("regular elements are enumerated only for finite rings")
    return {a for a in ring.elements() if ring.is_regular(a)}


@dataclass(frozen=True)
class MultiplicativeSet:
    """A denominator set.  ``elements`` is None for 'every regular element' of an infinite ring."""

    ring: Ring
    elements: frozenset | None
    contains_one: bool
    excludes_zero: bool
    closed: bool
    subset_of_regular: bool

    def __contains__(self, a) -> bool:
        if self.elements is None:
            return self.ring.is_regular(a)
        return a in self.elements

    @property
    def valid(self) -> bool:
        return self.contains_one and self.excludes_zero and self.closed

    def sorted(self) -> list:
        return sorted(self.elements) if self.elements is not None else []


def multiplicative_set(ring: Ring, elements=None) -> MultiplicativeSet:
    """Build and check S; ``None`` means all regular elements."""
    if elements is None:
        if ring.finite:
            elements = regular_elements(ring)
        else:
            return MultiplicativeSet(ring, None, True, True, True, True)
    S = frozenset(elements)
    closed = all(ring.mul(a, b) in S for a in S for b in S)
    regular = all(ring.is_regular(a) for a in S)
    ms = MultiplicativeSet(ring, S, ring.one in S, ring.zero not in S, closed, regular)
    if not ms.valid:
        raise InvalidTable("a multiplicative set contains 1, excludes 0 and is closed under products")
    return ms


def check_ore(ring: Ring, S: MultiplicativeSet, side: str = "left") -> Verdict:
    """Left: for a in R, s in S there are s' in S, a' in R with s'a = a's."""
    name = f"Ore({side})"
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if ring.commutative:
        return Verdict(name, Status.HOLDS, scope="analytic", note="commutative: take s' = s, a' = a")
    if not ring.finite or S.elements is None:
        raise UnsupportedInfinite("the Ore condition is checked only on finite rings")
    mul = ring.mul
    examined = 0
    for a in ring.elements():
        for s in S.sorted():
            examined += 1
            if side == "left":
                ok = any(mul(t, a) == mul(b, s) for t in S.sorted() for b in ring.elements())
            else:
                ok = any(mul(a, t) == mul(s, b) for t in S.sorted() for b in ring.elements())
            if not ok:
                w = Witness("ore", ring, elements={"a": a, "s": s}, info={"side": side})
                return Verdict(name, Status.FAILS, witness=w, pairs_examined=examined)
    return Verdict(name, Status.HOLDS, pairs_examined=examined)


# --------------------------------------------------------------------------
# fraction rings
# --------------------------------------------------------------------------


class UnitFractionRing:
    """S^-1 R when every s in S is a unit: s^-1 a is stored as the element s^-1 * a."""

    def __init__(self, base: Ring, S: MultiplicativeSet):
        self.base = base
        self.S = S
        self.ring = base

    def fraction(self, a, s):
        if s not in self.S:
            raise DenominatorNotRegular(f"{self.base.format(s)} is not in S")
        return self.base.mul(self.base.inverse(s), a)

    def embed(self, a):
        return a

    def add(self, x, y):
        return self.base.add(x, y)

    def mul(self, x, y):
        return self.base.mul(x, y)

    def neg(self, x):
        return self.base.neg(x)

    def format(self, x) -> str:
        return self.base.format(x)

    def same_class(self, a, s, b, t) -> bool:
        """s^-1 a = t^-1 b by the defining relation: c a = d b and c s = d t in S."""
        R = self.base
        for c, d in itertools.product(R.elements(), repeat=2):
            cs = R.mul(c, s)
            if cs in self.S and cs == R.mul(d, t) and R.mul(c, a) == R.mul(d, b):
                return True
        return False

    def verify_isomorphism(self) -> Witness | None:
        """The class relation must coincide with equality of s^-1 a in R."""
        R = self.base
        pairs = [(a, s) for s in self.S.sorted() for a in R.elements()]
        for (a, s), (b, t) in itertools.combinations(pairs, 2):
            if self.same_class(a, s, b, t) != (self.fraction(a, s) == self.fraction(b, t)):
                return Witness("fraction-isomorphism", R, elements={"a": a, "s": s, "b": b, "t": t})
        for a in R.elements():
            if self.fraction(a, R.one) != a:
                return Witness("fraction-isomorphism", R, elements={"a": a})
        return None


class FractionFieldRing(Ring):
    """Classical quotient ring of a commutative structured ring; elements are canonical (num, den).

    For a domain this is the fraction field.  Denominators are the regular
    elements, so cross-multiplication decides equality of fractions.
    """

    kind = "fraction_field"
    commutative = True

    def __init__(self, base: Ring):
        if base.finite or not base.commutative:
            raise UnsupportedInfinite("quotient rings are built only for commutative structured rings")
        if not hasattr(base, "canonical_fraction"):
            raise UnsupportedInfinite(f"{base.name()} has no canonical fraction form")
        self.base = base
        self.is_domain = base.is_domain
        self.zero = base.canonical_fraction(base.zero, base.one)
        self.one = base.canonical_fraction(base.one, base.one)

    def fraction(self, a, s):
        if not self.base.is_regular(s):
            raise DenominatorNotRegular(f"{self.base.format(s)} is a zero divisor")
        return self.base.canonical_fraction(a, s)

    def embed(self, a):
        return self.fraction(a, self.base.one)

    def add(self, x, y):
        B = self.base
        if x[1] == y[1] == B.one:
            return (B.add(x[0], y[0]), B.one)
        return self.fraction(B.add(B.mul(x[0], y[1]), B.mul(y[0], x[1])), B.mul(x[1], y[1]))

    def neg(self, x):
        return (self.base.neg(x[0]), x[1])

    def mul(self, x, y):
        B = self.base
        if x[1] == y[1] == B.one:
            # canonical forms with unit denominator are closed under + and *
            return (B.mul(x[0], y[0]), B.one)
        if B.is_zero(x[0]) or B.is_zero(y[0]):
            return self.zero
        return self.fraction(B.mul(x[0], y[0]), B.mul(x[1], y[1]))

    def is_zero(self, x) -> bool:
        return self.base.is_zero(x[0])

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def format(self, x) -> str:
        B = self.base
        num, den = B.format(x[0]), B.format(x[1])
        if x[1] == B.one:
            return num
        wrap = lambda s: f"({s})" if " " in s else s
        return f"{wrap(num)}/{wrap(den)}"

    def _parse(self, t):
        parts = split_top_level(t, "/")
        if len(parts) == 1:
            return self.embed(self.base.parse(_unwrap(parts[0])))
        if len(parts) == 2:
            try:
                return self.fraction(self.base.parse(_unwrap(parts[0])), self.base.parse(_unwrap(parts[1])))
            except (LiteralError, DenominatorNotRegular):
                return None
        return None

    def candidates(self):
        B = self.base
        out = []
        for den in [d for d in B.candidates() if B.is_regular(d)][:3]:
            for num in B.candidates()[:8]:
                q = self.fraction(num, den)
                if q not in out:
                    out.append(q)
        return out

    def generators(self):
        B = self.base
        gens = [self.embed(g) for g in B.generators()]
        return gens + [self.fraction(B.one, g) for g in B.generators() if B.is_regular(g)][:2]

    def idempotent_list(self):
        # e = a/s idempotent gives a(a - s) = 0; in the supported bases this forces a in {0, s}
        return [self.zero, self.one]

    def is_unit(self, x):
        return self.base.is_regular(x[0])

    def inverse(self, x):
        if not self.is_unit(x):
            return None
        return self.fraction(x[1], x[0])

    def is_regular(self, x):
        return self.is_unit(x)

    def nilpotent_witness(self):
        if self.is_domain:
            return None
        return self.embed(self.base.nilpotent_witness())

    def descriptor(self):
        return {"kind": "fraction_field", "base": self.base.descriptor()}

    def name(self):
        return f"Frac({self.base.name()})"


def _unwrap(s: str) -> str:
    return s[1:-1] if s.startswith("(") and s.endswith(")") else s


class PairFractionRing:
    """S^-1 R for a commutative structured ring, backed by its classical quotient ring."""

    def __init__(self, base: Ring, S: MultiplicativeSet):
        self.base = base
        self.S = S
        self.ring = FractionFieldRing(base)

    def fraction(self, a, s):
        if s not in self.S:
            raise DenominatorNotRegular(f"{self.base.format(s)} is not in S")
        return self.ring.fraction(a, s)

    def embed(self, a):
        return self.ring.embed(a)

    def add(self, x, y):
        return self.ring.add(x, y)

    def mul(self, x, y):
        return self.ring.mul(x, y)

    def neg(self, x):
        return self.ring.neg(x)

    def format(self, x) -> str:
        return self.ring.format(x)

    def same_class(self, a, s, b, t) -> bool:
        B = self.base
        return B.is_zero(B.sub(B.mul(a, t), B.mul(b, s)))


def localize(ring: Ring, S: MultiplicativeSet | None = None):
    """The ring of left fractions S^-1 R (S defaults to all regular elements)."""
    if S is None:
        S = multiplicative_set(ring)
    if not S.subset_of_regular:
        raise DenominatorNotRegular("every denominator must be regular")
    if ring.finite:
        ore = check_ore(ring, S, "left")
        if ore.fails:
            raise NotOre(f"left Ore condition fails at {ore.witness.describe()}")
        return UnitFractionRing(ring, S)
    if S.elements is not None and all(ring.is_unit(s) for s in S.elements):
        return UnitFractionRing(ring, S)
    if ring.commutative:
        return PairFractionRing(ring, S)
    raise UnsupportedInfinite("noncommutative infinite rings are localized only at units")


# --------------------------------------------------------------------------
# extended maps
# --------------------------------------------------------------------------


@dataclass
class ExtendedMapOnFractions:
    """sigma-bar(s^-1 a) = sigma(s)^-1 sigma(a) and the matching delta-bar."""

    sigma: EndoMap
    delta: SigmaDerivation
    Q: object

    def sigma_bar(self, a, s):
        return self.Q.fraction(self.sigma(a), self.sigma(s))

    def delta_bar(self, a, s):
        Q, sg, d = self.Q, self.sigma, self.delta
        first = Q.mul(Q.neg(Q.fraction(d(s), sg(s))), Q.fraction(a, s))
        return Q.add(first, Q.fraction(d(a), sg(s)))

    def representative(self, x):
        """A pair (a, s) with s^-1 a = x."""
        if isinstance(self.Q, PairFractionRing):
            return x
        return x, self.Q.base.one

    def on(self, x):
        return self.sigma_bar(*self.representative(x)), self.delta_bar(*self.representative(x))


def extend_maps_to_fractions(sigma: EndoMap, delta: SigmaDerivation, Q) -> ExtendedMapOnFractions:
    R = Q.base
    S = Q.S
    if S.elements is not None:
        image = {sigma(s) for s in S.elements}
        if image != set(S.elements):
            bad = sorted(S.elements - image) or sorted(image - S.elements)
            raise SigmaDoesNotPreserveS(f"sigma does not map S onto S (at {R.format(bad[0])})")
    elif not sigma.injective:
        raise SigmaDoesNotPreserveS(f"{sigma.name} is not injective, so it sends a regular element to 0")
    return ExtendedMapOnFractions(sigma, delta, Q)


def _fraction_pairs(Q, limit: int = 12) -> list:
    R = Q.base
    if R.finite:
        return [(a, s) for s in Q.S.sorted() for a in R.elements()]
    nums = R.candidates()[:limit]
    dens = [s for s in R.candidates()[1:limit] if s in Q.S][:4]
    return [(a, s) for s in dens for a in nums]


def check_extended_maps(ext: ExtendedMapOnFractions) -> Witness | None:
    """Well-definedness on representatives, agreement on R, and the derivation rule."""
    Q = ext.Q
    R = Q.base
    pairs = _fraction_pairs(Q)
    for a in (R.elements() if R.finite else R.candidates()):
        if ext.delta_bar(a, R.one) != Q.embed(ext.delta(a)) or ext.sigma_bar(a, R.one) != Q.embed(ext.sigma(a)):
            return Witness("extended-map", R, elements={"a": a}, info={"check": "restriction to R"})
    classes: dict = {}
    for a, s in pairs:
        x = Q.fraction(a, s)
        img = (ext.sigma_bar(a, s), ext.delta_bar(a, s))
        if x in classes and classes[x] != img:
            return Witness("extended-map", R, elements={"a": a, "s": s}, info={"check": "well-defined"})
        classes.setdefault(x, img)
    xs = list(classes)
    if not R.finite:
        xs = xs[:24]
    for x, y in itertools.product(xs, repeat=2):
        sx, dx = classes[x]
        sy, dy = classes[y]
        xy = Q.mul(x, y)
        s_xy, d_xy = ext.on(xy)
        if s_xy != Q.mul(sx, sy) or d_xy != Q.add(Q.mul(sx, dy), Q.mul(dx, y)):
            return Witness("extended-map", R, info={"check": "product rule", "x": Q.format(x), "y": Q.format(y)})
    return None


def fraction_presentation(p: SkewPresentation, Q) -> SkewPresentation:
    """The presentation over Q(R) with sigma-bar, delta-bar and embedded c, r."""
    exts = [extend_maps_to_fractions(s, d, Q) for s, d in zip(p.sigmas, p.deltas)]
    QR = Q.ring
    if isinstance(Q, UnitFractionRing):
        sigmas = [EndoMap(QR, table=[e.sigma_bar(a, QR.one) for a in QR.elements()], name=f"{e.sigma.name}-bar")
                  for e in exts]
        deltas = [SigmaDerivation(QR, sg, table=[e.delta_bar(a, QR.one) for a in QR.elements()],
                                  name=f"{e.delta.name}-bar") for sg, e in zip(sigmas, exts)]
    else:
        sigmas = [EndoMap(QR, (lambda x, e=e: e.sigma_bar(*x)), name=f"{e.sigma.name}-bar", cycle=e.sigma.cycle,
                          injective=e.sigma.injective, surjective=e.sigma.surjective) for e in exts]
        deltas = [SigmaDerivation(QR, sg, (lambda x, e=e: e.delta_bar(*x)), name=f"{e.delta.name}-bar")
                  for sg, e in zip(sigmas, exts)]
        for d, e in zip(deltas, exts):
            d.is_zero = e.delta.is_zero
    c = {k: Q.embed(v) for k, v in p.c.items()}
    r = {k: tuple(Q.embed(v) for v in vec) for k, vec in p.r.items()}
    return SkewPresentation(QR, p.n, sigmas, deltas, c, r, order=p.order, bijective=p.declared_bijective,
                            name=f"Q({p.name or p.ring.name()})", config=p.config)


def verify_localization(p: SkewPresentation, D: int = 2, config: SearchConfig = DEFAULT_CONFIG) -> TheoremReport:
    """R is weak skew-Armendariz iff Q(R) is, on a bijective extension."""
    from .properties import decide
    from .theorems import _equivalence, _safe

    inst = p.name or f"{p.ring.name()} n={p.n}"
    tid = "LOCALIZATION_ARMENDARIZ"
    gates = []
    bij = Verdict("bijective", Status.HOLDS if p.is_bijective else Status.FAILS)
    gates.append(bij)
    if bij.fails:
        return TheoremReport(tid, inst, D, TheoremStatus.HYPOTHESES_NOT_MET, {"bijective": bij})
    try:
        Q = localize(p.ring)
        S = Q.S
        gates.append(check_ore(p.ring, S, "left"))
        if isinstance(Q, UnitFractionRing) and p.ring.finite:
            bad = Q.verify_isomorphism()
            gates.append(Verdict("Q(R) isomorphic to R", Status.FAILS if bad else Status.HOLDS, witness=bad))
        qp = fraction_presentation(p, Q)
        bad = None
        for s, d in zip(p.sigmas, p.deltas):
            bad = bad or check_extended_maps(extend_maps_to_fractions(s, d, Q))
        gates.append(Verdict("extended maps", Status.FAILS if bad else Status.HOLDS, witness=bad,
                             scope="exhaustive" if p.ring.finite else "sampled"))
    except SigmaDoesNotPreserveS as exc:
        gates.append(Verdict("sigma(S) = S", Status.FAILS, note=str(exc)))
        return TheoremReport(tid, inst, D, TheoremStatus.HYPOTHESES_NOT_MET, {g.property: g for g in gates})
    except SkewPBWError as exc:
        return TheoremReport(tid, inst, D, TheoremStatus.INCONCLUSIVE, {g.property: g for g in gates},
                             note=f"{type(exc).__name__}: {exc}")
    left = _safe("R WeakSkewArmendariz", lambda: decide(p, "WeakSkewArmendariz", 1, config))
    right = _safe("Q(R) WeakSkewArmendariz", lambda: decide(qp, "WeakSkewArmendariz", 1, config))
    status = _equivalence(gates, [left, right])
    note = "Q(R) is R itself for a finite ring" if p.ring.finite else ""
    return TheoremReport(tid, inst, D, status, {g.property: g for g in gates},
                         {left.property: left, right.property: right}, None, note)


__all__ = [
    "regular_elements", "MultiplicativeSet", "multiplicative_set", "check_ore", "localize",
    "UnitFractionRing", "PairFractionRing", "FractionFieldRing", "ExtendedMapOnFractions",
    "extend_maps_to_fractions", "check_extended_maps", "fraction_presentation", "verify_localization",
]
