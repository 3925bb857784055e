"""Annihilators, ideals, idempotents and the classical property deciders.

Subsets of a finite ring are handled as Python int bitmasks (bit ``k`` set
when element ``k`` belongs).  Every decider iterates in ascending index
order, so its witness is the canonical minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_CONFIG, SearchConfig
from .errors import SizeCapExceeded, UnsupportedInfinite
from .rings import Ring
from .verdict import Status, Verdict, Witness

CLASSICAL = ("Reduced", "Abelian", "IFP", "Baer", "QuasiBaer", "PP", "PQBaer")


def members(mask: int) -> list[int]:
    out, k = [], 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def to_mask(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def _need_finite(ring: Ring, cap: int | None = None):
    if not ring.finite:
        raise UnsupportedInfinite(f"{ring.name()} is infinite; enumeration is not available")
    if cap is not None and ring.m > cap:
        raise SizeCapExceeded(f"ring has {ring.m} elements, cap is {cap}")


# --------------------------------------------------------------------------
# basic sets
# --------------------------------------------------------------------------


class _Tables:
    """Per-ring cache of annihilator masks."""

    _cache: dict = {}

    @classmethod
    def of(cls, ring):
        key = id(ring)
        hit = cls._cache.get(key)
        if hit is not None and hit[0] is ring:
            return hit[1]
        M = ring.M
        zero = M == 0
        weights = [1 << k for k in range(ring.m)]
        right = [sum(w for w, z in zip(weights, row) if z) for row in zero.tolist()]
        left = [sum(w for w, z in zip(weights, col) if z) for col in zero.T.tolist()]
        data = {"r": right, "l": left, "full": (1 << ring.m) - 1}
        cls._cache[key] = (ring, data)
        return data


def right_annihilator(ring: Ring, subset, config: SearchConfig = DEFAULT_CONFIG) -> set:
    """{r : s r = 0 for every s in subset}; the empty subset acts as {0}."""
    _need_finite(ring, config.max_ring_size)
    t = _Tables.of(ring)
    mask = t["full"]
    for s in subset:
        mask &= t["r"][s]
    return set(members(mask))


def left_annihilator(ring: Ring, subset, config: SearchConfig = DEFAULT_CONFIG) -> set:
    _need_finite(ring, config.max_ring_size)
    t = _Tables.of(ring)
    mask = t["full"]
    for s in subset:
        mask &= t["l"][s]
    return set(members(mask))


def idempotents(ring: Ring) -> list:
    """All e with e^2 = e.  Structured rings return their closed-form list."""
    return ring.idempotent_list()


def semicentral_idempotents(ring: Ring, side: str = "left") -> list[int]:
    """Left: e x e = x e for all x.  Right: e x e = e x for all x."""
    _need_finite(ring)
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    M = ring.M
    out = []
    for e in ring.idempotent_list():
        exe = M[M[e, :], e]
        target = M[:, e] if side == "left" else M[e, :]
        if (exe == target).all():
            out.append(e)
    return out


def central_idempotents(ring: Ring) -> list[int]:
    _need_finite(ring)
    M = ring.M
    return [e for e in ring.idempotent_list() if (M[e, :] == M[:, e]).all()]


def right_ideal_generated(ring: Ring, e: int) -> int:
    """Mask of eR."""
    return to_mask(set(ring.M[e, :].tolist()))


def additive_closure(ring: Ring, mask: int) -> int:
    """Smallest additive subgroup containing the given elements."""
    add = ring._add
    gens = members(mask)
    group = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = add[x][g]
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return to_mask(group)


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    elements: frozenset
    is_left: bool
    is_right: bool
    generators: tuple = ()

    @property
    def is_two_sided(self) -> bool:
        return self.is_left and self.is_right

    @property
    def mask(self) -> int:
        return to_mask(self.elements)

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    def __repr__(self):
        return "Ideal{" + ", ".join(self.ring.format(e) for e in self.sorted()) + "}"


def make_ideal(ring: Ring, elements, generators=()) -> Ideal:
    """Build an Ideal after verifying additive closure; side flags are computed."""
    els = frozenset(elements)
    add, mul = ring._add, ring._mul
    if 0 not in els or any(add[a][b] not in els for a in els for b in els):
        raise ValueError("not an additive subgroup")
    is_left = all(mul[x][a] in els for x in range(ring.m) for a in els)
    is_right = all(mul[a][x] in els for x in range(ring.m) for a in els)
    return Ideal(ring, els, is_left, is_right, tuple(generators))


def principal_two_sided(ring: Ring, a: int) -> int:
    """Mask of RaR, the additive closure of all x a y."""
    M = ring.M
    xay = M[M[:, a][:, None], np.arange(ring.m)[None, :]]
    return additive_closure(ring, to_mask(set(xay.ravel().tolist())))


def enumerate_two_sided_ideals(ring: Ring, config: SearchConfig = DEFAULT_CONFIG) -> list[Ideal]:
    """Every two-sided ideal, smallest first.

    Each ideal is a sum of principal ideals RaR, so the list is the closure of
    the principal ideals under pairwise sums.
    """
    _need_finite(ring, config.max_ideal_ring_size)
    gen_of: dict[int, tuple] = {}
    for a in range(ring.m):
        gen_of.setdefault(principal_two_sided(ring, a), (a,))
    found = dict(gen_of)
    frontier = list(found)
    while frontier:
        nxt = []
        base = list(found)
        for i in frontier:
            for j in base:
                s = additive_closure(ring, i | j)
                if s not in found:
                    found[s] = tuple(sorted(set(found[i]) | set(found[j])))
                    nxt.append(s)
        frontier = nxt
    ideals = [Ideal(ring, frozenset(members(mk)), True, True, found[mk]) for mk in found]
    ideals.sort(key=lambda I: (len(I.elements), I.sorted()))
    return ideals


# --------------------------------------------------------------------------
# classical deciders
# --------------------------------------------------------------------------


def _fail(prop, ring, kind, note="", **parts):
    w = Witness(kind=kind, ring=ring)
    for k, v in parts.items():
        if k.startswith("set_"):
            w.element_sets[k[4:]] = list(v)
        elif k.startswith("info_"):
            w.info[k[5:]] = v
        else:
            w.elements[k] = v
    return Verdict(prop, Status.FAILS, witness=w, note=note)


def _idempotent_right_ideals(ring) -> set[int]:
    return {right_ideal_generated(ring, e) for e in ring.idempotent_list()}


def decide_classical(ring: Ring, prop: str, config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    if prop not in CLASSICAL:
        raise ValueError(f"unknown classical property {prop!r}")
    if not ring.finite:
        return _decide_structured(ring, prop)
    _need_finite(ring, config.max_ring_size)
    M = ring.M
    m = ring.m
    t = _Tables.of(ring)
    if prop == "Reduced":
        for a in range(1, m):
            if M[a, a] == 0:
                return _fail(prop, ring, "nilpotent", a=a)
        return Verdict(prop, Status.HOLDS)
    if prop == "Abelian":
        for e in ring.idempotent_list():
            for x in range(m):
                if M[e, x] != M[x, e]:
                    return _fail(prop, ring, "noncentral-idempotent", e=e, x=x)
        return Verdict(prop, Status.HOLDS)
    if prop == "IFP":
        for a in range(m):
            ann = members(t["r"][a])
            for b in ann:
                for x in range(m):
                    if M[a, M[x, b]] != 0:
                        return _fail(prop, ring, "ifp", a=a, b=b, x=x)
        return Verdict(prop, Status.HOLDS)

    gens = _idempotent_right_ideals(ring)
    if prop == "PP":
        for a in range(m):
            mask = t["r"][a]
            if mask not in gens:
                return _fail(prop, ring, "annihilator-not-idempotent", set_subset=[a],
                             set_annihilator=members(mask))
        return Verdict(prop, Status.HOLDS)
    if prop == "PQBaer":
        for a in range(m):
            aR = set(M[a, :].tolist())
            mask = t["full"]
            for s in aR:
                mask &= t["r"][s]
            if mask not in gens:
                return _fail(prop, ring, "annihilator-not-idempotent", set_subset=sorted(aR),
                             set_annihilator=members(mask), info_generator=a)
        return Verdict(prop, Status.HOLDS)
    if prop == "QuasiBaer":
        for ideal in enumerate_two_sided_ideals(ring, config):
            mask = t["full"]
            for s in ideal.elements:
                mask &= t["r"][s]
            if mask not in gens:
                return _fail(prop, ring, "annihilator-not-idempotent", set_subset=ideal.sorted(),
                             set_annihilator=members(mask))
        return Verdict(prop, Status.HOLDS)
    # Baer: r(S) is the intersection of the r(s), so close the single-element
    # annihilators under intersection and test each one.
    subset_of: dict[int, tuple] = {t["full"]: ()}
    for a in range(m):
        subset_of.setdefault(t["r"][a], (a,))
    frontier = list(subset_of)
    while frontier:
        nxt = []
        singles = [(t["r"][a], a) for a in range(m)]
        for mask in frontier:
            for single, a in singles:
                inter = mask & single
                if inter not in subset_of:
                    subset_of[inter] = tuple(sorted(set(subset_of[mask]) | {a}))
                    nxt.append(inter)
        frontier = nxt
    bad = [mk for mk in subset_of if mk not in gens]
    if bad:
        mk = min(bad, key=lambda x: (bin(x).count("1"), members(x)))
        return _fail(prop, ring, "annihilator-not-idempotent", set_subset=list(subset_of[mk]),
                     set_annihilator=members(mk))
    return Verdict(prop, Status.HOLDS)


def _decide_structured(ring: Ring, prop: str) -> Verdict:
    if ring.is_domain:
        return Verdict(prop, Status.HOLDS, scope="analytic",
                       note="domain: annihilators are 0 or R, no zero divisors")
    if prop == "Reduced" and getattr(ring, "nilpotent_witness", lambda: None)() is not None:
        v = _fail(prop, ring, "nilpotent", a=ring.nilpotent_witness())
        v.scope = "analytic"
        return v
    if prop == "Abelian" and ring.idempotent_list() == [ring.zero, ring.one]:
        return Verdict(prop, Status.HOLDS, scope="analytic", note="only idempotents are 0 and 1")
    if prop in ("Abelian", "IFP") and ring.commutative:
        return Verdict(prop, Status.HOLDS, scope="analytic", note="commutative ring")
    raise UnsupportedInfinite(f"{prop} is not decidable here for {ring.name()}")


# --------------------------------------------------------------------------
# replay (plain loops, no cached tables)
# --------------------------------------------------------------------------


def replay_classical(ring: Ring, prop: str, witness: Witness) -> bool:
    """Re-check a classical witness directly against the definition."""
    R = ring
    el = witness.elements
    if prop == "Reduced":
        a = el["a"]
        return a != R.zero and R.mul(a, a) == R.zero
    if prop == "Abelian":
        e, x = el["e"], el["x"]
        return R.mul(e, e) == e and R.mul(e, x) != R.mul(x, e)
    if prop == "IFP":
        a, b, x = el["a"], el["b"], el["x"]
        return R.mul(a, b) == R.zero and R.mul(a, R.mul(x, b)) != R.zero
    subset = witness.element_sets["subset"]
    elems = list(range(R.m))
    ann = {r for r in elems if all(R.mul(s, r) == R.zero for s in subset)}
    if set(witness.element_sets["annihilator"]) != ann:
        return False
    if prop == "QuasiBaer":
        S = set(subset)
        closed = all(R.add(a, b) in S and R.mul(x, a) in S and R.mul(a, x) in S
                     for a in S for b in S for x in elems)
        if not closed:
            return False
    if prop == "PQBaer":
        g = witness.info["generator"]
        if set(subset) != {R.mul(g, x) for x in elems}:
            return False
    for e in elems:
        if R.mul(e, e) == e and {R.mul(e, x) for x in elems} == ann:
            return False
    return True
