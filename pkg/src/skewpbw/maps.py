"""Ring endomorphisms, sigma-derivations and their compositional closure."""

from __future__ import annotations

import itertools
import random
from typing import Callable

import numpy as np

from .config import DEFAULT_CONFIG, SearchConfig
from .errors import AxiomViolation, ClosureDiverges, InvalidTable, RingMismatch
from .rings import MatrixZQRing, PolyFieldRing, ProductRing, Ring


class EndoMap:
    """A unital ring endomorphism.

    On finite rings the action is an index table.  On structured rings it is a
    closed-form function; ``cycle`` records the power behaviour as
    ``(index, period)`` with ``s^(index + period) = s^index``, or ``None`` when
    the powers never repeat.
    """

    def __init__(self, ring: Ring, fn: Callable | None = None, *, table=None, name: str = "map",
                 cycle: tuple[int, int] | None = None, injective: bool | None = None,
                 surjective: bool | None = None):
        self.ring = ring
        self.name = name
        if ring.finite:
            if table is None:
                table = [fn(a) for a in range(ring.m)]
            table = tuple(int(v) for v in table)
            if len(table) != ring.m or min(table) < 0 or max(table) >= ring.m:
                raise InvalidTable(f"map table for {name} must list {ring.m} valid indices")
            self.table = table
            self.fn = table.__getitem__
            self.injective = len(set(table)) == ring.m
            self.surjective = self.injective
            self.cycle = _table_cycle(table)
        else:
            if fn is None:
                raise InvalidTable("structured maps need a closed-form rule")
            self.table = None
            self.fn = fn
            self.cycle = cycle
            self.injective = injective
            self.surjective = surjective

    def __call__(self, a):
        return self.fn(a)

    @property
    def is_identity(self) -> bool:
        if self.table is not None:
            return self.table == tuple(range(self.ring.m))
        return self.cycle == (0, 1)

    @property
    def bijective(self) -> bool:
        return bool(self.injective and self.surjective)

    def key(self):
        return self.table if self.table is not None else self.name

    def __eq__(self, other):
        return isinstance(other, EndoMap) and self.ring == other.ring and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"EndoMap({self.name})"

    def compose(self, other: "EndoMap") -> "EndoMap":
        """``self o other`` (apply ``other`` first)."""
        if self.ring != other.ring:
            raise RingMismatch("maps on different rings")
        if self.is_identity:
            return other
        if other.is_identity:
            return self
        if self.table is not None:
            t = tuple(self.table[other.table[a]] for a in range(self.ring.m))
            return EndoMap(self.ring, table=t, name=f"{self.name}.{other.name}")
        f, g = self.fn, other.fn
        return EndoMap(self.ring, lambda a: f(g(a)), name=f"{self.name}.{other.name}",
                       injective=(self.injective and other.injective) or None)

    def power(self, k: int) -> "EndoMap":
        if k == 0:
            return identity_map(self.ring)
        if k == 1:
            return self
        if self.table is not None:
            out = self
            for _ in range(k - 1):
                out = self.compose(out)
            return out
        if self.cycle is not None:
            idx, per = self.cycle
            if k >= idx + per:
                k = idx + (k - idx) % per
            if k == 1:
                return self
        f = self.fn

        def pw(a, k=k):
            for _ in range(k):
                a = f(a)
            return a

        return EndoMap(self.ring, pw, name=f"{self.name}^{k}", cycle=None,
                       injective=self.injective, surjective=self.surjective)


def _table_cycle(table):
    seen = {}
    cur = tuple(range(len(table)))
    k = 0
    while cur not in seen:
        seen[cur] = k
        cur = tuple(table[c] for c in cur)
        k += 1
    idx = seen[cur]
    return idx, k - idx


def identity_map(ring: Ring) -> EndoMap:
    if ring.finite:
        return EndoMap(ring, table=range(ring.m), name="identity")
    return EndoMap(ring, lambda a: a, name="identity", cycle=(0, 1), injective=True, surjective=True)


class SigmaDerivation:
    """Additive map with d(ab) = s(a) d(b) + d(a) b."""

    def __init__(self, ring: Ring, sigma: EndoMap, fn: Callable | None = None, *, table=None,
                 name: str = "delta"):
        if sigma.ring != ring:
            raise RingMismatch("derivation and its endomorphism live on different rings")
        self.ring = ring
        self.sigma = sigma
        self.name = name
        if ring.finite:
            if table is None:
                table = [fn(a) for a in range(ring.m)]
            table = tuple(int(v) for v in table)
            if len(table) != ring.m or min(table) < 0 or max(table) >= ring.m:
                raise InvalidTable(f"derivation table for {name} must list {ring.m} valid indices")
            self.table = table
            self.fn = table.__getitem__
        else:
            self.table = None
            self.fn = fn
        self.is_zero = name == "zero" or (self.table is not None and not any(self.table))

    def __call__(self, a):
        return self.fn(a)

    def __repr__(self):
        return f"SigmaDerivation({self.name})"


def zero_derivation(ring: Ring, sigma: EndoMap) -> SigmaDerivation:
    return SigmaDerivation(ring, sigma, lambda a: ring.zero, name="zero")


def inner_derivation(ring: Ring, sigma: EndoMap, a) -> SigmaDerivation:
    """d(r) = a r - s(r) a, always a sigma-derivation."""
    return SigmaDerivation(ring, sigma, lambda r: ring.sub(ring.mul(a, r), ring.mul(sigma(r), a)),
                           name=f"inner({ring.format(a)})")


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


def _structured_pairs(ring: Ring, config: SearchConfig):
    gens = ring.generators()
    yield from itertools.product(gens, repeat=2)
    rng = random.Random(config.seed)
    for _ in range(config.structured_samples):
        yield ring.sample(rng), ring.sample(rng)


def validate_endomorphism(sigma: EndoMap, config: SearchConfig = DEFAULT_CONFIG) -> EndoMap:
    """Check additivity, multiplicativity and s(1) = 1.

    Injectivity is recorded on the map but not required: some example maps
    (evaluation at zero) are not injective, and results that need it gate on
    ``sigma.injective``.
    """
    R = sigma.ring
    if sigma(R.one) != R.one:
        raise AxiomViolation("sigma(1) = 1", (R.one,))
    if R.finite:
        s = np.asarray(sigma.table)
        bad = s[R.A] != R.A[s[:, None], s[None, :]]
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            raise AxiomViolation("sigma additive", (a, b))
        bad = s[R.M] != R.M[s[:, None], s[None, :]]
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            raise AxiomViolation("sigma multiplicative", (a, b))
        return sigma
    for a, b in _structured_pairs(R, config):
        if sigma(R.add(a, b)) != R.add(sigma(a), sigma(b)):
            raise AxiomViolation("sigma additive", (a, b))
        if sigma(R.mul(a, b)) != R.mul(sigma(a), sigma(b)):
            raise AxiomViolation("sigma multiplicative", (a, b))
    return sigma


def validate_derivation(delta: SigmaDerivation, config: SearchConfig = DEFAULT_CONFIG) -> SigmaDerivation:
    R = delta.ring
    sg = delta.sigma
    if R.finite:
        d = np.asarray(delta.table)
        s = np.asarray(sg.table)
        bad = d[R.A] != R.A[d[:, None], d[None, :]]
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            raise AxiomViolation("delta additive", (a, b))
        lhs = d[R.M]
        rhs = R.A[R.M[s[:, None], d[None, :]], R.M[d[:, None], np.arange(R.m)[None, :]]]
        bad = lhs != rhs
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            raise AxiomViolation("delta Leibniz rule", (a, b))
    else:
        for a, b in _structured_pairs(R, config):
            if delta(R.add(a, b)) != R.add(delta(a), delta(b)):
                raise AxiomViolation("delta additive", (a, b))
            if delta(R.mul(a, b)) != R.add(R.mul(sg(a), delta(b)), R.mul(delta(a), b)):
                raise AxiomViolation("delta Leibniz rule", (a, b))
    if delta(R.one) != R.zero:
        raise AxiomViolation("delta(1) = 0", (R.one,))
    return delta


# --------------------------------------------------------------------------
# builtins
# --------------------------------------------------------------------------


def builtin_sigma(ring: Ring, name: str) -> EndoMap:
    if name == "identity":
        return identity_map(ring)
    if name == "swap":
        if not isinstance(ring, ProductRing) or len(ring.factors) != 2 or ring.factors[0] != ring.factors[1]:
            raise InvalidTable("swap needs a product of two equal factors")
        return EndoMap(ring, lambda a: ring._rep_index[ring.reps[a][::-1]], name="swap")
    if name == "half":
        if not isinstance(ring, MatrixZQRing):
            raise InvalidTable("half is defined on the structured matrix ring")
        return EndoMap(ring, lambda x: (x[0], x[1] / 2), name="half", cycle=None,
                       injective=True, surjective=True)
    if name == "eval0":
        if not isinstance(ring, PolyFieldRing):
            raise InvalidTable("eval0 is defined on Z_p[t]")
        return EndoMap(ring, lambda f: ring._trim(f[:1]), name="eval0", cycle=(1, 1),
                       injective=False, surjective=False)
    raise InvalidTable(f"unknown builtin endomorphism {name!r}")


def builtin_delta(ring: Ring, sigma: EndoMap, name: str, element=None) -> SigmaDerivation:
    if name == "zero":
        return zero_derivation(ring, sigma)
    if name == "derivative":
        if not isinstance(ring, PolyFieldRing):
            raise InvalidTable("derivative is defined on Z_p[t]")
        p = ring.p
        return SigmaDerivation(ring, sigma, lambda f: ring.make(k * f[k] % p for k in range(1, len(f))),
                               name="derivative")
    if name == "inner":
        if element is None:
            raise InvalidTable("inner derivation needs an element")
        return inner_derivation(ring, sigma, ring.parse(element) if isinstance(element, str) else element)
    raise InvalidTable(f"unknown builtin derivation {name!r}")


# --------------------------------------------------------------------------
# closure
# --------------------------------------------------------------------------


def monoid_closure(sigmas: list[EndoMap]) -> list[EndoMap]:
    """All composites of the given maps, identity first, closed under composition."""
    if not sigmas:
        raise InvalidTable("need at least one map")
    ring = sigmas[0].ring
    ident = identity_map(ring)
    if ring.finite:
        found = [ident]
        seen = {ident.key()}
        frontier = [ident]
        while frontier:
            nxt = []
            for f in frontier:
                for s in sigmas:
                    g = s.compose(f)
                    if g.key() not in seen:
                        seen.add(g.key())
                        found.append(g)
                        nxt.append(g)
            frontier = nxt
        return found
    distinct = {}
    for s in sigmas:
        if not s.is_identity:
            distinct.setdefault(s.name, s)
    if not distinct:
        return [ident]
    if len(distinct) > 1:
        raise ClosureDiverges("closure of several structured maps is not tracked")
    (s,) = distinct.values()
    if s.cycle is None:
        raise ClosureDiverges(f"{s.name} has infinite order")
    idx, per = s.cycle
    return [ident] + [s.power(k) for k in range(1, idx + per)]


def sigma_power_bounds(sigmas: list[EndoMap]) -> list[int] | None:
    """Exponent bound per variable beyond which s_i powers repeat, or None."""
    out = []
    for s in sigmas:
        if s.is_identity:
            out.append(0)
        elif s.cycle is None:
            return None
        else:
            idx, per = s.cycle
            out.append(idx + per - 1)
    return out


def sigma_alpha(sigmas: list[EndoMap], alpha) -> Callable:
    """The composite s_1^a1 o ... o s_n^an as a function (s_n applied first)."""

    def apply(r):
        for s, k in zip(reversed(sigmas), reversed(tuple(alpha))):
            for _ in range(k):
                r = s(r)
        return r

    return apply


def sigma_alpha_family(sigmas: list[EndoMap], alpha_cap: int):
    """Exponent vectors covering every distinct s^alpha.

    Returns ``(alphas, exact)``.  When every s_i has a finite cycle the list
    is exhaustive; otherwise it covers |alpha| <= alpha_cap and ``exact`` is
    False.
    """
    n = len(sigmas)
    bounds = sigma_power_bounds(sigmas)
    if bounds is not None:
        alphas = list(itertools.product(*(range(b + 1) for b in bounds)))
        exact = True
    else:
        alphas = [a for a in itertools.product(range(alpha_cap + 1), repeat=n) if sum(a) <= alpha_cap]
        exact = False
    alphas.sort(key=lambda a: (sum(a), tuple(reversed(a))))
    return alphas, exact


__all__ = [
    "EndoMap", "SigmaDerivation", "identity_map", "zero_derivation", "inner_derivation",
    "validate_endomorphism", "validate_derivation", "builtin_sigma", "builtin_delta",
    "monoid_closure", "sigma_alpha", "sigma_alpha_family", "sigma_power_bounds",
]
