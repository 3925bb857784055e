"""Degree-bounded slices of A over a finite coefficient ring.

A polynomial of degree <= D is a coefficient vector over the monomials of
degree <= D.  Coordinates run from the highest monomial (deglex) down to the
constant, and vectors are enumerated in lexicographic order of canonical
element indices, so small constants come first and every search has a
canonical first witness.

Left multiplication by a fixed f is additive in g, so for each f we tabulate
``f * (b x^beta)`` for every coordinate and coefficient, then fold the table
across all g at once with the ring's addition table.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import SkewPoly, SkewPresentation, monomials_up_to
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import SearchSpaceCapExceeded, UnsupportedInfinite
from .verdict import Status, Verdict, Witness


class BoundedSpace:
    def __init__(self, pres: SkewPresentation, degree: int, config: SearchConfig = DEFAULT_CONFIG):
        R = pres.ring
        if not R.finite:
            raise UnsupportedInfinite("bounded enumeration needs a finite coefficient ring")
        self.pres = pres
        self.ring = R
        self.D = degree
        self.config = config
        self.monos = list(reversed(monomials_up_to(pres.n, degree)))
        self.M = len(self.monos)
        self.m = R.m
        self.N = self.m ** self.M
        self.out_monos = monomials_up_to(pres.n, 2 * degree)
        self.out_index = {e: k for k, e in enumerate(self.out_monos)}
        self.K = len(self.out_monos)
        self._T = None
        self._vectors = None

    # caps -------------------------------------------------------------------
    def require(self, count: int, what: str):
        if count > self.config.cap_multiplications:
            raise SearchSpaceCapExceeded(
                f"{what} needs {count} products at degree {self.D}, cap is {self.config.cap_multiplications}")

    def require_pairs(self):
        self.require(self.N * self.N, "pair search")

    # conversions --------------------------------------------------------------
    @property
    def vectors(self) -> np.ndarray:
        if self._vectors is None:
            self.require(self.N, "enumeration")
            self._vectors = np.array(list(itertools.product(range(self.m), repeat=self.M)),
                                     dtype=np.int64).reshape(self.N, self.M)
        return self._vectors

    def poly(self, vec) -> SkewPoly:
        return SkewPoly(self.pres, {e: int(a) for e, a in zip(self.monos, vec) if a})

    def vector_of(self, f: SkewPoly) -> tuple:
        pos = {e: c for c, e in enumerate(self.monos)}
        vec = [0] * self.M
        for e, a in f.terms.items():
            if e not in pos:
                raise ValueError(f"{f} has degree above {self.D}")
            vec[pos[e]] = a
        return tuple(vec)

    def index_of(self, vec) -> int:
        k = 0
        for a in vec:
            k = k * self.m + int(a)
        return k

    def out_poly(self, row, monos=None) -> SkewPoly:
        monos = self.out_monos if monos is None else monos
        return SkewPoly(self.pres, {e: int(a) for e, a in zip(monos, row) if a})

    # tables ------------------------------------------------------------------
    @property
    def T(self) -> np.ndarray:
        """T[i, b, c, k] = coefficient k of x^mono_i * b * x^mono_c."""
        if self._T is None:
            T = np.zeros((self.M, self.m, self.M, self.K), dtype=np.int64)
            one = self.ring.one
            for i, a in enumerate(self.monos):
                for b in range(self.m):
                    for c, g in enumerate(self.monos):
                        for e, v in self.pres.term_product(one, a, b, g).items():
                            T[i, b, c, self.out_index[e]] = v
            self._T = T
        return self._T

    def _fold(self, stack: np.ndarray) -> np.ndarray:
        A = self.ring.A
        acc = stack[0]
        for x in stack[1:]:
            acc = A[acc, x]
        return acc

    def left_table(self, avec) -> np.ndarray:
        """P[c, b, k]: coefficient k of f * (b x^mono_c) for f with vector avec."""
        Mul = self.ring.M
        a = np.asarray(avec, dtype=np.int64)
        terms = Mul[a[:, None, None, None], self.T]
        return np.ascontiguousarray(self._fold(terms).transpose(1, 0, 2))

    def generic_table(self, f: SkewPoly, side: str = "left"):
        """Multiplication table of an arbitrary f against the space.

        Returns ``(P, monos)`` where P[c, b] is f * (b x^mono_c) (or the
        product in the other order for side='right') over ``monos``.
        """
        deg = (f.degree() or 0) + self.D
        monos = monomials_up_to(self.pres.n, deg)
        index = {e: k for k, e in enumerate(monos)}
        P = np.zeros((self.M, self.m, len(monos)), dtype=np.int64)
        for c, e in enumerate(self.monos):
            for b in range(1, self.m):
                t = self.pres.monomial(e, b)
                prod = f * t if side == "left" else t * f
                for ex, v in prod.terms.items():
                    P[c, b, index[ex]] = v
        return P, monos

    def products(self, P: np.ndarray) -> np.ndarray:
        """Rows: products against every g in enumeration order."""
        A = self.ring.A
        acc = np.zeros((1, P.shape[2]), dtype=np.int64)
        for c in range(self.M):
            acc = A[acc[:, None, :], P[c][None, :, :]].reshape(-1, P.shape[2])
        return acc

    def apply(self, P: np.ndarray, vec) -> np.ndarray:
        """Product against a single g."""
        return self._fold(np.stack([P[c, int(b)] for c, b in enumerate(vec)]))

    def embed(self, vec) -> np.ndarray:
        out = np.zeros(self.K, dtype=np.int64)
        for e, a in zip(self.monos, vec):
            out[self.out_index[e]] = a
        return out


# --------------------------------------------------------------------------
# generic first-violation scan
# --------------------------------------------------------------------------


def scan_pairs(space: BoundedSpace, violation, workers: int | None = None):
    """First (f, g) in f-major order with f g = 0 and violation(f, g) not None.

    ``violation(avec, bvec)`` returns a detail dict or None.  Returns
    ``(fi, gi, detail)`` or None, plus the number of pairs examined.
    """
    space.require_pairs()
    V = space.vectors
    N = space.N
    workers = workers or space.config.workers
    _ = space.T

    def run(lo, hi, stop_first=True):
        for fi in range(lo, hi):
            avec = V[fi]
            if not avec.any():
                continue
            prods = space.products(space.left_table(avec))
            zero = np.flatnonzero(~prods.any(axis=1))
            for gi in zero:
                if gi == 0:
                    continue
                detail = violation(avec, V[gi])
                if detail is not None:
                    return fi, int(gi), detail
        return None

    if workers <= 1:
        hit = run(0, N)
    else:
        bounds = np.linspace(0, N, workers + 1).astype(int)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda k: run(bounds[k], bounds[k + 1]), range(workers)))
        found = [r for r in results if r is not None]
        hit = min(found, key=lambda r: (r[0], r[1])) if found else None
    examined = N * N if hit is None else hit[0] * N + hit[1] + 1
    return hit, examined


def scan_singles(space: BoundedSpace, predicate):
    """First nonzero vector (enumeration order) satisfying predicate."""
    space.require(space.N, "single search")
    for k, vec in enumerate(space.vectors):
        if vec.any() and predicate(vec):
            return k, vec
    return None


# --------------------------------------------------------------------------
# probes of A
# --------------------------------------------------------------------------


def square_vector(space: BoundedSpace, vec) -> np.ndarray:
    return space.apply(space.left_table(vec), vec)


def is_reduced_up_to(pres: SkewPresentation, D: int, config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    """Search f != 0 of degree <= D with f^2 = 0."""
    space = BoundedSpace(pres, D, config)
    hit = scan_singles(space, lambda v: not square_vector(space, v).any())
    if hit is None:
        return Verdict("AReduced", Status.VERIFIED_UP_TO, bound=D, pairs_examined=space.N)
    k, vec = hit
    f = space.poly(vec)
    w = Witness("nilpotent-poly", pres.ring, polys={"f": f})
    return Verdict("AReduced", Status.FAILS, bound=D, witness=w, pairs_examined=k + 1)


def idempotents_up_to(pres: SkewPresentation, D: int, config: SearchConfig = DEFAULT_CONFIG) -> list[SkewPoly]:
    space = BoundedSpace(pres, D, config)
    space.require(space.N, "idempotent search")
    out = [pres.zero()]
    for vec in space.vectors:
        if vec.any() and np.array_equal(square_vector(space, vec), space.embed(vec)):
            out.append(space.poly(vec))
    return out


def bounded_right_annihilator(pres: SkewPresentation, F, D: int,
                              config: SearchConfig = DEFAULT_CONFIG) -> list[SkewPoly]:
    """{g : deg g <= D and f g = 0 for every f in F}, enumeration order."""
    space = BoundedSpace(pres, D, config)
    space.require(space.N * max(len(F), 1), "annihilator search")
    keep = np.ones(space.N, dtype=bool)
    for f in F:
        P, _ = space.generic_table(f, "left")
        keep &= ~space.products(P).any(axis=1)
    return [space.poly(space.vectors[k]) for k in np.flatnonzero(keep)]


def annihilator_mask(space: BoundedSpace, F) -> np.ndarray:
    keep = np.ones(space.N, dtype=bool)
    for f in F:
        P, _ = space.generic_table(f, "left")
        keep &= ~space.products(P).any(axis=1)
    return keep


def left_ideal_mask(space: BoundedSpace, e: SkewPoly) -> np.ndarray:
    """Which vectors g of degree <= D lie in e * A (checked as g = e g)."""
    P, monos = space.generic_table(e, "left")
    prods = space.products(P)
    index = {m: k for k, m in enumerate(monos)}
    emb = np.zeros((space.N, len(monos)), dtype=np.int64)
    for c, mono in enumerate(space.monos):
        emb[:, index[mono]] = space.vectors[:, c]
    return (prods == emb).all(axis=1)
