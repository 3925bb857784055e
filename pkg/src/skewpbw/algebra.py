"""Skew PBW presentations and the normal-form product.

Elements are finite maps from exponent tuples to nonzero LEFT coefficients
on standard monomials ``x1^a1 ... xn^an``.  Products are normalized with two
rules, applied from the highest-index variable inward:

* ``x_i r = sigma_i(r) x_i + delta_i(r)`` moves coefficients left;
* ``x_j x_i = c_ij x_i x_j + r0 + sum_k r_k x_k`` (``j > i``) straightens
  variable inversions.

Intermediate results are memoized per presentation.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .config import DEFAULT_CONFIG, SearchConfig
from .errors import (HypothesesFail, InvalidTable, PresentationInconsistent, RewriteBudgetExceeded,
                     RingMismatch)
from .maps import EndoMap, SigmaDerivation, identity_map, zero_derivation

ORDERS = ("deglex", "lex", "degrevlex")


def order_key(kind: str) -> Callable:
    """Sort key realizing the monomial order with x_n > ... > x_1."""
    if kind == "deglex":
        return lambda a: (sum(a),) + tuple(reversed(a))
    if kind == "lex":
        return lambda a: tuple(reversed(a))
    if kind == "degrevlex":
        return lambda a: (sum(a),) + tuple(-v for v in a)
    raise InvalidTable(f"unknown monomial order {kind!r}")


def monomials_up_to(n: int, degree: int, order: str = "deglex") -> list[tuple]:
    """Exponent vectors of total degree <= degree, ascending in the order."""
    out = [a for a in itertools.product(range(degree + 1), repeat=n) if sum(a) <= degree]
    out.sort(key=order_key(order))
    return out


def _unit(n, k):
    return tuple(1 if i == k else 0 for i in range(n))


class SkewPresentation:
    """Data (R, n, sigma, delta, c, r) of a skew PBW extension.

    ``c`` maps 1-based pairs (i, j), i < j, to c_ij; missing pairs default to
    1.  ``r`` maps the same pairs to the vector (r0, r1, ..., rn); missing
    pairs default to zero.
    """

    def __init__(self, ring, n: int, sigmas=None, deltas=None, c=None, r=None, *,
                 order: str = "deglex", quasi_commutative: bool = False, bijective: bool = False,
                 name: str = "", config: SearchConfig = DEFAULT_CONFIG):
        if n < 1:
            raise InvalidTable("need at least one variable")
        self.ring = ring
        self.n = n
        self.name = name
        self.sigmas = tuple(sigmas) if sigmas is not None else tuple(identity_map(ring) for _ in range(n))
        if deltas is None:
            deltas = [zero_derivation(ring, s) for s in self.sigmas]
        self.deltas = tuple(deltas)
        if len(self.sigmas) != n or len(self.deltas) != n:
            raise InvalidTable(f"need exactly {n} sigmas and {n} deltas")
        for s, d in zip(self.sigmas, self.deltas):
            if s.ring != ring or d.ring != ring:
                raise RingMismatch("maps must act on the coefficient ring")
        self.c = {}
        self.r = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                self.c[(i, j)] = ring.one
                self.r[(i, j)] = tuple(ring.zero for _ in range(n + 1))
        for key, val in (c or {}).items():
            key = tuple(key)
            if key not in self.c:
                raise InvalidTable(f"c index {key} must satisfy 1 <= i < j <= {n}")
            self.c[key] = val
        for key, vec in (r or {}).items():
            key = tuple(key)
            if key not in self.r:
                raise InvalidTable(f"r index {key} must satisfy 1 <= i < j <= {n}")
            vec = tuple(vec)
            if len(vec) != n + 1:
                raise InvalidTable(f"r vector for {key} needs {n + 1} entries")
            self.r[key] = vec
        self.order = order
        self.key = order_key(order)
        self.declared_quasi_commutative = quasi_commutative
        self.declared_bijective = bijective
        self.config = config
        self._coeff_memo: dict = {}
        self._var_memo: dict = {}
        self._mono_memo: dict = {}
        self._steps = 0
        self.zero_exp = tuple(0 for _ in range(n))

    def __repr__(self):
        return f"<SkewPresentation {self.name or self.ring.name()} n={self.n}>"

    # structure ---------------------------------------------------------------
    @property
    def is_quasi_commutative(self) -> bool:
        R = self.ring
        return all(d.is_zero for d in self.deltas) and all(
            all(R.is_zero(v) for v in vec) for vec in self.r.values())

    @property
    def is_bijective(self) -> bool:
        return all(s.bijective for s in self.sigmas) and all(self.ring.is_unit(c) for c in self.c.values())

    @property
    def all_sigmas_injective(self) -> bool:
        return all(s.injective for s in self.sigmas)

    @property
    def deltas_zero(self) -> bool:
        return all(d.is_zero for d in self.deltas)

    # rewrite core ------------------------------------------------------------
    def _tick(self):
        self._steps += 1
        if self._steps > self.config.rewrite_budget:
            raise RewriteBudgetExceeded(f"more than {self.config.rewrite_budget} rewrite steps")

    def _addto(self, acc: dict, exp, coeff):
        R = self.ring
        if R.is_zero(coeff):
            return
        cur = acc.get(exp)
        if cur is None:
            acc[exp] = coeff
        else:
            s = R.add(cur, coeff)
            if R.is_zero(s):
                del acc[exp]
            else:
                acc[exp] = s

    def _scale_into(self, acc: dict, a, poly: dict):
        """acc += a * poly (a multiplies on the left)."""
        R = self.ring
        for exp, c in poly.items():
            self._addto(acc, exp, R.mul(a, c))

    def mono_coeff(self, alpha: tuple, r) -> dict:
        """Normal form of x^alpha * r."""
        key = (alpha, r)
        hit = self._coeff_memo.get(key)
        if hit is not None:
            return hit
        R = self.ring
        if R.is_zero(r):
            out = {}
        elif not any(alpha):
            out = {alpha: r}
        else:
            self._tick()
            k = max(i for i, v in enumerate(alpha) if v)
            rest = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
            out = {}
            # x^rest * sigma_k(r) * x_k
            for gamma, c in self.mono_coeff(rest, self.sigmas[k](r)).items():
                self._scale_into(out, c, self.mono_var(gamma, k))
            # x^rest * delta_k(r)
            for gamma, c in self.mono_coeff(rest, self.deltas[k](r)).items():
                self._addto(out, gamma, c)
        self._coeff_memo[key] = out
        return out

    def mono_var(self, gamma: tuple, j: int) -> dict:
        """Normal form of x^gamma * x_j (0-based j)."""
        key = (gamma, j)
        hit = self._var_memo.get(key)
        if hit is not None:
            return hit
        R = self.ring
        high = [i for i, v in enumerate(gamma) if v and i > j]
        if not high:
            out = {gamma[:j] + (gamma[j] + 1,) + gamma[j + 1:]: R.one}
        else:
            self._tick()
            k = max(high)
            rest = gamma[:k] + (gamma[k] - 1,) + gamma[k + 1:]
            c = self.c[(j + 1, k + 1)]
            vec = self.r[(j + 1, k + 1)]
            out = {}
            # x^rest * c * x_j * x_k
            for d1, a1 in self.mono_coeff(rest, c).items():
                for d2, a2 in self.mono_var(d1, j).items():
                    self._scale_into(out, R.mul(a1, a2), self.mono_var(d2, k))
            # x^rest * r0
            for d1, a1 in self.mono_coeff(rest, vec[0]).items():
                self._addto(out, d1, a1)
            # x^rest * r_l * x_l
            for l in range(self.n):
                if not R.is_zero(vec[l + 1]):
                    for d1, a1 in self.mono_coeff(rest, vec[l + 1]).items():
                        self._scale_into(out, a1, self.mono_var(d1, l))
        self._var_memo[key] = out
        return out

    def mono_mono(self, alpha: tuple, beta: tuple) -> dict:
        """Normal form of x^alpha * x^beta."""
        key = (alpha, beta)
        hit = self._mono_memo.get(key)
        if hit is not None:
            return hit
        if not any(beta):
            out = {alpha: self.ring.one}
        else:
            k = max(i for i, v in enumerate(beta) if v)
            rest = beta[:k] + (beta[k] - 1,) + beta[k + 1:]
            out = {}
            for gamma, c in self.mono_mono(alpha, rest).items():
                self._scale_into(out, c, self.mono_var(gamma, k))
        self._mono_memo[key] = out
        return out

    def term_product(self, a, alpha, b, beta) -> dict:
        """(a x^alpha)(b x^beta) = a * (x^alpha b) * x^beta."""
        R = self.ring
        out: dict = {}
        for gamma, d in self.mono_coeff(alpha, b).items():
            self._scale_into(out, R.mul(a, d), self.mono_mono(gamma, beta))
        return out

    def mul_dicts(self, f: dict, g: dict) -> dict:
        self._steps = 0
        out: dict = {}
        for alpha, a in f.items():
            for beta, b in g.items():
                for exp, c in self.term_product(a, alpha, b, beta).items():
                    self._addto(out, exp, c)
        return out

    # element construction -----------------------------------------------------
    def poly(self, terms=None) -> "SkewPoly":
        return SkewPoly(self, terms or {})

    def const(self, r) -> "SkewPoly":
        """The constant polynomial r for a ring element r."""
        return SkewPoly(self, {self.zero_exp: r})

    def integer(self, k: int) -> "SkewPoly":
        """k * 1."""
        return self.const(self.ring.from_int(k))

    def var(self, i: int) -> "SkewPoly":
        """x_i with 1-based i."""
        if not 1 <= i <= self.n:
            raise InvalidTable(f"variable index {i} out of range 1..{self.n}")
        return SkewPoly(self, {_unit(self.n, i - 1): self.ring.one})

    def monomial(self, alpha, coeff=None) -> "SkewPoly":
        coeff = self.ring.one if coeff is None else coeff
        return SkewPoly(self, {tuple(alpha): coeff})

    def one(self) -> "SkewPoly":
        return self.const(self.ring.one)

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, {})

    # named operations -----------------------------------------------------------
    def var_times_coeff(self, i: int, r) -> "SkewPoly":
        return SkewPoly(self, self.mono_coeff(_unit(self.n, i - 1), r))

    def swap_rewrite(self, j: int, i: int) -> "SkewPoly":
        if not j > i:
            raise InvalidTable("swap_rewrite needs j > i")
        return SkewPoly(self, self.mono_var(_unit(self.n, j - 1), i - 1))

    def monomial_times_coeff(self, alpha, r) -> "SkewPoly":
        return SkewPoly(self, self.mono_coeff(tuple(alpha), r))


class SkewPoly:
    """Immutable element of A in PBW normal form."""

    __slots__ = ("pres", "terms", "_hash")

    def __init__(self, pres: SkewPresentation, terms: dict):
        R = pres.ring
        clean = {}
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != pres.n:
                raise InvalidTable(f"exponent {exp} has wrong length")
            if not R.is_zero(c):
                clean[exp] = c
        object.__setattr__(self, "pres", pres)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("SkewPoly is immutable")

    # coercion -------------------------------------------------------------------
    def _lift(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            if other.pres is not self.pres:
                raise RingMismatch("polynomials from different presentations")
            return other
        if isinstance(other, int):
            return self.pres.integer(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for exp, c in other.terms.items():
            self.pres._addto(acc, exp, c)
        return SkewPoly(self.pres, acc)

    __radd__ = __add__

    def __neg__(self):
        R = self.pres.ring
        return SkewPoly(self.pres, {e: R.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return SkewPoly(self.pres, self.pres.mul_dicts(self.terms, other.terms))

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        out = self.pres.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, a) -> "SkewPoly":
        """Left multiplication by a ring element."""
        R = self.pres.ring
        return SkewPoly(self.pres, {e: R.mul(a, c) for e, c in self.terms.items()})

    def map_coefficients(self, fn) -> "SkewPoly":
        return SkewPoly(self.pres, {e: fn(c) for e, c in self.terms.items()})

    # comparison -----------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.pres.integer(other)
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.pres is other.pres and self.terms == other.terms

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # leading data ---------------------------------------------------------------
    def sorted_terms(self, order: str | None = None) -> list[tuple]:
        key = self.pres.key if order is None else order_key(order)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def degree(self) -> int | None:
        return max((sum(e) for e in self.terms), default=None)

    def leading_data(self, order: str | None = None) -> dict:
        if not self.terms:
            R = self.pres.ring
            return {"lm": self.pres.zero(), "lc": R.zero, "lt": self.pres.zero(), "exp": None, "deg": None}
        exp, c = self.sorted_terms(order)[0]
        return {"lm": self.pres.monomial(exp), "lc": c, "lt": self.pres.monomial(exp, c),
                "exp": exp, "deg": self.degree()}

    # rendering ------------------------------------------------------------------
    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"SkewPoly({render_poly(self)})"


def monomial_text(exp) -> str:
    parts = []
    for i, v in enumerate(exp):
        if v == 1:
            parts.append(f"x{i + 1}")
        elif v > 1:
            parts.append(f"x{i + 1}^{v}")
    return "*".join(parts)


def render_poly(f: SkewPoly) -> str:
    """Terms in decreasing monomial order, coefficients in literal syntax."""
    if not f.terms:
        return "0"
    R = f.pres.ring
    out = ""
    for k, (exp, c) in enumerate(f.sorted_terms()):
        mono = monomial_text(exp)
        text = R.format(c)
        sign = "+"
        if text.startswith("-") and text[1:].isdigit():
            sign, text = "-", text[1:]
        if not mono:
            body = text
        elif c == R.one:
            body = mono
        elif " " in text:
            body = f"({text})*{mono}"
        else:
            body = f"{text}*{mono}"
        if k == 0:
            out = ("-" if sign == "-" else "") + body
        else:
            out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------


def _coefficient_sample(ring) -> list:
    return ring.elements() if ring.finite else ring.generators()


def validate_presentation(p: SkewPresentation, config: SearchConfig = DEFAULT_CONFIG) -> SkewPresentation:
    """Structural checks, then associativity on the generating relations."""
    R = p.ring
    for key, c in p.c.items():
        if R.is_zero(c):
            raise PresentationInconsistent(f"c{key} must be nonzero", witness={"pair": key})
    if p.declared_bijective and not p.is_bijective:
        raise PresentationInconsistent("bijective flag set but some sigma or c_ij is not invertible")
    if p.declared_quasi_commutative and not p.is_quasi_commutative:
        raise PresentationInconsistent("quasi-commutative flag set but some delta or r entry is nonzero")
    elems = _coefficient_sample(R)
    n = p.n
    X = [p.var(i) for i in range(1, n + 1)]

    def check(lhs, rhs, what, witness):
        if lhs != rhs:
            raise PresentationInconsistent(f"{what}: {lhs} != {rhs}", witness=witness)

    try:
        for i in range(n):
            for a in elems:
                ca = p.const(a)
                for b in elems:
                    cb = p.const(b)
                    check((X[i] * ca) * cb, X[i] * (ca * cb), f"x{i + 1}(rs) associativity",
                          {"i": i + 1, "r": R.format(a), "s": R.format(b)})
        for i, j in itertools.combinations(range(n), 2):
            for a in elems:
                ca = p.const(a)
                check((X[j] * X[i]) * ca, X[j] * (X[i] * ca), f"(x{j + 1}x{i + 1})r associativity",
                      {"i": i + 1, "j": j + 1, "r": R.format(a)})
        for i, j, k in itertools.combinations(range(n), 3):
            check((X[k] * X[j]) * X[i], X[k] * (X[j] * X[i]), "variable triple associativity",
                  {"i": i + 1, "j": j + 1, "k": k + 1})
    except RewriteBudgetExceeded as exc:
        raise PresentationInconsistent(f"normalization did not terminate: {exc}") from exc
    return p


# --------------------------------------------------------------------------
# extended maps
# --------------------------------------------------------------------------


def check_extension_hypotheses(p: SkewPresentation) -> None:
    """sigma_i delta_j = delta_j sigma_i, delta_i delta_j = delta_j delta_i,
    and every delta_k kills each c_ij and r_l^(ij).  Raises HypothesesFail."""
    R = p.ring
    elems = _coefficient_sample(R) if R.finite else R.candidates() + R.generators()
    for i, j in itertools.product(range(p.n), repeat=2):
        s, d, dj = p.sigmas[i], p.deltas[j], p.deltas[i]
        for a in elems:
            if s(d(a)) != d(s(a)):
                raise HypothesesFail(f"sigma{i + 1} and delta{j + 1} do not commute",
                                     witness={"i": i + 1, "j": j + 1, "a": R.format(a)})
            if dj(d(a)) != d(dj(a)):
                raise HypothesesFail(f"delta{i + 1} and delta{j + 1} do not commute",
                                     witness={"i": i + 1, "j": j + 1, "a": R.format(a)})
    for k, d in enumerate(p.deltas):
        for key in p.c:
            if not R.is_zero(d(p.c[key])):
                raise HypothesesFail(f"delta{k + 1} does not kill c{key}", witness={"k": k + 1, "pair": key})
            for l, v in enumerate(p.r[key]):
                if not R.is_zero(d(v)):
                    raise HypothesesFail(f"delta{k + 1} does not kill r{l}{key}",
                                         witness={"k": k + 1, "pair": key, "l": l})


def extend_sigma(p: SkewPresentation, k: int) -> Callable[[SkewPoly], SkewPoly]:
    """Coefficientwise sigma_k on A (1-based k)."""
    s = p.sigmas[k - 1]
    return lambda f: f.map_coefficients(s)


def extend_delta(p: SkewPresentation, k: int, *, check: bool = True) -> Callable[[SkewPoly], SkewPoly]:
    """Coefficientwise delta_k on A (1-based k); hypotheses checked first."""
    if check:
        check_extension_hypotheses(p)
    d = p.deltas[k - 1]
    return lambda f: f.map_coefficients(d)


__all__ = [
    "SkewPresentation", "SkewPoly", "validate_presentation", "order_key", "monomials_up_to",
    "render_poly", "monomial_text", "check_extension_hypotheses", "extend_sigma", "extend_delta",
    "EndoMap", "SigmaDerivation", "ORDERS",
]
