"""Independent brute-force oracles.

Nothing here imports from ``skewpbw``.  Rings are small dataclasses over
native Python values; extensions are multiplied by straightforward word
rewriting.  Results are compared to the package through printed labels,
which both sides produce in the same literal syntax.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Callable


@dataclass(frozen=True)
class ORing:
    elements: tuple
    add: Callable
    mul: Callable
    zero: object
    one: object
    label: Callable

    def neg(self, a):
        return next(b for b in self.elements if self.add(a, b) == self.zero)


def zn(n: int) -> ORing:
    return ORing(tuple(range(n)), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 0, 1, str)


def product(r: ORing, s: ORing) -> ORing:
    els = tuple(itertools.product(r.elements, s.elements))
    return ORing(els,
                 lambda a, b: (r.add(a[0], b[0]), s.add(a[1], b[1])),
                 lambda a, b: (r.mul(a[0], b[0]), s.mul(a[1], b[1])),
                 (r.zero, s.zero), (r.one, s.one),
                 lambda a: f"({r.label(a[0])},{s.label(a[1])})")


def upper_triangular(r: ORing) -> ORing:
    """(a, b; 0, c) stored as (a, b, c)."""
    els = tuple(itertools.product(r.elements, repeat=3))

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return (r.mul(a, d), r.add(r.mul(a, e), r.mul(b, f)), r.mul(c, f))

    return ORing(els, lambda x, y: tuple(r.add(u, v) for u, v in zip(x, y)), mul,
                 (r.zero,) * 3, (r.one, r.zero, r.one),
                 lambda x: "ut(" + ",".join(r.label(u) for u in x) + ")")


# classical ring properties -----------------------------------------------------


def idempotents(R: ORing) -> list:
    return [e for e in R.elements if R.mul(e, e) == e]


def right_annihilator(R: ORing, S) -> frozenset:
    return frozenset(b for b in R.elements if all(R.mul(a, b) == R.zero for a in S))


def right_ideal(R: ORing, e) -> frozenset:
    return frozenset(R.mul(e, x) for x in R.elements)


def is_reduced(R: ORing) -> bool:
    return all(R.mul(a, a) != R.zero for a in R.elements if a != R.zero)


def is_abelian(R: ORing) -> bool:
    return all(R.mul(e, x) == R.mul(x, e) for e in idempotents(R) for x in R.elements)


def _idempotent_ideals(R: ORing) -> set:
    return {right_ideal(R, e) for e in idempotents(R)}


def is_baer(R: ORing) -> bool:
    good = _idempotent_ideals(R)
    els = R.elements
    for k in range(len(els) + 1):
        for S in itertools.combinations(els, k):
            if right_annihilator(R, S) not in good:
                return False
    return True


def is_pp(R: ORing) -> bool:
    good = _idempotent_ideals(R)
    return all(right_annihilator(R, [a]) in good for a in R.elements)


def truncated_z2() -> ORing:
    """Z_2[t]/(t^2) as pairs (c0, c1)."""
    els = tuple(itertools.product(range(2), repeat=2))
    return ORing(els, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
                 lambda a, b: ((a[0] * b[0]) % 2, (a[0] * b[1] + a[1] * b[0]) % 2),
                 (0, 0), (1, 0), lambda a: f"tp({a[0]},{a[1]})")


def two_sided_ideals(R: ORing) -> list[frozenset]:
    """Every additive subgroup closed under both multiplications (brute force)."""
    els = R.elements
    out = []
    for k in range(1, len(els) + 1):
        for S in itertools.combinations(els, k):
            s = set(S)
            if R.zero not in s:
                continue
            if any(R.add(a, b) not in s for a in s for b in s):
                continue
            if any(R.mul(x, a) not in s or R.mul(a, x) not in s for a in s for x in els):
                continue
            out.append(frozenset(s))
    return out


def is_quasi_baer(R: ORing) -> bool:
    good = _idempotent_ideals(R)
    return all(right_annihilator(R, I) in good for I in two_sided_ideals(R))


def is_pq_baer(R: ORing) -> bool:
    good = _idempotent_ideals(R)
    return all(right_annihilator(R, right_ideal(R, a)) in good for a in R.elements)


def is_ifp(R: ORing) -> bool:
    els = R.elements
    for a in els:
        for b in right_annihilator(R, [a]):
            if any(R.mul(R.mul(a, x), b) != R.zero for x in els):
                return False
    return True


def regular_elements(R: ORing) -> list:
    nz = [x for x in R.elements if x != R.zero]
    return [a for a in nz if all(R.mul(a, x) != R.zero and R.mul(x, a) != R.zero for x in nz)]


def is_sigma_rigid(R: ORing, sigma: Callable, max_power: int = 8) -> bool:
    for r in R.elements:
        if r == R.zero:
            continue
        img = r
        for _ in range(max_power):
            img = sigma(img)
            if R.mul(r, img) == R.zero:
                return False
    return True


# skew polynomial rings in one variable ------------------------------------------


def ore_mul(R: ORing, sigma: Callable, delta: Callable, f: list, g: list) -> list:
    """Product in R[x; sigma, delta] on coefficient lists (constant first).

    x^k r is expanded by repeatedly applying x r = sigma(r) x + delta(r) to
    a list of partial coefficients, one letter at a time.
    """
    out = [R.zero] * (len(f) + len(g))
    for i, a in enumerate(f):
        if a == R.zero:
            continue
        for j, b in enumerate(g):
            if b == R.zero:
                continue
            # x^i * b as a coefficient list
            cur = [b]
            for _ in range(i):
                nxt = [R.zero] * (len(cur) + 1)
                for k, c in enumerate(cur):
                    nxt[k + 1] = R.add(nxt[k + 1], sigma(c))
                    nxt[k] = R.add(nxt[k], delta(c))
                cur = nxt
            for k, c in enumerate(cur):
                out[k + j] = R.add(out[k + j], R.mul(a, c))
    while len(out) > 1 and out[-1] == R.zero:
        out.pop()
    return out


def linear_polys(R: ORing):
    return [[a, b] for a in R.elements for b in R.elements]


def skew_armendariz_linear_counterexample(R: ORing, sigma: Callable):
    """First linear pair with fg = 0 but some a_0 b_j != 0 (delta = 0)."""
    zero = lambda r: R.zero
    for f in linear_polys(R):
        for g in linear_polys(R):
            prod = ore_mul(R, sigma, zero, f, g)
            if any(c != R.zero for c in prod):
                continue
            if any(R.mul(f[0], b) != R.zero for b in g):
                return f, g
    return None


def linear_armendariz_counterexample(R: ORing, sigma: Callable, variant: str):
    """n = 1, delta = 0: first linear pair violating the chosen conclusion.

    skew:  a_0 b_j = 0;  sigma: a_i sigma^i(b_j) = 0;  sd: (a_i x^i)(b_j x^j) = 0.
    """
    zero = lambda r: R.zero

    def power(b, i):
        for _ in range(i):
            b = sigma(b)
        return b

    for f in linear_polys(R):
        for g in linear_polys(R):
            if any(c != R.zero for c in ore_mul(R, sigma, zero, f, g)):
                continue
            for i, j in itertools.product(range(2), repeat=2):
                if variant == "skew":
                    bad = i == 0 and R.mul(f[0], g[j]) != R.zero
                elif variant == "sigma":
                    bad = R.mul(f[i], power(g[j], i)) != R.zero
                else:
                    mono_f = [R.zero] * i + [f[i]]
                    mono_g = [R.zero] * j + [g[j]]
                    bad = any(c != R.zero for c in ore_mul(R, sigma, zero, mono_f, mono_g))
                if bad:
                    return f, g
    return None


# two-variable rewriting ---------------------------------------------------------


def word_normal_form(p: int, c: int, r: tuple, word_terms: dict) -> dict:
    """Straighten words over Z_p with x2 x1 -> c x1 x2 + r0 + r1 x1 + r2 x2.

    Input and output map letter tuples to coefficients; output words are
    sorted (all 1s before 2s) and returned as exponent pairs.
    """
    todo = {tuple(w): v % p for w, v in word_terms.items()}
    done: dict = {}
    while todo:
        w, v = todo.popitem()
        if v == 0:
            continue
        k = next((i for i in range(len(w) - 1) if w[i] == 2 and w[i + 1] == 1), None)
        if k is None:
            exp = (w.count(1), w.count(2))
            done[exp] = (done.get(exp, 0) + v) % p
            continue
        head, tail = w[:k], w[k + 2:]
        for repl, coeff in (((1, 2), c), ((), r[0]), ((1,), r[1]), ((2,), r[2])):
            if coeff % p:
                nw = head + repl + tail
                todo[nw] = (todo.get(nw, 0) + v * coeff) % p
    return {e: v for e, v in done.items() if v}


def mono_word(exp) -> tuple:
    return (1,) * exp[0] + (2,) * exp[1]


# Z_p[t] with d/dt -----------------------------------------------------------------


def poly_derivative(f: tuple, p: int) -> tuple:
    out = [(k * f[k]) % p for k in range(1, len(f))]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(f: tuple, g: tuple, p: int) -> tuple:
    out = [0] * (len(f) + len(g))
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def weyl_leibniz(k: int, r: tuple, p: int) -> dict:
    """x^k r = sum_i C(k,i) r^(i) x^(k-i) in Z_p[t][x; d/dt]."""
    out = {}
    cur = r
    for i in range(k + 1):
        coef = comb(k, i) % p
        if coef and cur:
            out[k - i] = tuple((coef * v) % p for v in cur)
        cur = poly_derivative(cur, p)
    return {e: tuple(v) for e, v in out.items() if any(v)}


# fractions --------------------------------------------------------------------------


def reduced_integer_fraction(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    a, b = a // g, b // g
    if b < 0:
        a, b = -a, -b
    return a, b


def rational(a: int, b: int) -> Fraction:
    return Fraction(a, b)
