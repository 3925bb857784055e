"""Concrete coefficient rings.

Finite rings are stored as Cayley tables over canonical indices ``0..m-1``
with index 0 the zero and index 1 the identity.  Structured rings (the
integers, the matrix ring ``{(a, t; 0, a)}`` over Z and Q, and Z_p[t]) use
exact integer/rational arithmetic and never enumerate their carrier.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import AxiomViolation, InvalidTable, LiteralError, UnsupportedInfinite

_INT_RE = re.compile(r"^-?\d+$")


def split_top_level(text: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside any (), [] nesting."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _strip_call(text: str, name: str) -> str | None:
    if text.startswith(name + "(") and text.endswith(")"):
        return text[len(name) + 1 : -1]
    return None


class Ring:
    """Common interface.  Elements are plain hashable Python values."""

    kind = "abstract"
    finite = False
    commutative = False
    is_domain = False

    zero = None
    one = None

    # arithmetic -----------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, items):
        acc = self.zero
        for x in items:
            acc = self.add(acc, x)
        return acc

    def from_int(self, n: int):
        result, base = self.zero, self.one
        if n < 0:
            n, base = -n, self.neg(self.one)
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def power(self, a, k: int):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    # literals --------------------------------------------------------------
    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        t = "".join(str(text).split())
        if not t:
            raise LiteralError("empty ring literal")
        value = self._parse(t)
        if value is None:
            raise LiteralError(f"{text!r} is not a {self.kind} literal")
        return value

    def _parse(self, t: str):
        if _INT_RE.match(t):
            return self.from_int(int(t))
        return None

    # structure -------------------------------------------------------------
    def elements(self) -> list:
        raise UnsupportedInfinite(f"{self.kind} ring is infinite")

    @property
    def size(self) -> int | None:
        return None

    def candidates(self) -> list:
        """Deterministic finite list of small elements, zero first."""
        raise NotImplementedError

    def generators(self) -> list:
        return self.candidates()

    def sample(self, rng: random.Random):
        return rng.choice(self.candidates())

    def idempotent_list(self) -> list:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def is_regular(self, a) -> bool:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def key(self) -> str:
        return json.dumps(self.descriptor(), sort_keys=True)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"<{type(self).__name__} {self.name()}>"

    def name(self) -> str:
        return self.kind


# --------------------------------------------------------------------------
# finite rings
# --------------------------------------------------------------------------


class FiniteRing(Ring):
    finite = True

    def __init__(self, add_table, mul_table, neg_table, labels=None, *, validate=True):
        add = np.asarray(add_table, dtype=np.int64)
        mul = np.asarray(mul_table, dtype=np.int64)
        neg = np.asarray(neg_table, dtype=np.int64)
        m = add.shape[0] if add.ndim == 2 else -1
        if m < 2:
            raise InvalidTable("a finite ring needs at least two elements")
        if add.shape != (m, m) or mul.shape != (m, m):
            raise InvalidTable(f"tables must both be {m}x{m}, got {add.shape} and {mul.shape}")
        if neg.shape != (m,):
            raise InvalidTable(f"negation table must have {m} entries")
        for name, t in (("add", add), ("mul", mul), ("neg", neg)):
            if t.min() < 0 or t.max() >= m:
                raise InvalidTable(f"{name} table has out-of-range indices")
        if len(set(neg.tolist())) != m:
            raise InvalidTable("negation table is not a bijection")
        self.m = m
        self.A = add
        self.M = mul
        self.N = neg
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._neg = neg.tolist()
        self.zero = 0
        self.one = 1
        self.labels = list(labels) if labels is not None else [f"#{i}" for i in range(m)]
        if len(self.labels) != m or len(set(self.labels)) != m:
            raise InvalidTable("labels must be distinct and one per element")
        self._label_index = {"".join(lab.split()): i for i, lab in enumerate(self.labels)}
        if validate:
            self.validate()
        self.commutative = bool((mul == mul.T).all())
        nz = mul[1:, 1:]
        self.is_domain = bool((nz != 0).all())

    # axioms ----------------------------------------------------------------
    def validate(self):
        """Exhaustive check of the ring axioms; raises AxiomViolation."""
        A, M, N = self.A, self.M, self.N
        r = np.arange(self.m)

        def first(mask):
            return tuple(int(v) for v in np.argwhere(mask)[0])

        bad = A[0, :] != r
        if bad.any():
            raise AxiomViolation("additive identity", (0, int(np.argmax(bad))))
        bad = A[r, N] != 0
        if bad.any():
            raise InvalidTable(f"negation table wrong at {int(np.argmax(bad))}")
        bad = A != A.T
        if bad.any():
            raise AxiomViolation("additive commutativity", first(bad))
        for name, T in (("additive associativity", A), ("multiplicative associativity", M)):
            bad = T[T[:, :, None], r[None, None, :]] != T[r[:, None, None], T[None, :, :]]
            if bad.any():
                raise AxiomViolation(name, first(bad))
        bad = (M[1, :] != r) | (M[:, 1] != r)
        if bad.any():
            raise AxiomViolation("multiplicative identity", (1, int(np.argmax(bad))))
        left = M[r[:, None, None], A[None, :, :]] != A[M[:, :, None], M[:, None, :]]
        if left.any():
            raise AxiomViolation("left distributivity", first(left))
        right = M[A[:, :, None], r[None, None, :]] != A[M[:, None, :], M[None, :, :]]
        if right.any():
            raise AxiomViolation("right distributivity", first(right))

    # arithmetic -------------------------------------------------------------
    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    # literals ---------------------------------------------------------------
    def format(self, a) -> str:
        return self.labels[a]

    def _parse(self, t):
        if t in self._label_index:
            return self._label_index[t]
        if t.startswith("#") and t[1:].isdigit():
            k = int(t[1:])
            if k < self.m:
                return k
            return None
        return super()._parse(t)

    # structure --------------------------------------------------------------
    @property
    def size(self):
        return self.m

    def elements(self):
        return list(range(self.m))

    def candidates(self):
        return self.elements()

    def idempotent_list(self):
        return [e for e in range(self.m) if self._mul[e][e] == e]

    def is_unit(self, a):
        return self.inverse(a) is not None

    def inverse(self, a):
        for b in range(self.m):
            if self._mul[a][b] == 1 and self._mul[b][a] == 1:
                return b
        return None

    def is_regular(self, a):
        if a == 0:
            return False
        return bool((self.M[a, 1:] != 0).all() and (self.M[1:, a] != 0).all())

    def descriptor(self):
        return {
            "kind": "finite_table",
            "size": self.m,
            "add": self.A.tolist(),
            "mul": self.M.tolist(),
            "neg": self.N.tolist(),
            "zero": 0,
            "one": 1,
            "labels": list(self.labels),
        }

    def name(self):
        return f"table({self.m})"

    def subring_table(self, members, unit, labels=None) -> "FiniteRing":
        """Tabulate a subset closed under +, *, - as a ring with identity ``unit``.

        Used for corner rings eRe where the identity is ``e`` rather than 1.
        """
        members = list(members)
        order = [0, unit] + sorted(x for x in members if x not in (0, unit))
        pos = {x: i for i, x in enumerate(order)}
        if set(order) != set(members):
            raise InvalidTable("subset does not contain its zero and identity")
        try:
            add = [[pos[self._add[x][y]] for y in order] for x in order]
            mul = [[pos[self._mul[x][y]] for y in order] for x in order]
            neg = [pos[self._neg[x]] for x in order]
        except KeyError as exc:
            raise InvalidTable("subset is not closed under the ring operations") from exc
        labs = [self.labels[x] for x in order] if labels is None else labels
        ring = TableRing(add, mul, neg, labs)
        return ring, order


def _tabulate(reps, zero, one, add_fn, mul_fn, neg_fn, fmt):
    rest = sorted(r for r in reps if r != zero and r != one)
    order = [zero, one] + rest
    pos = {r: i for i, r in enumerate(order)}
    add = [[pos[add_fn(a, b)] for b in order] for a in order]
    mul = [[pos[mul_fn(a, b)] for b in order] for a in order]
    neg = [pos[neg_fn(a)] for a in order]
    labels = [fmt(r) for r in order]
    return order, add, mul, neg, labels


class TableRing(FiniteRing):
    kind = "finite_table"


class ModularRing(FiniteRing):
    kind = "modular"

    def __init__(self, m: int, *, validate=True):
        if m < 2:
            raise InvalidTable("modulus must be at least 2")
        self.modulus = m
        add = [[(a + b) % m for b in range(m)] for a in range(m)]
        mul = [[(a * b) % m for b in range(m)] for a in range(m)]
        neg = [(-a) % m for a in range(m)]
        super().__init__(add, mul, neg, [str(a) for a in range(m)], validate=validate)

    def from_int(self, n):
        return n % self.modulus

    def descriptor(self):
        return {"kind": "modular", "modulus": self.modulus}

    def name(self):
        return f"Z{self.modulus}"


class ProductRing(FiniteRing):
    kind = "direct_product"

    def __init__(self, factors, *, validate=True):
        if len(factors) < 2:
            raise InvalidTable("a direct product needs at least two factors")
        for f in factors:
            if not f.finite:
                raise UnsupportedInfinite("direct products are built from finite factors")
        self.factors = list(factors)
        reps = list(itertools.product(*(range(f.m) for f in factors)))
        zero = tuple(0 for _ in factors)
        one = tuple(1 for _ in factors)
        fs = self.factors

        def add(a, b):
            return tuple(f.add(x, y) for f, x, y in zip(fs, a, b))

        def mul(a, b):
            return tuple(f.mul(x, y) for f, x, y in zip(fs, a, b))

        def neg(a):
            return tuple(f.neg(x) for f, x in zip(fs, a))

        def fmt(a):
            return "(" + ",".join(f.format(x) for f, x in zip(fs, a)) + ")"

        order, A, M, N, labels = _tabulate(reps, zero, one, add, mul, neg, fmt)
        self.reps = order
        self._rep_index = {r: i for i, r in enumerate(order)}
        super().__init__(A, M, N, labels, validate=validate)

    def _parse(self, t):
        if t.startswith("(") and t.endswith(")"):
            parts = split_top_level(t[1:-1])
            if len(parts) == len(self.factors):
                try:
                    comp = tuple(f.parse(p) for f, p in zip(self.factors, parts))
                except LiteralError:
                    return None
                return self._rep_index[comp]
        return super()._parse(t)

    def element(self, *components):
        return self._rep_index[tuple(components)]

    def descriptor(self):
        return {"kind": "direct_product", "factors": [f.descriptor() for f in self.factors]}

    def name(self):
        return "x".join(f.name() for f in self.factors)


class UpperTriangularRing(FiniteRing):
    """2x2 upper triangular matrices (a, b; 0, c) over a finite base ring."""

    kind = "upper_triangular_2x2"

    def __init__(self, base: FiniteRing, *, validate=True):
        if not base.finite:
            raise UnsupportedInfinite("upper triangular rings need a finite base")
        self.base = base
        B = base
        reps = list(itertools.product(range(B.m), repeat=3))

        def add(x, y):
            return tuple(B.add(u, v) for u, v in zip(x, y))

        def mul(x, y):
            a, b, c = x
            d, e, f = y
            return (B.mul(a, d), B.add(B.mul(a, e), B.mul(b, f)), B.mul(c, f))

        def neg(x):
            return tuple(B.neg(u) for u in x)

        def fmt(x):
            return "ut(" + ",".join(B.format(u) for u in x) + ")"

        order, A, M, N, labels = _tabulate(reps, (0, 0, 0), (1, 0, 1), add, mul, neg, fmt)
        self.reps = order
        self._rep_index = {r: i for i, r in enumerate(order)}
        super().__init__(A, M, N, labels, validate=validate)

    def _parse(self, t):
        inner = _strip_call(t, "ut")
        if inner is not None:
            parts = split_top_level(inner)
            if len(parts) == 3:
                try:
                    return self._rep_index[tuple(self.base.parse(p) for p in parts)]
                except LiteralError:
                    return None
        return super()._parse(t)

    def element(self, a, b, c):
        return self._rep_index[(a, b, c)]

    def descriptor(self):
        return {"kind": "upper_triangular_2x2", "base": self.base.descriptor()}

    def name(self):
        return f"UT2({self.base.name()})"


class TruncatedPolyRing(FiniteRing):
    """base[u] / (monic modulus), elements as coefficient tuples of length deg."""

    kind = "truncated_poly"

    def __init__(self, base: FiniteRing, modulus, *, validate=True):
        if not base.finite:
            raise UnsupportedInfinite("truncated polynomial rings need a finite base")
        mod = [base.parse(c) if isinstance(c, str) else c for c in modulus]
        if len(mod) < 2 or mod[-1] != base.one:
            raise InvalidTable("modulus must be monic of degree at least 1")
        self.base = base
        self.modulus = mod
        d = len(mod) - 1
        B = base

        def reduce(coeffs):
            c = list(coeffs)
            for k in range(len(c) - 1, d - 1, -1):
                lead = c[k]
                if lead:
                    for i in range(d + 1):
                        c[k - d + i] = B.sub(c[k - d + i], B.mul(lead, mod[i]))
            return tuple(c[:d])

        def add(x, y):
            return tuple(B.add(u, v) for u, v in zip(x, y))

        def mul(x, y):
            prod = [0] * (2 * d - 1)
            for i, u in enumerate(x):
                for j, v in enumerate(y):
                    prod[i + j] = B.add(prod[i + j], B.mul(u, v))
            return reduce(prod)

        def neg(x):
            return tuple(B.neg(u) for u in x)

        def fmt(x):
            return "tp(" + ",".join(B.format(u) for u in x) + ")"

        reps = list(itertools.product(range(B.m), repeat=d))
        one = tuple([1] + [0] * (d - 1))
        order, A, M, N, labels = _tabulate(reps, tuple([0] * d), one, add, mul, neg, fmt)
        self.reps = order
        self._rep_index = {r: i for i, r in enumerate(order)}
        super().__init__(A, M, N, labels, validate=validate)

    def _parse(self, t):
        inner = _strip_call(t, "tp")
        if inner is not None:
            parts = split_top_level(inner)
            if len(parts) == len(self.modulus) - 1:
                try:
                    return self._rep_index[tuple(self.base.parse(p) for p in parts)]
                except LiteralError:
                    return None
        return super()._parse(t)

    def descriptor(self):
        return {
            "kind": "truncated_poly",
            "base": self.base.descriptor(),
            "modulus": [self.base.format(c) for c in self.modulus],
        }

    def name(self):
        return f"{self.base.name()}[u]/deg{len(self.modulus) - 1}"


# --------------------------------------------------------------------------
# structured (infinite) rings
# --------------------------------------------------------------------------


class IntegerRing(Ring):
    kind = "integers"
    commutative = True
    is_domain = True
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def format(self, a):
        return str(a)

    def candidates(self):
        return [0, 1, -1, 2, -2, 3, 4, 6]

    def sample(self, rng):
        return rng.randint(-50, 50)

    def idempotent_list(self):
        return [0, 1]

    def is_unit(self, a):
        return a in (1, -1)

    def inverse(self, a):
        return a if a in (1, -1) else None

    def is_regular(self, a):
        return a != 0

    def canonical_fraction(self, num, den):
        q = Fraction(num, den)
        return q.numerator, q.denominator

    def descriptor(self):
        return {"kind": "integers"}

    def name(self):
        return "Z"


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class MatrixZQRing(Ring):
    """{(a, t; 0, a) : a in Z, t in Q} with elements stored as (a, t)."""

    kind = "structured_matrix_zq"
    commutative = True
    is_domain = False
    zero = (0, Fraction(0))
    one = (1, Fraction(0))

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, t = x
        b, u = y
        return (a * b, a * u + t * b)

    def from_int(self, n):
        return (n, Fraction(0))

    def element(self, a, t):
        return (int(a), Fraction(t))

    def format(self, x):
        return f"[{x[0]},{_fmt_rational(x[1])}]"

    def _parse(self, t):
        if t.startswith("[") and t.endswith("]"):
            parts = t[1:-1].split(",")
            if len(parts) == 2:
                try:
                    a = int(parts[0])
                    q = Fraction(parts[1])
                except ValueError:
                    return None
                return (a, q)
            return None
        return super()._parse(t)

    def candidates(self):
        out = [self.zero]
        for a, t in [(0, 1), (1, 0), (0, Fraction(1, 2)), (0, -1), (1, 1), (-1, 0),
                     (2, 0), (0, 2), (1, Fraction(1, 2)), (2, 1), (-1, 1), (3, Fraction(-2, 3))]:
            out.append((a, Fraction(t)))
        return out

    def generators(self):
        return [self.one, (0, Fraction(1)), (0, Fraction(1, 2)), (2, Fraction(0)),
                (-1, Fraction(3, 5))]

    def sample(self, rng):
        return (rng.randint(-9, 9), Fraction(rng.randint(-20, 20), rng.randint(1, 12)))

    def idempotent_list(self):
        # a^2 = a forces a in {0, 1}; then 2at = t forces t = 0
        return [self.zero, self.one]

    def is_unit(self, x):
        return x[0] in (1, -1)

    def inverse(self, x):
        a, t = x
        if a not in (1, -1):
            return None
        return (a, -t)  # (a,t)(a,-t) = (1, -at + at)

    def is_regular(self, x):
        return x[0] != 0

    def nilpotent_witness(self):
        return (0, Fraction(1))

    def canonical_fraction(self, num, den):
        a, t = num
        b, u = den
        q = Fraction(a, b)
        tau = (Fraction(t) * b - a * Fraction(u)) / (b * b)
        k = q.denominator
        return (int(q * k), tau * k), (k, Fraction(0))

    def descriptor(self):
        return {"kind": "structured_matrix_zq"}

    def name(self):
        return "M(Z,Q)"


class PolyFieldRing(Ring):
    """Z_p[t]; elements are coefficient tuples, constant first, no trailing zeros."""

    kind = "poly_over_field"
    commutative = True
    is_domain = True
    zero = ()
    one = (1,)

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise InvalidTable(f"{p} is not prime")
        self.p = p

    @staticmethod
    def _trim(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def make(self, coeffs):
        return self._trim(int(c) % self.p for c in coeffs)

    def add(self, x, y):
        n = max(len(x), len(y))
        return self._trim(((x[i] if i < len(x) else 0) + (y[i] if i < len(y) else 0)) % self.p
                          for i in range(n))

    def neg(self, x):
        return tuple((-c) % self.p for c in x)

    def mul(self, x, y):
        if not x or not y:
            return ()
        out = [0] * (len(x) + len(y) - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    out[i + j] = (out[i + j] + u * v) % self.p
        return self._trim(out)

    def from_int(self, n):
        return self._trim([n % self.p])

    def t(self):
        return (0, 1)

    def degree(self, x):
        return len(x) - 1

    def format(self, x):
        if not x:
            return "0"
        terms = []
        for k in range(len(x) - 1, -1, -1):
            c = x[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "t" if k == 1 else f"t^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def _parse(self, t):
        inner = _strip_call(t, "poly")
        if inner is not None:
            try:
                return self.make(int(c) for c in inner.split(","))
            except ValueError:
                return None
        if "t" in t:
            try:
                return _TExprParser(self, t).parse()
            except LiteralError:
                return None
        return super()._parse(t)

    def candidates(self, max_degree: int = 2):
        out = []
        for d in range(-1, max_degree + 1):
            if d < 0:
                out.append(())
                continue
            tails = list(itertools.product(range(self.p), repeat=d))
            # leading coefficient major, then lower coefficients from the top
            for lead in range(1, self.p):
                for tail in sorted(tails, key=lambda c: tuple(reversed(c))):
                    out.append(tuple(tail) + (lead,))
        out[1:] = sorted(out[1:], key=lambda c: (len(c), tuple(reversed(c))))
        return out

    def generators(self):
        return [self.one, (0, 1), (1, 1), (0, 0, 1), (2 % self.p, 0, 1)]

    def sample(self, rng):
        return self.make(rng.randrange(self.p) for _ in range(rng.randint(0, 5)))

    def idempotent_list(self):
        return [(), (1,)]

    def is_unit(self, x):
        return len(x) == 1

    def inverse(self, x):
        if len(x) != 1:
            return None
        return (pow(x[0], -1, self.p),)

    def is_regular(self, x):
        return bool(x)

    def divmod(self, x, y):
        if not y:
            raise ZeroDivisionError("polynomial division by zero")
        q = [0] * max(len(x) - len(y) + 1, 1)
        r = list(x)
        inv = pow(y[-1], -1, self.p)
        while len(r) >= len(y) and r:
            k = len(r) - len(y)
            c = (r[-1] * inv) % self.p
            q[k] = c
            for i, v in enumerate(y):
                r[k + i] = (r[k + i] - c * v) % self.p
            r = list(self._trim(r))
        return self._trim(q), self._trim(r)

    def gcd(self, x, y):
        while y:
            x, y = y, self.divmod(x, y)[1]
        if not x:
            return x
        inv = pow(x[-1], -1, self.p)
        return self.mul(x, (inv,))

    def canonical_fraction(self, num, den):
        g = self.gcd(num, den) if num else den
        num = self.divmod(num, g)[0]
        den = self.divmod(den, g)[0]
        lead = pow(den[-1], -1, self.p)
        return self.mul(num, (lead,)), self.mul(den, (lead,))

    def descriptor(self):
        return {"kind": "poly_over_field", "prime": self.p}

    def name(self):
        return f"Z{self.p}[t]"


class _TExprParser:
    """Tiny recursive-descent reader for t-expressions such as ``2*t^2 + t + 1``."""

    def __init__(self, ring: PolyFieldRing, text: str):
        self.ring = ring
        self.toks = re.findall(r"\d+|t|[-+*^()]|\S", text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek() is not None:
            raise LiteralError("trailing input in t-expression")
        return v

    def expr(self):
        R = self.ring
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            w = self.term()
            v = R.add(v, w) if op == "+" else R.sub(v, w)
        return v

    def term(self):
        v = self.factor()
        while self.peek() == "*":
            self.take()
            v = self.ring.mul(v, self.factor())
        return v

    def factor(self):
        v = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise LiteralError("exponent must be a natural number")
            v = self.ring.power(v, int(tok))
        return v

    def atom(self):
        tok = self.take()
        if tok == "t":
            return self.ring.t()
        if tok is not None and tok.isdigit():
            return self.ring.from_int(int(tok))
        if tok == "(":
            v = self.expr()
            if self.take() != ")":
                raise LiteralError("unbalanced parenthesis")
            return v
        raise LiteralError(f"unexpected token {tok!r}")


# --------------------------------------------------------------------------
# descriptors
# --------------------------------------------------------------------------


def ring_from_descriptor(desc: dict, *, validate=True) -> Ring:
    kind = desc.get("kind")
    if kind == "modular":
        return ModularRing(int(desc["modulus"]), validate=validate)
    if kind == "direct_product":
        return ProductRing([ring_from_descriptor(f, validate=validate) for f in desc["factors"]],
                           validate=validate)
    if kind == "upper_triangular_2x2":
        return UpperTriangularRing(ring_from_descriptor(desc["base"], validate=validate),
                                   validate=validate)
    if kind == "truncated_poly":
        return TruncatedPolyRing(ring_from_descriptor(desc["base"], validate=validate),
                                 desc["modulus"], validate=validate)
    if kind == "finite_table":
        m = int(desc["size"])
        if desc.get("zero", 0) != 0 or desc.get("one", 1) != 1:
            raise InvalidTable("finite tables must use index 0 for zero and 1 for one")
        add, mul, neg = desc["add"], desc["mul"], desc["neg"]
        if len(add) != m or len(mul) != m or len(neg) != m:
            raise InvalidTable(f"table sizes disagree with declared size {m}")
        return TableRing(add, mul, neg, desc.get("labels"), validate=validate)
    if kind == "structured_matrix_zq":
        return MatrixZQRing()
    if kind == "poly_over_field":
        return PolyFieldRing(int(desc["prime"]))
    if kind == "integers":
        return IntegerRing()
    raise InvalidTable(f"unknown ring kind {kind!r}")


def validate_ring(desc_or_ring) -> Ring:
    """Build (if needed) and fully validate a ring.

    Finite rings are checked exhaustively; structured rings are checked on
    their generator sample since their operations are closed forms.
    """
    ring = desc_or_ring if isinstance(desc_or_ring, Ring) else ring_from_descriptor(desc_or_ring,
                                                                                    validate=False)
    if ring.finite:
        ring.validate()
        return ring
    gens = ring.generators()
    for a, b, c in itertools.product(gens, repeat=3):
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
            raise AxiomViolation("multiplicative associativity", (a, b, c))
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
            raise AxiomViolation("left distributivity", (a, b, c))
        if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)):
            raise AxiomViolation("right distributivity", (a, b, c))
    for a in gens:
        if ring.mul(ring.one, a) != a or ring.mul(a, ring.one) != a:
            raise AxiomViolation("multiplicative identity", (a,))
        if ring.add(a, ring.neg(a)) != ring.zero:
            raise AxiomViolation("additive inverse", (a,))
    return ring
