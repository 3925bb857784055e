#!/usr/bin/env python3
"""Time exhaustive associativity and distributivity over monomial terms.

Every triple of terms c*x^alpha with |alpha| <= degree and nonzero c is
multiplied both ways.  Usage: python3 scripts/bench_associativity.py [--degree 3] [NAME ...]
"""

import argparse
import itertools
import time

from skewpbw import catalog
from skewpbw.algebra import monomials_up_to


def run(name: str, degree: int) -> None:
    p = catalog.load(name).presentation
    R = p.ring
    coeffs = [c for c in R.elements() if not R.is_zero(c)] if R.finite else R.candidates()[:6]
    terms = [p.monomial(m, c) for m in monomials_up_to(p.n, degree) for c in coeffs]
    start = time.perf_counter()
    failures = 0
    for f, g, h in itertools.product(terms, repeat=3):
        if (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h or (f + g) * h != f * h + g * h:
            failures += 1
    elapsed = time.perf_counter() - start
    print(f"{name:<18} terms={len(terms):<4} triples={len(terms) ** 3:<8} failures={failures} {elapsed:.2f}s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*")
    ap.add_argument("--degree", type=int, default=3)
    args = ap.parse_args()
    for name in args.names or ["quantum-plane-z3", "weyl-z5"]:
        run(name, args.degree)


if __name__ == "__main__":
    main()
