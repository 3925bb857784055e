"""Extension-relative property deciders with replayable witnesses."""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import SkewPoly, SkewPresentation, monomials_up_to
from .bounded import BoundedSpace, scan_pairs
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import SearchSpaceCapExceeded, SkewPBWError, UnsupportedInfinite
from .maps import sigma_alpha, sigma_alpha_family
from .ring_props import (CLASSICAL, decide_classical, enumerate_two_sided_ideals, members,
                         replay_classical, right_annihilator, right_ideal_generated, to_mask)
from .verdict import Status, Verdict, Witness

EXTENSION = (
    "SigmaRigid",
    "SDArmendariz",
    "SDWeakArmendariz",
    "SigmaSkewArmendariz",
    "WeakSigmaSkewArmendariz",
    "SkewArmendariz",
    "WeakSkewArmendariz",
    "SDQuasiBaer",
)
ALL_PROPERTIES = EXTENSION + CLASSICAL

WEAK = {"SDWeakArmendariz", "WeakSigmaSkewArmendariz", "WeakSkewArmendariz"}
ARMENDARIZ = {
    "SDArmendariz": "sd",
    "SDWeakArmendariz": "sd",
    "SigmaSkewArmendariz": "sigma",
    "WeakSigmaSkewArmendariz": "sigma",
    "SkewArmendariz": "skew",
    "WeakSkewArmendariz": "skew",
}

# stronger => weaker
CHAINS = [
    ("SigmaRigid", "SDArmendariz"),
    ("SDArmendariz", "SigmaSkewArmendariz"),
    ("SigmaSkewArmendariz", "SkewArmendariz"),
    ("SigmaRigid", "SigmaSkewArmendariz"),
    ("SigmaRigid", "SDWeakArmendariz"),
    ("SDWeakArmendariz", "WeakSigmaSkewArmendariz"),
    ("WeakSigmaSkewArmendariz", "WeakSkewArmendariz"),
    ("SDArmendariz", "SDWeakArmendariz"),
    ("SigmaSkewArmendariz", "WeakSigmaSkewArmendariz"),
    ("SkewArmendariz", "WeakSkewArmendariz"),
    ("SigmaRigid", "Reduced"),
    ("Reduced", "Abelian"),
    ("Reduced", "IFP"),
    ("Baer", "QuasiBaer"),
    ("Baer", "PP"),
    ("QuasiBaer", "PQBaer"),
    ("PP", "PQBaer"),
]


def kebab(name: str) -> str:
    """SDWeakArmendariz -> sd-weak-armendariz."""
    special = {"SDArmendariz": "sd-armendariz", "SDWeakArmendariz": "sd-weak-armendariz",
               "SDQuasiBaer": "sd-quasi-baer", "IFP": "ifp", "PP": "pp", "PQBaer": "pq-baer"}
    if name in special:
        return special[name]
    out = []
    for ch in name:
        if ch.isupper() and out:
            out.append("-")
        out.append(ch.lower())
    return "".join(out)


PROPERTY_BY_KEBAB = {kebab(p): p for p in ALL_PROPERTIES}


def property_id(text: str) -> str:
    if text in ALL_PROPERTIES:
        return text
    if text in PROPERTY_BY_KEBAB:
        return PROPERTY_BY_KEBAB[text]
    raise KeyError(f"unknown property {text!r}")


def domain_rule_applies(p: SkewPresentation) -> bool:
    """R a domain with injective sigmas makes A a domain (leading terms multiply)."""
    return bool(p.ring.is_domain and p.all_sigmas_injective)


def _analytic(prop, note):
    return Verdict(prop, Status.HOLDS, scope="analytic", note=note)


# --------------------------------------------------------------------------
# sigma-rigid
# --------------------------------------------------------------------------


def _decide_rigid(p: SkewPresentation, config: SearchConfig) -> Verdict:
    R = p.ring
    alphas, exact = sigma_alpha_family(list(p.sigmas), config.alpha_cap)
    maps = [(a, sigma_alpha(list(p.sigmas), a)) for a in alphas]
    elems = R.elements()[1:] if R.finite else R.candidates()[1:]
    examined = 0
    for r in elems:
        for a, s in maps:
            examined += 1
            if R.is_zero(R.mul(r, s(r))):
                w = Witness("rigid", R, elements={"r": r, "product": R.mul(r, s(r))},
                            info={"alpha": list(a)})
                return Verdict("SigmaRigid", Status.FAILS, witness=w, pairs_examined=examined,
                               scope="exhaustive" if R.finite else "sampled")
    if R.finite and exact:
        return Verdict("SigmaRigid", Status.HOLDS, pairs_examined=examined)
    if domain_rule_applies(p):
        return _analytic("SigmaRigid", "domain with injective sigmas")
    if R.finite:
        return Verdict("SigmaRigid", Status.VERIFIED_UP_TO, bound=config.alpha_cap, pairs_examined=examined)
    return Verdict("SigmaRigid", Status.INCONCLUSIVE, bound=config.alpha_cap, pairs_examined=examined,
                   scope="sampled", note="no witness among candidate elements")


# --------------------------------------------------------------------------
# Armendariz family
# --------------------------------------------------------------------------


def _violation_finder(space: BoundedSpace, variant: str):
    """Return violation(avec, bvec) for the given Armendariz variant."""
    p = space.pres
    R = space.ring
    Mul = R.M
    monos = space.monos
    const_pos = monos.index(p.zero_exp)
    if variant == "sd":
        T = space.T

        def violation(avec, bvec):
            for i, a in enumerate(avec):
                if not a:
                    continue
                for j, b in enumerate(bvec):
                    if b and Mul[a, T[i, b, j]].any():
                        return {"i": i, "j": j}
            return None
    elif variant == "sigma":
        tables = [np.array([sigma_alpha(list(p.sigmas), e)(x) for x in range(R.m)]) for e in monos]

        def violation(avec, bvec):
            for i, a in enumerate(avec):
                if not a:
                    continue
                for j, b in enumerate(bvec):
                    if b and Mul[a, tables[i][b]]:
                        return {"i": i, "j": j}
            return None
    else:

        def violation(avec, bvec):
            a0 = avec[const_pos]
            if not a0:
                return None
            for j, b in enumerate(bvec):
                if b and Mul[a0, b]:
                    return {"i": const_pos, "j": j}
            return None

    return violation


def _armendariz_witness(p: SkewPresentation, prop: str, f: SkewPoly, g: SkewPoly, alpha, beta) -> Witness:
    R = p.ring
    variant = ARMENDARIZ[prop]
    a = f.terms.get(alpha, R.zero)
    b = g.terms.get(beta, R.zero)
    if variant == "sd":
        product = p.monomial(alpha, a) * p.monomial(beta, b)
        label = "aiXi*bjYj"
        return Witness("armendariz", R, polys={"f": f, "g": g, label: product},
                       info={"alpha": list(alpha), "beta": list(beta), "variant": variant})
    if variant == "sigma":
        product = R.mul(a, sigma_alpha(list(p.sigmas), alpha)(b))
        label = "ai*sigma^ai(bj)"
    else:
        product = R.mul(a, b)
        label = f"a0*b{_term_index(g, beta)}"
    return Witness("armendariz", R, polys={"f": f, "g": g}, elements={label: product},
                   info={"alpha": list(alpha), "beta": list(beta), "variant": variant})


def _term_index(g: SkewPoly, beta) -> int:
    """Position of beta among g's terms in increasing order (b0 = constant term)."""
    order = [e for e, _ in reversed(g.sorted_terms())]
    return order.index(beta) if beta in order else 0


def _structured_armendariz(p: SkewPresentation, prop: str, D: int, config: SearchConfig) -> Verdict:
    if domain_rule_applies(p):
        return _analytic(prop, "A is a domain: fg = 0 forces f = 0 or g = 0")
    R = p.ring
    monos = monomials_up_to(p.n, 1 if prop in WEAK else D)
    cands = R.candidates()
    k = len(cands)
    while k > 2 and (k ** len(monos)) ** 2 > 40_000:
        k -= 1
    polys = []
    for vec in itertools.product(cands[:k], repeat=len(monos)):
        f = SkewPoly(p, dict(zip(monos, vec)))
        if f:
            polys.append(f)
    examined = 0
    for f in polys:
        for g in polys:
            examined += 1
            if (f * g).is_zero:
                w = _check_conclusion(p, prop, f, g)
                if w is not None:
                    return Verdict(prop, Status.FAILS, witness=w, pairs_examined=examined, scope="sampled")
    return Verdict(prop, Status.INCONCLUSIVE, bound=D, pairs_examined=examined, scope="sampled",
                   note="no witness among candidate coefficient pairs")


def _check_conclusion(p, prop, f, g) -> Witness | None:
    """Direct check of the variant's conclusion for one pair with fg = 0."""
    R = p.ring
    variant = ARMENDARIZ[prop]
    fa = [(e, c) for e, c in reversed(f.sorted_terms())]
    gb = [(e, c) for e, c in reversed(g.sorted_terms())]
    if variant == "skew":
        fa = [(e, c) for e, c in fa if not any(e)]
    for alpha, a in fa:
        for beta, b in gb:
            if variant == "sd":
                bad = not (p.monomial(alpha, a) * p.monomial(beta, b)).is_zero
            elif variant == "sigma":
                bad = not R.is_zero(R.mul(a, sigma_alpha(list(p.sigmas), alpha)(b)))
            else:
                bad = not R.is_zero(R.mul(a, b))
            if bad:
                return _armendariz_witness(p, prop, f, g, alpha, beta)
    return None


def _decide_armendariz(p: SkewPresentation, prop: str, D: int, config: SearchConfig) -> Verdict:
    if not p.ring.finite:
        return _structured_armendariz(p, prop, D, config)
    weak = prop in WEAK
    bound = 1 if weak else D
    space = BoundedSpace(p, bound, config)
    try:
        hit, examined = scan_pairs(space, _violation_finder(space, ARMENDARIZ[prop]))
    except SearchSpaceCapExceeded:
        if domain_rule_applies(p):
            return _analytic(prop, f"search at degree {bound} exceeds the cap; A is a domain")
        raise
    if hit is None:
        if weak:
            return Verdict(prop, Status.HOLDS, pairs_examined=examined, note="linear pairs, exhaustive")
        return Verdict(prop, Status.VERIFIED_UP_TO, bound=D, pairs_examined=examined)
    fi, gi, detail = hit
    avec, bvec = space.vectors[fi], space.vectors[gi]
    f, g = space.poly(avec), space.poly(bvec)
    w = _armendariz_witness(p, prop, f, g, space.monos[detail["i"]], space.monos[detail["j"]])
    return Verdict(prop, Status.FAILS, bound=None if weak else D, witness=w, pairs_examined=examined)


# --------------------------------------------------------------------------
# (Sigma, Delta)-quasi-Baer
# --------------------------------------------------------------------------


def sd_ideals(p: SkewPresentation, config: SearchConfig = DEFAULT_CONFIG):
    """Two-sided ideals I with sigma_i(I) = I and delta_i(I) inside I."""
    out = []
    for ideal in enumerate_two_sided_ideals(p.ring, config):
        els = ideal.elements
        if all({s(x) for x in els} == set(els) for s in p.sigmas) and all(
                all(d(x) in els for x in els) for d in p.deltas):
            out.append(ideal)
    return out


def _decide_sd_quasi_baer(p: SkewPresentation, config: SearchConfig) -> Verdict:
    R = p.ring
    if not R.finite:
        if R.is_domain:
            return _analytic("SDQuasiBaer", "domain: annihilators are 0 or R")
        raise UnsupportedInfinite("SDQuasiBaer needs the ideal lattice of a finite ring")
    gens = {right_ideal_generated(R, e) for e in R.idempotent_list()}
    ideals = sd_ideals(p, config)
    for ideal in ideals:
        ann = to_mask(right_annihilator(R, ideal.elements, config))
        if ann not in gens:
            w = Witness("annihilator-not-idempotent", R,
                        element_sets={"subset": ideal.sorted(), "annihilator": members(ann)})
            return Verdict("SDQuasiBaer", Status.FAILS, witness=w, pairs_examined=len(ideals))
    return Verdict("SDQuasiBaer", Status.HOLDS, pairs_examined=len(ideals))


# --------------------------------------------------------------------------
# entry points
# --------------------------------------------------------------------------


def decide(p: SkewPresentation, prop: str, D: int = 1, config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    """Decide one property; results (and errors) are memoized on the presentation."""
    prop = property_id(prop)
    bound = D if prop in ARMENDARIZ and prop not in WEAK else None
    cache = p.__dict__.setdefault("_decisions", {})
    key = (prop, bound, config)
    if key not in cache:
        try:
            cache[key] = _decide(p, prop, D, config)
        except SkewPBWError as exc:
            cache[key] = exc
    out = cache[key]
    if isinstance(out, Exception):
        raise out
    return out


def _decide(p: SkewPresentation, prop: str, D: int, config: SearchConfig) -> Verdict:
    if prop in CLASSICAL:
        return decide_classical(p.ring, prop, config)
    if prop == "SigmaRigid":
        return _decide_rigid(p, config)
    if prop == "SDQuasiBaer":
        return _decide_sd_quasi_baer(p, config)
    return _decide_armendariz(p, prop, D, config)


def replay(p: SkewPresentation, prop: str, witness: Witness) -> bool:
    """Re-check a witness against the definition, without the search tables."""
    prop = property_id(prop)
    R = p.ring
    if prop in CLASSICAL:
        return replay_classical(R, prop, witness)
    if prop == "SigmaRigid":
        r = witness.elements["r"]
        a = tuple(witness.info["alpha"])
        return not R.is_zero(r) and R.is_zero(R.mul(r, sigma_alpha(list(p.sigmas), a)(r)))
    if prop == "SDQuasiBaer":
        S = witness.element_sets["subset"]
        if not all({s(x) for x in S} == set(S) for s in p.sigmas):
            return False
        if not all(d(x) in S for d in p.deltas for x in S):
            return False
        return replay_classical(R, "QuasiBaer", witness)
    f, g = witness.polys["f"], witness.polys["g"]
    if not (f * g).is_zero:
        return False
    alpha, beta = tuple(witness.info["alpha"]), tuple(witness.info["beta"])
    a = f.terms.get(alpha, R.zero)
    b = g.terms.get(beta, R.zero)
    variant = ARMENDARIZ[prop]
    if prop in WEAK and (max(f.degree() or 0, g.degree() or 0) > 1):
        return False
    if variant == "sd":
        return not (p.monomial(alpha, a) * p.monomial(beta, b)).is_zero
    if variant == "sigma":
        # sigma_1^a1 o ... o sigma_n^an, innermost sigma_n
        image = b
        for idx in reversed(range(p.n)):
            for _ in range(alpha[idx]):
                image = p.sigmas[idx](image)
        return not R.is_zero(R.mul(a, image))
    return not any(alpha) and not R.is_zero(R.mul(a, b))


def implication_report(p: SkewPresentation, D: int = 2, config: SearchConfig = DEFAULT_CONFIG) -> dict:
    """Run every decider once and test the inclusion chains row by row."""
    rows: dict[str, Verdict | str] = {}
    for prop in ALL_PROPERTIES:
        try:
            rows[prop] = decide(p, prop, D, config)
        except SkewPBWError as exc:
            rows[prop] = f"error: {type(exc).__name__}: {exc}"
    checks = []
    for strong, weak in CHAINS:
        s, w = rows[strong], rows[weak]
        if isinstance(s, str) or isinstance(w, str):
            status = "undetermined"
        elif s.status is Status.HOLDS and w.status is Status.FAILS:
            status = "INCONSISTENT"
        else:
            status = "consistent"
        checks.append({"stronger": strong, "weaker": weak, "status": status})
    return {"rows": rows, "chains": checks,
            "inconsistent": [c for c in checks if c["status"] == "INCONSISTENT"]}


def report_to_dict(report: dict) -> dict:
    rows = {}
    for k, v in report["rows"].items():
        rows[k] = v if isinstance(v, str) else v.to_dict()
    return {"rows": rows, "chains": report["chains"], "inconsistent": report["inconsistent"]}
