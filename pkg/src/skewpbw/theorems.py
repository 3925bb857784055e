"""Checks of the structural theorems on concrete presentations.

Each ``verify`` call evaluates the hypotheses and the conclusion of one
theorem with the deciders, then derives a status:

* a hypothesis that definitely fails gives ``hypotheses-not-met``;
* a conclusion that holds (exactly or up to the bound) gives ``consistent``;
* a conclusion that definitely fails while every hypothesis definitely holds
  gives ``violation``;
* anything else is ``inconclusive``.

Equivalences compare the truth values of their statements instead.  A
bounded probe of A that disagrees with every idempotent-generated ideal is
recorded as an inconclusive verdict carrying a witness; it leans false but
never counts as a definite failure.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import (SkewPoly, SkewPresentation, check_extension_hypotheses, monomials_up_to,
                      validate_presentation)
from .bounded import (BoundedSpace, annihilator_mask, idempotents_up_to, is_reduced_up_to,
                      left_ideal_mask)
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import HypothesesFail, SkewPBWError
from .maps import EndoMap, SigmaDerivation
from .properties import decide, domain_rule_applies, kebab, sd_ideals
from .ring_props import decide_classical, enumerate_two_sided_ideals, semicentral_idempotents
from .verdict import Status, TheoremReport, TheoremStatus, Verdict, Witness

THEOREMS = (
    "DELTA_ANNIHILATION", "RIGID_EQUIVALENCE", "IDEMPOTENT_STABILITY", "IDEMPOTENTS_IN_R",
    "WEAK_IMPLIES_ABELIAN", "ABELIAN_OF_A", "EXTENDED_DERIVATION", "SD_QUASI_BAER_TRANSFER",
    "QUASI_BAER_EQUIVALENCE", "BAER_TRANSFER", "PP_TRANSFER", "IFP_QUASI_BAER_TRANSFER",
    "IDEMPOTENT_DECOMPOSITION", "LOCALIZATION_ARMENDARIZ",
)

THEOREM_BY_KEBAB = {t.lower().replace("_", "-"): t for t in THEOREMS}


def theorem_id(text: str) -> str:
    if text in THEOREMS:
        return text
    if text in THEOREM_BY_KEBAB:
        return THEOREM_BY_KEBAB[text]
    raise KeyError(f"unknown theorem {text!r}")


# --------------------------------------------------------------------------
# verdict plumbing
# --------------------------------------------------------------------------


def _v(name, status, **kw) -> Verdict:
    return Verdict(name, status, **kw)


def _safe(name: str, fn) -> Verdict:
    """Run a decider; errors become an inconclusive verdict naming the cause."""
    try:
        v = fn()
    except SkewPBWError as exc:
        return _v(name, Status.INCONCLUSIVE, note=f"{type(exc).__name__}: {exc}")
    if v.property != name:
        v = Verdict(name, v.status, v.bound, v.witness, v.pairs_examined, v.scope, v.note)
    return v


def _lean(v: Verdict) -> bool | None:
    if v.status.presumed_true:
        return True
    if v.status is Status.FAILS:
        return False
    if v.witness is not None:
        return False
    return None


def _conj(name: str, parts: list[Verdict]) -> Verdict:
    for p in parts:
        if p.status is Status.FAILS:
            return _v(name, Status.FAILS, witness=p.witness, scope=p.scope, note=f"{p.property} fails")
    for p in parts:
        if p.status is Status.INCONCLUSIVE and p.witness is not None:
            return _v(name, Status.INCONCLUSIVE, witness=p.witness, note=f"{p.property}: {p.note}")
    for p in parts:
        if p.status is Status.INCONCLUSIVE:
            return _v(name, Status.INCONCLUSIVE, note=f"{p.property}: {p.note}")
    if all(p.status is Status.HOLDS for p in parts):
        return _v(name, Status.HOLDS, scope="analytic" if any(p.scope == "analytic" for p in parts)
                  else "exhaustive")
    bound = max((p.bound for p in parts if p.bound is not None), default=None)
    return _v(name, Status.VERIFIED_UP_TO, bound=bound)


def _implication(hyps: list[Verdict], concl: Verdict) -> TheoremStatus:
    if any(h.status is Status.FAILS for h in hyps):
        return TheoremStatus.HYPOTHESES_NOT_MET
    if concl.status.presumed_true:
        return TheoremStatus.CONSISTENT
    if concl.status is Status.FAILS and all(h.status is Status.HOLDS for h in hyps):
        return TheoremStatus.VIOLATION
    return TheoremStatus.INCONCLUSIVE


def _equivalence(gates: list[Verdict], statements: list[Verdict]) -> TheoremStatus:
    if any(g.status is Status.FAILS for g in gates):
        return TheoremStatus.HYPOTHESES_NOT_MET
    leans = [_lean(s) for s in statements]
    if None not in leans and len(set(leans)) == 1:
        return TheoremStatus.CONSISTENT
    definite = {s.status for s in statements}
    if Status.HOLDS in definite and Status.FAILS in definite and all(
            g.status is Status.HOLDS for g in gates):
        return TheoremStatus.VIOLATION
    return TheoremStatus.INCONCLUSIVE


def _merge(statuses: list[TheoremStatus]) -> TheoremStatus:
    if TheoremStatus.VIOLATION in statuses:
        return TheoremStatus.VIOLATION
    if TheoremStatus.HYPOTHESES_NOT_MET in statuses:
        return TheoremStatus.HYPOTHESES_NOT_MET
    if all(s is TheoremStatus.CONSISTENT for s in statuses):
        return TheoremStatus.CONSISTENT
    return TheoremStatus.INCONCLUSIVE


def _first_witness(*verdicts: Verdict) -> Witness | None:
    for v in verdicts:
        if v.status is Status.FAILS and v.witness is not None:
            return v.witness
    return None


def _elements(R) -> list:
    return R.elements() if R.finite else R.candidates()


def _sampled(name, D, note) -> Verdict:
    return _v(name, Status.VERIFIED_UP_TO, bound=D, scope="sampled", note=note)


# --------------------------------------------------------------------------
# gates shared by several theorems
# --------------------------------------------------------------------------


def _gate_extension(p: SkewPresentation) -> Verdict:
    name = "extension-hypotheses"
    try:
        check_extension_hypotheses(p)
    except HypothesesFail as exc:
        w = Witness("hypothesis-failure", p.ring, info=dict(exc.witness or {}, reason=str(exc)))
        return _v(name, Status.FAILS, witness=w)
    if p.ring.finite:
        return _v(name, Status.HOLDS)
    trivial = all(s.is_identity or d.is_zero for s in p.sigmas for d in p.deltas) and (
        p.n == 1 or sum(not d.is_zero for d in p.deltas) <= 1)
    if trivial:
        return _v(name, Status.HOLDS, scope="analytic", note="identity sigmas or zero deltas")
    return _v(name, Status.INCONCLUSIVE, scope="sampled", note="commutation checked on candidates")


def _gate_bijective(p: SkewPresentation) -> Verdict:
    if p.is_bijective:
        return _v("bijective", Status.HOLDS)
    bad = [i + 1 for i, s in enumerate(p.sigmas) if not s.bijective]
    w = Witness("not-bijective", p.ring, info={"sigmas": bad})
    return _v("bijective", Status.FAILS, witness=w)


def _gate_c_central_units(p: SkewPresentation) -> Verdict:
    name = "c-invertible-central"
    R = p.ring
    elems = _elements(R)
    for key, c in sorted(p.c.items()):
        if c == R.one:
            continue
        if not R.is_unit(c):
            return _v(name, Status.FAILS, witness=Witness("c-not-unit", R, elements={"c": c},
                                                          info={"pair": list(key)}))
        for r in elems:
            if R.mul(c, r) != R.mul(r, c):
                return _v(name, Status.FAILS, witness=Witness("c-not-central", R, elements={"c": c, "r": r},
                                                              info={"pair": list(key)}))
    if R.finite or all(c == R.one for c in p.c.values()):
        return _v(name, Status.HOLDS)
    return _v(name, Status.INCONCLUSIVE, scope="sampled", note="centrality checked on candidates")


def _gate_injective(p: SkewPresentation) -> Verdict:
    flags = [s.injective for s in p.sigmas]
    if all(flags):
        return _v("sigmas-injective", Status.HOLDS)
    if any(f is False for f in flags):
        bad = [i + 1 for i, f in enumerate(flags) if f is False]
        return _v("sigmas-injective", Status.FAILS,
                  witness=Witness("not-injective", p.ring, info={"sigmas": bad}))
    return _v("sigmas-injective", Status.INCONCLUSIVE, note="injectivity unknown")


def _armendariz(p, prop, D, config) -> Verdict:
    return _safe(prop, lambda: decide(p, prop, D, config))


# --------------------------------------------------------------------------
# bounded probes of A
# --------------------------------------------------------------------------


def _a_reduced(p: SkewPresentation, D: int, config: SearchConfig) -> Verdict:
    name = "AReduced"
    if domain_rule_applies(p):
        return _v(name, Status.HOLDS, scope="analytic", note="A is a domain")
    R = p.ring
    if R.finite:
        return _safe(name, lambda: is_reduced_up_to(p, D, config))
    red = _safe("Reduced", lambda: decide_classical(R, "Reduced", config))
    if red.status is Status.FAILS:
        a = red.witness.elements["a"]
        w = Witness("nilpotent-poly", R, polys={"f": p.const(a)})
        return _v(name, Status.FAILS, witness=w, scope="sampled")
    for e in monomials_up_to(p.n, D):
        for a in R.candidates()[1:]:
            f = p.monomial(e, a)
            if (f * f).is_zero:
                w = Witness("nilpotent-poly", R, polys={"f": f})
                return _v(name, Status.FAILS, witness=w, scope="sampled")
    return _v(name, Status.INCONCLUSIVE, bound=D, scope="sampled", note="no nilpotent monomial term found")


def _ideal_generators(p: SkewPresentation, elements, D: int) -> list[SkewPoly]:
    """c x^beta for nonzero c in the set and |beta| <= D: the degree-D part of I A."""
    return [p.monomial(b, c) for c in sorted(elements) if c for b in monomials_up_to(p.n, D)]


class _Probe:
    """Annihilator probes of A on a finite coefficient ring at degree <= D."""

    def __init__(self, p: SkewPresentation, D: int, config: SearchConfig):
        self.p = p
        self.D = D
        self.space = BoundedSpace(p, D, config)
        self.space.require(self.space.N, "annihilator probe")
        self.emasks = [(e, left_ideal_mask(self.space, p.const(e))) for e in p.ring.idempotent_list()]

    def ann(self, F) -> np.ndarray:
        self.space.require(self.space.N * max(len(F), 1), "annihilator probe")
        return annihilator_mask(self.space, F)

    def check(self, name: str, families) -> Verdict:
        """Each family's bounded annihilator must equal e A_{<=D} for an idempotent e of R."""
        count = 0
        for label, F in families:
            count += 1
            mask = self.ann(F)
            if not any(np.array_equal(mask, em) for _, em in self.emasks):
                w = Witness("annihilator-probe", self.p.ring,
                            info={"family": label, "bounded_annihilator_size": int(mask.sum())})
                return _v(name, Status.INCONCLUSIVE, bound=self.D, witness=w, pairs_examined=count,
                          note="bounded annihilator is not e*A for any idempotent e of R")
        return _v(name, Status.VERIFIED_UP_TO, bound=self.D, pairs_examined=count)

    def singles(self, degree: int = 1):
        R = self.p.ring
        monos = list(reversed(monomials_up_to(self.p.n, degree)))
        for vec in itertools.product(range(R.m), repeat=len(monos)):
            if any(vec):
                f = SkewPoly(self.p, {e: a for e, a in zip(monos, vec) if a})
                yield f"r({f})", [f]

    def ifp(self, name: str = "AIFP") -> Verdict:
        """r(f) must be a left ideal: f h g = 0 for g in r(f) and generators h."""
        p = self.p
        R = p.ring
        hs = [p.const(a) for a in R.elements()[1:]] + [p.var(i) for i in range(1, p.n + 1)]
        count = 0
        for _, (f,) in self.singles():
            mask = self.ann([f])
            for k in np.flatnonzero(mask):
                g = self.space.poly(self.space.vectors[k])
                if not g:
                    continue
                for h in hs:
                    count += 1
                    if not (f * (h * g)).is_zero:
                        w = Witness("ifp-poly", R, polys={"f": f, "g": g, "h": h, "f*h*g": f * (h * g)})
                        return _v(name, Status.FAILS, witness=w, pairs_examined=count)
        return _v(name, Status.VERIFIED_UP_TO, bound=self.D, pairs_examined=count)


def _probe_or(name: str, p: SkewPresentation, D: int, config: SearchConfig, run) -> Verdict:
    if domain_rule_applies(p):
        return _v(name, Status.HOLDS, scope="analytic", note="A is a domain: annihilators are 0 or A")
    if not p.ring.finite:
        return _v(name, Status.INCONCLUSIVE, note="annihilator probes need a finite coefficient ring")
    return _safe(name, lambda: run(_Probe(p, D, config)))


def _invariant_ideals(p: SkewPresentation, config, with_delta: bool):
    if with_delta:
        return sd_ideals(p, config)
    return [I for I in enumerate_two_sided_ideals(p.ring, config)
            if all({s(x) for x in I.elements} == set(I.elements) for s in p.sigmas)]


def _ideal_families(p, D, ideals):
    return [(f"r(I*A), I={{{', '.join(p.ring.format(x) for x in I.sorted())}}}",
             _ideal_generators(p, I.elements, D)) for I in ideals]


# --------------------------------------------------------------------------
# the theorems
# --------------------------------------------------------------------------


def _words(n: int, D: int):
    for k in range(1, D + 1):
        yield from itertools.product(range(n), repeat=k)


def _apply_word(maps, word, a):
    for i in reversed(word):
        a = maps[i](a)
    return a


def _deltas_commute(p: SkewPresentation) -> bool:
    elems = _elements(p.ring)
    return all(d(e(a)) == e(d(a)) for d in p.deltas for e in p.deltas for a in elems)


def _word_closure(p: SkewPresentation):
    """All (sigma_w, delta_w) table pairs over nonempty words, finite rings."""
    base = [(s.table, d.table) for s, d in zip(p.sigmas, p.deltas)]
    seen = {}
    frontier = []
    for i, pair in enumerate(base):
        if pair not in seen:
            seen[pair] = (i,)
            frontier.append(pair)
    while frontier:
        nxt = []
        for st, dt in frontier:
            for i, (s, d) in enumerate(base):
                pair = (tuple(s[x] for x in st), tuple(d[x] for x in dt))
                if pair not in seen:
                    seen[pair] = (i,) + seen[(st, dt)]
                    nxt.append(pair)
        frontier = nxt
    return seen


def verify_delta_annihilation(p, D, config) -> TheoremReport:
    R = p.ring
    hyp = _armendariz(p, "WeakSkewArmendariz", 1, config)
    name = "sigma^a(a)delta^a(b)=delta^a(a)b=0"
    if p.deltas_zero:
        concl = _v(name, Status.HOLDS, scope="analytic", note="all deltas vanish")
    elif R.is_domain:
        concl = _v(name, Status.HOLDS, scope="analytic", note="ab = 0 forces a = 0 or b = 0")
    else:
        elems = _elements(R)
        pairs = [(a, b) for a in elems for b in elems if R.is_zero(R.mul(a, b))]
        commute = _deltas_commute(p)
        if R.finite and commute:
            checks = [(word, (lambda a, t=st: t[a]), (lambda a, t=dt: t[a]))
                      for (st, dt), word in sorted(_word_closure(p).items(), key=lambda kv: (len(kv[1]), kv[1]))]
        else:
            words = [w for w in _words(p.n, D) if commute or list(w) == sorted(w)]
            checks = [(w, (lambda a, w=w: _apply_word(p.sigmas, w, a)),
                       (lambda a, w=w: _apply_word(p.deltas, w, a))) for w in words]
        concl = None
        count = 0
        for a, b in pairs:
            for word, s, d in checks:
                count += 1
                left = R.mul(s(a), d(b))
                right = R.mul(d(a), b)
                if not (R.is_zero(left) and R.is_zero(right)):
                    w = Witness("delta-annihilation", R,
                                elements={"a": a, "b": b, "sigma(a)delta(b)": left, "delta(a)b": right},
                                info={"word": [i + 1 for i in word]})
                    concl = _v(name, Status.FAILS, witness=w, pairs_examined=count)
                    break
            if concl is not None:
                break
        if concl is None:
            if R.finite and commute:
                concl = _v(name, Status.HOLDS, pairs_examined=count, note="all composites (closure)")
            elif R.finite:
                concl = _v(name, Status.VERIFIED_UP_TO, bound=D, pairs_examined=count)
            else:
                concl = _sampled(name, D, "zero-product pairs among candidates")
    status = _implication([hyp], concl)
    note = ""
    if status is TheoremStatus.HYPOTHESES_NOT_MET and concl.status.presumed_true:
        note = "conclusion holds here even though the hypothesis fails"
    return TheoremReport("DELTA_ANNIHILATION", _instance(p), D, status, {hyp.property: hyp},
                         {name: concl}, _violation_witness(status, concl), note)


def verify_rigid_equivalence(p, D, config) -> TheoremReport:
    R = p.ring
    gates = [_gate_c_central_units(p), _gate_injective(p)]
    reduced = _safe("Reduced", lambda: decide_classical(R, "Reduced", config))
    skew = _armendariz(p, "SkewArmendariz", D, config)
    s1 = _conj("(i) reduced and skew-Armendariz", [reduced, skew])
    s2 = _safe("(ii) SigmaRigid", lambda: decide(p, "SigmaRigid", D, config))
    s3 = _a_reduced(p, D, config)
    s3 = Verdict("(iii) A reduced", s3.status, s3.bound, s3.witness, s3.pairs_examined, s3.scope, s3.note)
    status = _equivalence(gates, [s1, s2, s3])
    concl = {"Reduced": reduced, "SkewArmendariz": skew, s1.property: s1, s2.property: s2, s3.property: s3}
    return TheoremReport("RIGID_EQUIVALENCE", _instance(p), D, status, {g.property: g for g in gates},
                         concl, _first_witness(s2, s3, s1) if status is not TheoremStatus.INCONCLUSIVE else None)


def verify_idempotent_stability(p, D, config) -> TheoremReport:
    R = p.ring
    hyp = _armendariz(p, "WeakSkewArmendariz", 1, config)
    name = "idempotents sigma-fixed and delta-killed"
    concl = _v(name, Status.HOLDS, note="every idempotent of R checked")
    for e in R.idempotent_list():
        for i, (s, d) in enumerate(zip(p.sigmas, p.deltas)):
            if s(e) != e or not R.is_zero(d(e)):
                w = Witness("unstable-idempotent", R, elements={"e": e, "sigma(e)": s(e), "delta(e)": d(e)},
                            info={"i": i + 1})
                concl = _v(name, Status.FAILS, witness=w)
                break
        if concl.fails:
            break
    status = _implication([hyp], concl)
    return TheoremReport("IDEMPOTENT_STABILITY", _instance(p), D, status, {hyp.property: hyp},
                         {name: concl}, _violation_witness(status, concl))


def _a_idempotents(p, D, config):
    return idempotents_up_to(p, D, config)


def verify_idempotents_in_r(p, D, config) -> TheoremReport:
    hyp = _armendariz(p, "SkewArmendariz", D, config)
    name = "idempotents of A lie in R"

    def run():
        if domain_rule_applies(p):
            return _v(name, Status.HOLDS, scope="analytic", note="A is a domain")
        if not p.ring.finite:
            return _v(name, Status.INCONCLUSIVE, note="idempotent search needs a finite coefficient ring")
        idem = _a_idempotents(p, D, config)
        for e in idem:
            if (e.degree() or 0) > 0:
                return _v(name, Status.FAILS, bound=D, witness=Witness("idempotent-poly", p.ring, polys={"e": e}))
        return _v(name, Status.VERIFIED_UP_TO, bound=D, pairs_examined=len(idem))

    concl = _safe(name, run)
    status = _implication([hyp], concl)
    return TheoremReport("IDEMPOTENTS_IN_R", _instance(p), D, status, {hyp.property: hyp},
                         {name: concl}, _violation_witness(status, concl))


def verify_weak_implies_abelian(p, D, config) -> TheoremReport:
    weak = _armendariz(p, "WeakSkewArmendariz", 1, config)
    abelian = _safe("Abelian", lambda: decide_classical(p.ring, "Abelian", config))
    status = _implication([weak], abelian)
    witness = _violation_witness(status, abelian)
    note = ""
    if weak.fails and abelian.fails:
        status = TheoremStatus.CONSISTENT
        witness = weak.witness
        note = "contrapositive: R is not Abelian and a linear pair refutes weak skew-Armendariz"
    return TheoremReport("WEAK_IMPLIES_ABELIAN", _instance(p), D, status, {"WeakSkewArmendariz": weak},
                         {"Abelian": abelian}, witness, note)


def verify_abelian_of_a(p, D, config) -> TheoremReport:
    hyp = _armendariz(p, "SkewArmendariz", D, config)
    name = "idempotents of A are central"

    def run():
        if domain_rule_applies(p):
            return _v(name, Status.HOLDS, scope="analytic", note="A is a domain: idempotents are 0 and 1")
        if not p.ring.finite:
            return _v(name, Status.INCONCLUSIVE, note="idempotent search needs a finite coefficient ring")
        space = BoundedSpace(p, D, config)
        idem = _a_idempotents(p, D, config)
        count = 0
        for e in idem:
            if not e or e == p.one():
                continue
            left, _ = space.generic_table(e, "left")
            right, _ = space.generic_table(e, "right")
            diff = np.flatnonzero((space.products(left) != space.products(right)).any(axis=1))
            count += space.N
            if diff.size:
                g = space.poly(space.vectors[diff[0]])
                w = Witness("noncentral-idempotent-poly", p.ring, polys={"e": e, "g": g, "e*g": e * g, "g*e": g * e})
                return _v(name, Status.FAILS, bound=D, witness=w, pairs_examined=count)
        return _v(name, Status.VERIFIED_UP_TO, bound=D, pairs_examined=count)

    concl = _safe(name, run)
    status = _implication([hyp], concl)
    return TheoremReport("ABELIAN_OF_A", _instance(p), D, status, {hyp.property: hyp},
                         {name: concl}, _violation_witness(status, concl))


def verify_extended_derivation(p, D, config) -> TheoremReport:
    R = p.ring
    gate = _gate_extension(p)
    name = "delta-bar is a sigma-bar-derivation"
    if gate.fails:
        return TheoremReport("EXTENDED_DERIVATION", _instance(p), D, TheoremStatus.HYPOTHESES_NOT_MET,
                             {gate.property: gate}, {}, gate.witness)
    monos = monomials_up_to(p.n, D)
    coeffs = R.elements()[1:] if R.finite else R.generators()
    concl = None
    count = 0
    for k in range(p.n):
        s, d = p.sigmas[k], p.deltas[k]
        for alpha, beta in itertools.product(monos, repeat=2):
            for a, b in itertools.product(coeffs, repeat=2):
                f, g = p.monomial(alpha, a), p.monomial(beta, b)
                count += 1
                lhs = (f * g).map_coefficients(d)
                rhs = f.map_coefficients(s) * g.map_coefficients(d) + f.map_coefficients(d) * g
                if lhs != rhs:
                    w = Witness("product-rule", R, polys={"f": f, "g": g, "lhs": lhs, "rhs": rhs},
                                info={"k": k + 1})
                    concl = _v(name, Status.FAILS, bound=D, witness=w, pairs_examined=count)
                    break
            if concl:
                break
        if concl:
            break
    if concl is None:
        if R.finite:
            concl = _v(name, Status.VERIFIED_UP_TO, bound=D, pairs_examined=count)
        else:
            concl = _v(name, Status.VERIFIED_UP_TO, bound=D, pairs_examined=count, scope="sampled",
                       note="coefficients range over the generator list")
    status = _implication([gate], concl)
    return TheoremReport("EXTENDED_DERIVATION", _instance(p), D, status, {gate.property: gate},
                         {name: concl}, _violation_witness(status, concl))


def _gate_semicentral_stable(p: SkewPresentation) -> Verdict:
    name = "semicentral-idempotents-stable"
    R = p.ring
    if R.finite:
        idem = semicentral_idempotents(R, "left")
    elif R.idempotent_list() == [R.zero, R.one]:
        return _v(name, Status.HOLDS, scope="analytic", note="only idempotents are 0 and 1")
    else:
        return _v(name, Status.INCONCLUSIVE, note="semicentral idempotents unknown")
    for e in idem:
        for i, (s, d) in enumerate(zip(p.sigmas, p.deltas)):
            if s(e) != e or not R.is_zero(d(e)):
                return _v(name, Status.FAILS, witness=Witness("unstable-idempotent", R, elements={"e": e},
                                                              info={"i": i + 1}))
    return _v(name, Status.HOLDS)


def _sd_quasi_baer(p, config) -> Verdict:
    return _safe("SDQuasiBaer", lambda: decide(p, "SDQuasiBaer", 1, config))


def verify_sd_quasi_baer_transfer(p, D, config) -> TheoremReport:
    gates = [_gate_bijective(p), _gate_semicentral_stable(p), _gate_extension(p), _sd_quasi_baer(p, config)]
    name = "A sigma-bar-quasi-Baer (probe)"
    hyps = {g.property: g for g in gates}
    if any(g.fails for g in gates):
        return TheoremReport("SD_QUASI_BAER_TRANSFER", _instance(p), D, TheoremStatus.HYPOTHESES_NOT_MET,
                             hyps, {}, None, "probe skipped")
    concl = _probe_or(name, p, D, config, lambda pr: pr.check(
        name, _ideal_families(p, D, _invariant_ideals(p, config, with_delta=False))))
    status = _implication(gates, concl)
    return TheoremReport("SD_QUASI_BAER_TRANSFER", _instance(p), D, status, hyps, {name: concl},
                         _violation_witness(status, concl))


def _equivalence_report(tid, p, D, gates, statements, note="") -> TheoremReport:
    status = _equivalence(gates, statements)
    return TheoremReport(tid, _instance(p), D, status, {g.property: g for g in gates},
                         {s.property: s for s in statements}, None, note)


def verify_quasi_baer_equivalence(p, D, config) -> TheoremReport:
    gates = [_gate_bijective(p), _gate_extension(p), _armendariz(p, "SkewArmendariz", D, config)]
    if any(g.fails for g in gates):
        return _equivalence_report("QUASI_BAER_EQUIVALENCE", p, D, gates, [], "statements skipped")
    s1 = _sd_quasi_baer(p, config)
    n2, n3 = "A sigma-bar-quasi-Baer (probe)", "A (sigma-bar,delta-bar)-quasi-Baer (probe)"
    s2 = _probe_or(n2, p, D, config, lambda pr: pr.check(
        n2, _ideal_families(p, D, _invariant_ideals(p, config, with_delta=False))))
    s3 = _probe_or(n3, p, D, config, lambda pr: pr.check(
        n3, _ideal_families(p, D, _invariant_ideals(p, config, with_delta=True))))
    return _equivalence_report("QUASI_BAER_EQUIVALENCE", p, D, gates, [s1, s2, s3])


def verify_baer_transfer(p, D, config) -> TheoremReport:
    gates = [_armendariz(p, "SkewArmendariz", D, config)]
    if gates[0].fails:
        return _equivalence_report("BAER_TRANSFER", p, D, gates, [], "statements skipped")
    s1 = _safe("Baer", lambda: decide_classical(p.ring, "Baer", config))
    name = "A Baer (probe)"

    def run(pr: _Probe):
        ideals = enumerate_two_sided_ideals(p.ring, config)
        return pr.check(name, itertools.chain(_ideal_families(p, D, ideals), pr.singles()))

    s2 = _probe_or(name, p, D, config, run)
    return _equivalence_report("BAER_TRANSFER", p, D, gates, [s1, s2])


def verify_pp_transfer(p, D, config) -> TheoremReport:
    gates = [_gate_bijective(p), _armendariz(p, "SkewArmendariz", D, config)]
    if any(g.fails for g in gates):
        return _equivalence_report("PP_TRANSFER", p, D, gates, [], "statements skipped")
    s1 = _safe("PP", lambda: decide_classical(p.ring, "PP", config))
    name = "A p.p. (probe)"
    s2 = _probe_or(name, p, D, config, lambda pr: pr.check(name, pr.singles()))
    return _equivalence_report("PP_TRANSFER", p, D, gates, [s1, s2])


def verify_ifp_quasi_baer_transfer(p, D, config) -> TheoremReport:
    R = p.ring
    gates = [_armendariz(p, "SkewArmendariz", D, config)]
    if gates[0].fails:
        return _equivalence_report("IFP_QUASI_BAER_TRANSFER", p, D, gates, [], "statements skipped")
    ifp = _safe("IFP", lambda: decide_classical(R, "IFP", config))
    qb = _safe("QuasiBaer", lambda: decide_classical(R, "QuasiBaer", config))
    pq = _safe("PQBaer", lambda: decide_classical(R, "PQBaer", config))
    r_qb = _conj("R quasi-Baer with IFP", [qb, ifp])
    r_pq = _conj("R p.q.-Baer with IFP", [pq, ifp])
    a_ifp = _probe_or("A IFP (probe)", p, D, config, lambda pr: pr.ifp("A IFP (probe)"))

    def qb_run(pr: _Probe):
        return pr.check("A quasi-Baer (probe)", _ideal_families(p, D, enumerate_two_sided_ideals(R, config)))

    def pq_run(pr: _Probe):
        fams = []
        for c in R.elements()[1:]:
            right = {R.mul(c, x) for x in R.elements()}
            fams.append((f"r({R.format(c)}*A)", _ideal_generators(p, right, D)))
        return pr.check("A p.q.-Baer (probe)", fams)

    a_qb = _conj("A quasi-Baer with IFP (probe)", [_probe_or("A quasi-Baer (probe)", p, D, config, qb_run), a_ifp])
    a_pq = _conj("A p.q.-Baer with IFP (probe)", [_probe_or("A p.q.-Baer (probe)", p, D, config, pq_run), a_ifp])
    status = _merge([_equivalence(gates, [r_qb, a_qb]), _equivalence(gates, [r_pq, a_pq])])
    statements = {s.property: s for s in (r_qb, a_qb, r_pq, a_pq)}
    return TheoremReport("IFP_QUASI_BAER_TRANSFER", _instance(p), D, status, {g.property: g for g in gates},
                         statements)


def corner_presentation(p: SkewPresentation, e, config: SearchConfig = DEFAULT_CONFIG) -> SkewPresentation:
    """The extension of eR with restricted maps; e is central, sigma/delta-stable, e != 0."""
    R = p.ring
    members = sorted({R.mul(e, r) for r in R.elements()})
    ring, order = R.subring_table(members, e)
    pos = {x: i for i, x in enumerate(order)}
    label = R.format(e)
    sigmas = [EndoMap(ring, table=[pos[s(x)] for x in order], name=f"{s.name}|{label}") for s in p.sigmas]
    deltas = [SigmaDerivation(ring, sg, table=[pos[d(x)] for x in order], name=f"{d.name}|{label}")
              for sg, d in zip(sigmas, p.deltas)]
    c = {k: pos[R.mul(e, v)] for k, v in p.c.items()}
    r = {k: tuple(pos[R.mul(e, v)] for v in vec) for k, vec in p.r.items()}
    q = SkewPresentation(ring, p.n, sigmas, deltas, c, r, order=p.order,
                         name=f"{p.name or R.name()}[{label}R]", config=p.config)
    return validate_presentation(q, config)


def verify_idempotent_decomposition(p, D, config) -> TheoremReport:
    R = p.ring
    gate = _safe("Abelian", lambda: decide_classical(R, "Abelian", config))
    if gate.fails:
        return _equivalence_report("IDEMPOTENT_DECOMPOSITION", p, D, [gate], [], "statements skipped")
    if R.finite:
        stable = [e for e in R.idempotent_list()
                  if all(s(e) == e and R.is_zero(d(e)) for s, d in zip(p.sigmas, p.deltas))]
    else:
        stable = [R.zero, R.one]
    statuses = []
    statements = []
    for prop in ("WeakSkewArmendariz", "SkewArmendariz"):
        s1 = _armendariz(p, prop, D, config)
        s1 = Verdict(f"(i) {prop}", s1.status, s1.bound, s1.witness, s1.pairs_examined, s1.scope, s1.note)
        per_e = []
        for e in stable:
            parts = []
            for x in (e, R.sub(R.one, e)):
                if R.is_zero(x):
                    parts.append(_v("zero corner", Status.HOLDS, note="zero ring"))
                elif x == R.one:
                    parts.append(_armendariz(p, prop, D, config))
                else:
                    parts.append(_safe(f"corner {R.format(x)}R",
                                       lambda x=x: decide(corner_presentation(p, x, config), prop, D, config)))
            per_e.append(_conj(f"e={R.format(e)}", parts))
        s2 = _conj(f"(ii) {prop} for every stable e", per_e)
        s3 = _exists(f"(iii) {prop} for some stable e", per_e)
        statements += [s1, s2, s3]
        statuses.append(_equivalence([gate], [s1, s2, s3]))
    return TheoremReport("IDEMPOTENT_DECOMPOSITION", _instance(p), D, _merge(statuses), {"Abelian": gate},
                         {s.property: s for s in statements}, None,
                         f"stable idempotents: {', '.join(R.format(e) for e in stable)}")


def _exists(name: str, parts: list[Verdict]) -> Verdict:
    if any(p.status is Status.HOLDS for p in parts):
        return _v(name, Status.HOLDS)
    if any(p.status.presumed_true for p in parts):
        bound = max((p.bound for p in parts if p.bound is not None), default=None)
        return _v(name, Status.VERIFIED_UP_TO, bound=bound)
    if parts and all(p.status is Status.FAILS for p in parts):
        return _v(name, Status.FAILS, witness=parts[0].witness)
    return _v(name, Status.INCONCLUSIVE)


def verify_localization_theorem(p, D, config) -> TheoremReport:
    from .localization import verify_localization
    return verify_localization(p, D, config)


def _instance(p: SkewPresentation) -> str:
    return p.name or f"{p.ring.name()} n={p.n}"


def _violation_witness(status: TheoremStatus, concl: Verdict) -> Witness | None:
    return concl.witness if status is TheoremStatus.VIOLATION else None


_DISPATCH = {
    "DELTA_ANNIHILATION": verify_delta_annihilation,
    "RIGID_EQUIVALENCE": verify_rigid_equivalence,
    "IDEMPOTENT_STABILITY": verify_idempotent_stability,
    "IDEMPOTENTS_IN_R": verify_idempotents_in_r,
    "WEAK_IMPLIES_ABELIAN": verify_weak_implies_abelian,
    "ABELIAN_OF_A": verify_abelian_of_a,
    "EXTENDED_DERIVATION": verify_extended_derivation,
    "SD_QUASI_BAER_TRANSFER": verify_sd_quasi_baer_transfer,
    "QUASI_BAER_EQUIVALENCE": verify_quasi_baer_equivalence,
    "BAER_TRANSFER": verify_baer_transfer,
    "PP_TRANSFER": verify_pp_transfer,
    "IFP_QUASI_BAER_TRANSFER": verify_ifp_quasi_baer_transfer,
    "IDEMPOTENT_DECOMPOSITION": verify_idempotent_decomposition,
    "LOCALIZATION_ARMENDARIZ": verify_localization_theorem,
}


def verify(t: str, p: SkewPresentation, D: int = 2, config: SearchConfig = DEFAULT_CONFIG) -> TheoremReport:
    tid = theorem_id(t)
    try:
        return _DISPATCH[tid](p, D, config)
    except SkewPBWError as exc:
        return TheoremReport(tid, _instance(p), D, TheoremStatus.INCONCLUSIVE,
                             note=f"{type(exc).__name__}: {exc}")


def run_all(p: SkewPresentation, D: int = 2, config: SearchConfig = DEFAULT_CONFIG) -> list[TheoremReport]:
    """Every theorem on one instance.  An invalid presentation is refused up front."""
    validate_presentation(p, config)
    return [verify(t, p, D, config) for t in THEOREMS]


def summary(reports: list[TheoremReport]) -> dict:
    counts = {s.value: 0 for s in TheoremStatus}
    for r in reports:
        counts[r.status.value] += 1
    return counts


__all__ = ["THEOREMS", "theorem_id", "verify", "run_all", "summary", "corner_presentation", "kebab"]
