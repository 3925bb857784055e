"""Definition documents: JSON files describing a ring and an extension.

Documents are validated against ``definition.schema.json`` before any algebra
is attempted.  ``dumps`` is the canonical serialization (sorted keys, two-space
indent, trailing newline), so a load/dump round trip is byte-stable.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .algebra import SkewPresentation, validate_presentation
from .config import DEFAULT_CONFIG, SearchConfig
from .errors import DefinitionError, SkewPBWError
from .maps import (EndoMap, SigmaDerivation, builtin_delta, builtin_sigma, validate_derivation,
                   validate_endomorphism)
from .rings import ring_from_descriptor, validate_ring

BUILTIN_SIGMAS = ("identity", "swap", "half", "eval0")
BUILTIN_DELTAS = ("zero", "derivative", "inner")


@lru_cache(maxsize=1)
def schema() -> dict:
    text = resources.files("skewpbw").joinpath("definition.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def check_schema(doc) -> None:
    try:
        jsonschema.validate(doc, schema())
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DefinitionError(f"schema violation at {where}: {exc.message}") from None


def _sigma_from(ring, spec) -> EndoMap:
    if "table" in spec:
        return EndoMap(ring, table=spec["table"], name="table")
    return builtin_sigma(ring, spec["builtin"])


def _delta_from(ring, sigma, spec) -> SigmaDerivation:
    if "table" in spec:
        return SigmaDerivation(ring, sigma, table=spec["table"], name="table")
    return builtin_delta(ring, sigma, spec["builtin"], spec.get("element"))


def presentation_from_document(doc: dict, config: SearchConfig = DEFAULT_CONFIG) -> SkewPresentation:
    """Schema check, ring axioms, map axioms, then presentation consistency."""
    check_schema(doc)
    try:
        ring = validate_ring(ring_from_descriptor(doc["ring"], validate=False))
        ext = doc["extension"]
        n = ext["n"]
        sig_specs = ext.get("sigma", [{"builtin": "identity"}] * n)
        del_specs = ext.get("delta", [{"builtin": "zero"}] * n)
        if len(sig_specs) != n or len(del_specs) != n:
            raise DefinitionError(f"sigma and delta need exactly {n} entries")
        sigmas = [validate_endomorphism(_sigma_from(ring, s), config) for s in sig_specs]
        deltas = [validate_derivation(_delta_from(ring, s, d), config) for s, d in zip(sigmas, del_specs)]
        c = {(e["i"], e["j"]): ring.parse(e["value"]) for e in ext.get("c", [])}
        r = {(e["i"], e["j"]): tuple(ring.parse(v) for v in e["values"]) for e in ext.get("r", [])}
        flags = doc.get("flags", {})
        p = SkewPresentation(ring, n, sigmas, deltas, c, r, order=doc.get("order", "deglex"),
                             quasi_commutative=flags.get("quasi_commutative", False),
                             bijective=flags.get("bijective", False), name=doc.get("name", ""),
                             config=config)
    except (KeyError, TypeError, ValueError) as exc:
        raise DefinitionError(f"malformed definition: {exc}") from None
    return validate_presentation(p, config)


def _sigma_spec(s: EndoMap) -> dict:
    if s.name in BUILTIN_SIGMAS:
        return {"builtin": s.name}
    if s.table is not None:
        return {"table": list(s.table)}
    raise DefinitionError(f"map {s.name} has no serializable form")


def _delta_spec(d: SigmaDerivation) -> dict:
    if d.name in ("zero", "derivative"):
        return {"builtin": d.name}
    if d.name.startswith("inner(") and d.name.endswith(")"):
        return {"builtin": "inner", "element": d.name[len("inner("):-1]}
    if d.table is not None:
        return {"table": list(d.table)}
    raise DefinitionError(f"derivation {d.name} has no serializable form")


def document_from_presentation(p: SkewPresentation) -> dict:
    R = p.ring
    ext: dict = {
        "n": p.n,
        "sigma": [_sigma_spec(s) for s in p.sigmas],
        "delta": [_delta_spec(d) for d in p.deltas],
    }
    cs = [{"i": i, "j": j, "value": R.format(v)} for (i, j), v in sorted(p.c.items()) if v != R.one]
    rs = [{"i": i, "j": j, "values": [R.format(x) for x in vec]}
          for (i, j), vec in sorted(p.r.items()) if any(not R.is_zero(x) for x in vec)]
    if cs:
        ext["c"] = cs
    if rs:
        ext["r"] = rs
    doc = {"ring": R.descriptor(), "extension": ext, "order": p.order}
    if p.name:
        doc["name"] = p.name
    flags = {}
    if p.declared_quasi_commutative:
        flags["quasi_commutative"] = True
    if p.declared_bijective:
        flags["bijective"] = True
    if flags:
        doc["flags"] = flags
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, config: SearchConfig = DEFAULT_CONFIG) -> SkewPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DefinitionError(f"not valid JSON: {exc}") from None
    return presentation_from_document(doc, config)


def load_file(path, config: SearchConfig = DEFAULT_CONFIG) -> SkewPresentation:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DefinitionError(f"cannot read {path}: {exc}") from None
    return loads(text, config)


__all__ = ["schema", "check_schema", "presentation_from_document", "document_from_presentation",
           "dumps", "loads", "load_file", "SkewPBWError"]
