"""Command-line front end.

Exit codes: 0 holds/consistent/success, 1 fails/violation, 2 verified-up-to,
inconclusive or hypotheses-not-met, 64 usage error, 65 invalid definition,
70 internal cap exceeded (or a witness that does not replay).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .algebra import SkewPresentation
from .config import DEFAULT_CONFIG, SearchConfig
from .document import document_from_presentation, dumps, load_file
from .errors import (AxiomViolation, CapExceeded, DefinitionError, InvalidTable, LiteralError,
                     ParseError, PresentationInconsistent, RingMismatch, SkewPBWError, UnknownEntry)
from .parser import normalize
from .properties import ALL_PROPERTIES, decide, implication_report, kebab, property_id, replay, report_to_dict
from .theorems import THEOREMS, run_all, summary, theorem_id, verify
from .verdict import Status, TheoremStatus

EXIT_OK, EXIT_FAIL, EXIT_UNDECIDED = 0, 1, 2
EXIT_USAGE, EXIT_DATAERR, EXIT_SOFTWARE = 64, 65, 70

VERDICT_EXIT = {Status.HOLDS: EXIT_OK, Status.FAILS: EXIT_FAIL,
                Status.VERIFIED_UP_TO: EXIT_UNDECIDED, Status.INCONCLUSIVE: EXIT_UNDECIDED}
THEOREM_EXIT = {TheoremStatus.CONSISTENT: EXIT_OK, TheoremStatus.VIOLATION: EXIT_FAIL,
                TheoremStatus.HYPOTHESES_NOT_MET: EXIT_UNDECIDED,
                TheoremStatus.INCONCLUSIVE: EXIT_UNDECIDED}
_DEFINITION_ERRORS = (DefinitionError, InvalidTable, AxiomViolation, PresentationInconsistent,
                      RingMismatch, LiteralError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: usage error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(args, data: dict, human: str) -> None:
    if args.format == "human":
        print(human)
    else:
        print(json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False))


def _config(args) -> SearchConfig:
    changes = {}
    if args.cap_multiplications is not None:
        changes["cap_multiplications"] = args.cap_multiplications
    if args.cap_ring_size is not None:
        changes["max_ring_size"] = args.cap_ring_size
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.workers is not None:
        changes["workers"] = args.workers
    return DEFAULT_CONFIG.with_(**changes) if changes else DEFAULT_CONFIG


def _property(text: str) -> str:
    try:
        return property_id(text)
    except KeyError:
        known = ", ".join(kebab(p) for p in ALL_PROPERTIES)
        raise UsageError(f"unknown property {text!r}; known: {known}") from None


def _theorem(text: str) -> str:
    try:
        return theorem_id(text)
    except KeyError:
        raise UsageError(f"unknown theorem {text!r}; known: {', '.join(THEOREMS)}") from None


# commands ----------------------------------------------------------------------


def cmd_validate(p: SkewPresentation, args) -> int:
    data = {"valid": True, "ring": p.ring.name(), "n": p.n, "order": p.order,
            "quasi_commutative": p.is_quasi_commutative, "bijective": p.is_bijective}
    human = (f"valid: {p.ring.name()} with n={p.n} ({p.order}); "
             f"quasi-commutative={str(p.is_quasi_commutative).lower()}, "
             f"bijective={str(p.is_bijective).lower()}")
    _emit(args, data, human)
    return EXIT_OK


def cmd_eval(p: SkewPresentation, args) -> int:
    try:
        f = normalize(args.expr, p)
    except ParseError as exc:
        raise UsageError(f"cannot parse expression: {exc}") from None
    _emit(args, {"input": args.expr, "normal_form": str(f)}, str(f))
    return EXIT_OK


def _verdict_lines(v) -> list[str]:
    lines = [f"property: {kebab(v.property)}", f"status:   {v.label()}"]
    if v.bound is not None and v.status is not Status.VERIFIED_UP_TO:
        lines.append(f"degree:   {v.bound}")
    lines.append(f"scope:    {v.scope}")
    if v.witness is not None:
        lines.append(f"witness:  {v.witness.describe()}")
    if v.note:
        lines.append(f"note:     {v.note}")
    return lines


def cmd_check(p: SkewPresentation, args, config: SearchConfig) -> int:
    prop = _property(args.property)
    v = decide(p, prop, args.degree, config)
    _emit(args, v.to_dict(), "\n".join(_verdict_lines(v)))
    return VERDICT_EXIT[v.status]


def cmd_witness(p: SkewPresentation, args, config: SearchConfig) -> int:
    prop = _property(args.property)
    v = decide(p, prop, args.degree, config)
    if v.witness is None or v.status is not Status.FAILS:
        _emit(args, {"property": prop, "status": v.label(), "witness": None, "replay": None}, "none")
        return VERDICT_EXIT[v.status]
    ok = replay(p, prop, v.witness)
    data = {"property": prop, "status": v.label(), "witness": v.witness.to_dict(), "replay": ok}
    _emit(args, data, f"{v.witness.describe()}\nreplay: {str(ok).lower()}")
    return EXIT_FAIL if ok else EXIT_SOFTWARE


def _theorem_lines(r) -> list[str]:
    lines = [f"{r.theorem} on {r.instance} (D={r.degree}): {r.status.value}"]
    for title, group in (("hypothesis", r.hypotheses), ("conclusion", r.conclusions)):
        for name, v in group.items():
            lines.append(f"  {title:<10} {name:<28} {v.label()}")
    if r.witness is not None:
        lines.append(f"  witness    {r.witness.describe()}")
    if r.note:
        lines.append(f"  note       {r.note}")
    return lines


def cmd_verify(p: SkewPresentation, args, config: SearchConfig) -> int:
    t = _theorem(args.theorem)
    r = verify(t, p, args.degree, config)
    _emit(args, r.to_dict(), "\n".join(_theorem_lines(r)))
    return THEOREM_EXIT[r.status]


def cmd_report(p: SkewPresentation, args, config: SearchConfig) -> int:
    rep = implication_report(p, args.degree, config)
    data = report_to_dict(rep)
    lines = [f"{'property':<28} verdict"]
    for prop, v in rep["rows"].items():
        lines.append(f"{kebab(prop):<28} {v if isinstance(v, str) else v.label()}")
    lines.append("")
    for c in rep["chains"]:
        lines.append(f"{kebab(c['stronger'])} => {kebab(c['weaker'])}: {c['status']}")
    code = EXIT_FAIL if rep["inconsistent"] else EXIT_OK
    if args.theorems:
        reports = run_all(p, args.degree, config)
        data["theorems"] = [r.to_dict() for r in reports]
        data["theorem_summary"] = summary(reports)
        lines.append("")
        for r in reports:
            lines.append(f"{r.theorem:<28} {r.status.value}")
        if any(r.status is TheoremStatus.VIOLATION for r in reports):
            code = EXIT_FAIL
    _emit(args, data, "\n".join(lines))
    return code


def cmd_export(p: SkewPresentation, args) -> int:
    sys.stdout.write(dumps(document_from_presentation(p)))
    return EXIT_OK


def cmd_catalog_list(args) -> int:
    entries = {name: catalog.load(name).provenance for name in catalog.names()}
    _emit(args, {"entries": entries}, "\n".join(f"{k:<18} {v}" for k, v in entries.items()))
    return EXIT_OK


def cmd_expected(name: str, args) -> int:
    table = catalog.expected_table(name)
    data = {k: {"status": e.status, "provenance": e.provenance, "reason": e.reason}
            for k, e in table.items()}
    lines = [f"{kebab(k):<28} {e.status:<18} [{e.provenance}] {e.reason}" for k, e in table.items()]
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


# argument handling -------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", "-D", type=int, default=None,
                        help="degree bound for bounded searches (check/witness: 1, verify/report: 2)")
    common.add_argument("--format", choices=("human", "json", "json-like-tree"), default="human")
    common.add_argument("--cap-multiplications", type=int, default=None)
    common.add_argument("--cap-ring-size", type=int, default=None)
    common.add_argument("--seed", type=int, default=None, help="seed for structured-ring sampling")
    common.add_argument("--workers", type=int, default=None, help="worker processes for pair scans")
    return common


_ACTIONS = ("validate", "eval", "check", "witness", "verify", "report", "export", "expected")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="skewpbw", description="Skew PBW extensions over concrete rings.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("validate", parents=[common], help="validate a definition file").add_argument("file")
    sp = sub.add_parser("eval", parents=[common], help="normal form of an expression")
    sp.add_argument("file")
    sp.add_argument("expr")
    for name in ("check", "witness"):
        sp = sub.add_parser(name, parents=[common], help=f"{name} one property")
        sp.add_argument("file")
        sp.add_argument("property")
    sp = sub.add_parser("verify", parents=[common], help="check one theorem on the instance")
    sp.add_argument("file")
    sp.add_argument("theorem")
    sp = sub.add_parser("report", parents=[common], help="implication table")
    sp.add_argument("file")
    sp.add_argument("--theorems", action="store_true", help="append the full theorem suite")
    sub.add_parser("export", parents=[common], help="canonical definition document").add_argument("file")
    sp = sub.add_parser("catalog", parents=[common], help="run a command against a catalog entry")
    sp.add_argument("name", help="entry name, or 'list'")
    sp.add_argument("action", nargs="?", choices=_ACTIONS)
    sp.add_argument("arg", nargs="?", help="expression, property or theorem")
    sp.add_argument("--theorems", action="store_true")
    return ap


def _default_degree(args) -> None:
    if args.degree is None:
        args.degree = 2 if args.command in ("verify", "report") else 1
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")


def _dispatch(args, p: SkewPresentation, config: SearchConfig) -> int:
    cmd = args.command
    if cmd == "validate":
        return cmd_validate(p, args)
    if cmd == "eval":
        return cmd_eval(p, args)
    if cmd == "check":
        return cmd_check(p, args, config)
    if cmd == "witness":
        return cmd_witness(p, args, config)
    if cmd == "verify":
        return cmd_verify(p, args, config)
    if cmd == "report":
        return cmd_report(p, args, config)
    return cmd_export(p, args)


def _run(args) -> int:
    config = _config(args)
    if args.command == "catalog":
        if args.name == "list":
            return cmd_catalog_list(args)
        if args.action is None:
            raise UsageError("catalog needs an action: " + ", ".join(_ACTIONS))
        if args.action == "expected":
            return cmd_expected(args.name, args)
        needs_arg = {"eval": "expr", "check": "property", "witness": "property", "verify": "theorem"}
        if args.action in needs_arg:
            if args.arg is None:
                raise UsageError(f"catalog {args.action} needs a {needs_arg[args.action]}")
            setattr(args, needs_arg[args.action], args.arg)
        args.command = args.action
        _default_degree(args)
        p = catalog.load(args.name, config).presentation
        return _dispatch(args, p, config)
    _default_degree(args)
    try:
        p = load_file(args.file, config)
    except _DEFINITION_ERRORS as exc:
        raise DefinitionError(str(exc)) from None
    return _dispatch(args, p, config)


def _diagnose(kind: str, exc: BaseException, code: int) -> int:
    print(json.dumps({"error": kind, "type": type(exc).__name__, "message": str(exc), "exit": code},
                     sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (UsageError, UnknownEntry) as exc:
        return _diagnose("usage", exc, EXIT_USAGE)
    except DefinitionError as exc:
        return _diagnose("invalid-definition", exc, EXIT_DATAERR)
    except CapExceeded as exc:
        return _diagnose("cap-exceeded", exc, EXIT_SOFTWARE)
    except SkewPBWError as exc:
        return _diagnose("undecided", exc, EXIT_UNDECIDED)


if __name__ == "__main__":
    sys.exit(main())
