#!/usr/bin/env python3
"""Print the verdict table and theorem outcomes for every catalog entry.

Usage: python3 scripts/catalog_report.py [--degree D] [--json] [NAME ...]
"""

import argparse
import json
import time

from skewpbw import catalog, implication_report, run_all
from skewpbw.properties import kebab, report_to_dict
from skewpbw.theorems import summary


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=None)
    ap.add_argument("--degree", "-D", type=int, default=2)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    out = {}
    for name in args.names or catalog.names():
        entry = catalog.load(name)
        start = time.perf_counter()
        rep = implication_report(entry.presentation, args.degree)
        reports = run_all(entry.presentation, args.degree)
        elapsed = time.perf_counter() - start
        if args.json:
            out[name] = {"report": report_to_dict(rep), "theorems": summary(reports)}
            continue
        print(f"== {name}  ({entry.provenance}; {elapsed:.2f}s)")
        for prop, v in rep["rows"].items():
            label = v if isinstance(v, str) else v.label()
            exp = entry.expected.get(prop)
            mark = "" if exp is None else ("  ok" if exp.status == label else f"  expected {exp.status}")
            print(f"  {kebab(prop):<28} {label}{mark}")
        bad = rep["inconsistent"]
        print(f"  chains: {len(rep['chains'])} checked, {len(bad)} inconsistent")
        for r in reports:
            print(f"  {r.theorem:<26} {r.status.value}")
    if args.json:
        print(json.dumps(out, sort_keys=True, indent=2))


if __name__ == "__main__":
    main()
