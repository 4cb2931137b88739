#!/usr/bin/env python3
"""Cross-check every expression in expressions/ against its compilation.

Usage: python3 scripts/check_corpus.py [--bound N] [--ns-bound N]
Exits 0 if every expression's bounded language matches the automaton's.
"""

import argparse
import glob
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from nomlang.compiler import compile_regex
from nomlang.hds import validate
from nomlang.oracle import check_equivalence
from nomlang.syntax import parse_nre


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=8, help="token length bound")
    ap.add_argument(
        "--ns-bound", type=int, default=18,
        help="bound for the protocol expression, whose shortest nonempty word is long",
    )
    ap.add_argument(
        "--dir",
        default=os.path.join(os.path.dirname(__file__), os.pardir, "expressions"),
    )
    args = ap.parse_args()

    failed = 0
    for path in sorted(glob.glob(os.path.join(args.dir, "*.nre"))):
        name = os.path.basename(path)
        bound = args.ns_bound if "ns_protocol" in name else args.bound
        with open(path, encoding="utf-8") as f:
            e, _ = parse_nre(f.read())
        h = compile_regex(e)
        problems = validate(h)
        if problems:
            print(f"FAIL {name}: invalid automaton: {problems[0]}")
            failed += 1
            continue
        report = check_equivalence(e, h, bound)
        print(f"{name}: " + report.lines()[0])
        for line in report.lines()[1:]:
            print(line)
        if not report.passed:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
