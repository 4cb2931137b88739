#!/usr/bin/env python3
"""Randomized compiler cross-check campaign.

Generates random expressions, compiles each, and compares the bounded
language of the expression against the bounded language of the
automaton.  Prints every mismatch and a summary line.

Usage: python3 scripts/random_campaign.py --count 500 --depth 4 --bound 7
"""

import argparse
import os
import random
import sys
import time
from dataclasses import dataclass

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from nomlang.names import Letter, Name
from nomlang.compiler import compile_regex
from nomlang.hds import language_slice, validate
from nomlang.oracle import random_regex
from nomlang.regex import enumerate_slice
from nomlang.syntax import render_regex, render_word


@dataclass(frozen=True)
class CampaignConfig:
    count: int = 500
    depth: int = 4
    bound: int = 7
    seed: int = 0
    names: tuple[str, ...] = ("n", "m", "k")
    letters: tuple[str, ...] = ("a", "b")


def run_campaign(cfg: CampaignConfig) -> int:
    rng = random.Random(cfg.seed)
    pool = [Name(x) for x in cfg.names]
    letters = [Letter(s) for s in cfg.letters]
    mismatches = 0
    t0 = time.monotonic()
    for i in range(cfg.count):
        e = random_regex(rng, pool, letters, cfg.depth)
        h = compile_regex(e)
        problems = validate(h)
        if problems:
            mismatches += 1
            print(f"INVALID #{i}: {render_regex(e)}: {problems[0]}")
            continue
        want = enumerate_slice(e, "M", cfg.bound).words
        got = language_slice(h, cfg.bound)
        if want != got:
            mismatches += 1
            print(f"MISMATCH #{i}: {render_regex(e)}")
            for w in sorted(want - got, key=repr)[:5]:
                print(f"  missing from automaton: {render_word(w)}")
            for w in sorted(got - want, key=repr)[:5]:
                print(f"  extra in automaton:     {render_word(w)}")
    dt = time.monotonic() - t0
    print(
        f"{cfg.count} expressions, depth {cfg.depth}, bound {cfg.bound}, "
        f"seed {cfg.seed}: {mismatches} mismatches in {dt:.1f}s"
    )
    return 1 if mismatches else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    defaults = CampaignConfig()
    ap.add_argument("--count", type=int, default=defaults.count)
    ap.add_argument("--depth", type=int, default=defaults.depth)
    ap.add_argument("--bound", type=int, default=defaults.bound)
    ap.add_argument("--seed", type=int, default=defaults.seed)
    ap.add_argument("--names", nargs="+", default=list(defaults.names))
    ap.add_argument("--letters", nargs="+", default=list(defaults.letters))
    args = ap.parse_args()
    cfg = CampaignConfig(
        count=args.count,
        depth=args.depth,
        bound=args.bound,
        seed=args.seed,
        names=tuple(args.names),
        letters=tuple(args.letters),
    )
    return run_campaign(cfg)


if __name__ == "__main__":
    sys.exit(main())
