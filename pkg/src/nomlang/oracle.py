"""Independent brute-force cross-checks.

Everything here is deliberately naive: a rewriting-closure decision
procedure for alpha-equivalence, exhaustive balanced-stream
enumeration for automaton languages, random word/expression
generators, and a slice-equivalence checker.  The naive procedures
serve as oracles for the optimized implementations elsewhere.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .names import Letter, Name
from .words import (
    Bind,
    Empty,
    LetterAtom,
    MWord,
    NameAtom,
    Seq,
    TCLOSE,
    TLetter,
    TName,
    TOpen,
    alpha_canonical,
    concat,
    normalize,
    parse_tokens,
    support,
    tokenize,
)
from .monoids import SORTS, SortOps
from . import regex as rx
from .regex import enumerate_slice
from .hds import Hds, accepts, language_slice


# ---------------------------------------------------------------------------
# Alpha-equivalence by rewriting closure

def _binder_renamings(w: MWord, pool: frozenset[Name]) -> Iterable[MWord]:
    """All words obtained by one capture-avoiding renaming of one binder."""
    if isinstance(w, Bind):
        for m in pool:
            if m is not w.name and m not in support(w.body):
                yield Bind(m, _swap_free(w.body, w.name, m))
        for v in _binder_renamings(w.body, pool):
            yield Bind(w.name, v)
    elif isinstance(w, Seq):
        for i, p in enumerate(w.parts):
            for v in _binder_renamings(p, pool):
                yield concat(*w.parts[:i], v, *w.parts[i + 1:])


def _swap_free(w: MWord, old: Name, new: Name) -> MWord:
    if isinstance(w, NameAtom):
        return NameAtom(new) if w.name is old else w
    if isinstance(w, Seq):
        return Seq(tuple(_swap_free(p, old, new) for p in w.parts))
    if isinstance(w, Bind):
        if w.name is old:
            return w
        return Bind(w.name, _swap_free(w.body, old, new))
    return w


def alpha_oracle(w: MWord, v: MWord, pool: frozenset[Name]) -> bool:
    """Decide alpha-equivalence by exhausting single binder renamings.

    `pool` must contain enough names to connect the two words, i.e. the
    names of both plus at least as many spares as either has binders.
    """
    w, v = normalize(w), normalize(v)
    seen = {w}
    frontier = [w]
    while frontier:
        cur = frontier.pop()
        if cur == v:
            return True
        for nxt in _binder_renamings(cur, pool):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return v in seen


# ---------------------------------------------------------------------------
# Brute-force automaton language

def balanced_streams(length: int, pool: frozenset[Name], letters: frozenset[Letter]):
    """All balanced token streams of exactly the given length."""
    name_toks = [TName(n) for n in sorted(pool)]
    letter_toks = [TLetter(s) for s in sorted(letters, key=lambda s: s.symbol)]
    open_toks = [TOpen(n) for n in sorted(pool)]

    def go(remaining: int, depth: int):
        if remaining == 0:
            if depth == 0:
                yield ()
            return
        for t in name_toks + letter_toks:
            for rest in go(remaining - 1, depth):
                yield (t,) + rest
        if remaining >= 2 + depth:
            for t in open_toks:
                for rest in go(remaining - 1, depth + 1):
                    yield (t,) + rest
        if depth > 0:
            for rest in go(remaining - 1, depth - 1):
                yield (TCLOSE,) + rest

    yield from go(length, 0)


def brute_slice(
    h: Hds,
    bound: int,
    pool: frozenset[Name],
    letters: Optional[frozenset[Letter]] = None,
) -> frozenset[MWord]:
    """Accepted words up to the bound, by checking every balanced stream.

    Every stream over the pool is parsed to a candidate word, and
    membership is decided on the candidate's canonical tokenization --
    the same convention `accepts_word` uses, since acceptance of a raw
    stream may depend on which representative of the word it spells.
    The pool must be large enough to spell every candidate (at least
    the automaton's free names plus the maximal number of simultaneously
    visible distinct names).  Exponential in the bound; use only at tiny
    sizes as an oracle for `language_slice`.
    """
    if letters is None:
        letters = h.letters()
    out: set[MWord] = set()
    rejected: set[MWord] = set()
    for length in range(bound + 1):
        for stream in balanced_streams(length, pool, letters):
            w = alpha_canonical(parse_tokens(stream))
            if w in out or w in rejected:
                continue
            if accepts(h, tokenize(w)):
                out.add(w)
            else:
                rejected.add(w)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Random generators

def random_mword(
    rng: random.Random,
    pool: list[Name],
    letters: list[Letter],
    size: int,
) -> MWord:
    if size <= 0:
        return Empty()
    roll = rng.random()
    if size == 1 or roll < 0.45:
        if letters and rng.random() < 0.4:
            return LetterAtom(rng.choice(letters))
        return NameAtom(rng.choice(pool))
    if roll < 0.7:
        k = rng.randint(1, size - 1)
        return concat(
            random_mword(rng, pool, letters, k),
            random_mword(rng, pool, letters, size - k),
        )
    return Bind(rng.choice(pool), random_mword(rng, pool, letters, size - 1))


def fresh_binder_variant(w: MWord) -> MWord:
    """The same word with every binder renamed to a globally fresh name.

    Useful for checking that acceptance does not depend on which
    representative of an alpha-class spells the input.
    """
    from .names import fresh_name

    if isinstance(w, Bind):
        c = fresh_name("f")
        return Bind(c, fresh_binder_variant(_swap_free(w.body, w.name, c)))
    if isinstance(w, Seq):
        return Seq(tuple(fresh_binder_variant(p) for p in w.parts))
    return w


def random_regex(
    rng: random.Random,
    pool: list[Name],
    letters: list[Letter],
    depth: int,
) -> rx.Regex:
    if depth == 0:
        atoms = [rx.ONE, rx.ZERO]
        atoms += [rx.NameLit(n) for n in pool]
        atoms += [rx.LetterLit(s) for s in letters]
        return rng.choice(atoms)
    roll = rng.random()
    if roll < 0.15:
        return random_regex(rng, pool, letters, 0)
    if roll < 0.40:
        return rx.Sum(
            random_regex(rng, pool, letters, depth - 1),
            random_regex(rng, pool, letters, depth - 1),
        )
    if roll < 0.65:
        return rx.Cat(
            random_regex(rng, pool, letters, depth - 1),
            random_regex(rng, pool, letters, depth - 1),
        )
    if roll < 0.85:
        return rx.Binder(rng.choice(pool), random_regex(rng, pool, letters, depth - 1))
    return rx.Star(random_regex(rng, pool, letters, depth - 1))


# ---------------------------------------------------------------------------
# Axiom instances

@dataclass(frozen=True)
class AxiomInstance:
    axiom: str
    lhs: object
    rhs: object

    def holds(self, ops: SortOps) -> bool:
        return ops.canon(self.lhs) == ops.canon(self.rhs)


def _build(ops: SortOps, rng, pool, letters, size, avoid=frozenset()):
    """A random word of the sort, built from its own constructors."""
    usable = [n for n in pool if n not in avoid]
    w = ops.unit
    for _ in range(size):
        roll = rng.random()
        if roll < 0.45 and usable:
            w = ops.concat(w, ops.from_name(rng.choice(usable)))
        elif roll < 0.7 and letters:
            w = ops.concat(w, ops.from_letter(rng.choice(letters)))
        elif usable:
            w = ops.bind(rng.choice(usable), w)
    return w


def gen_axiom_instances(
    axiom: str,
    sort: str,
    count: int,
    pool: list[Name],
    letters: list[Letter],
    rng: random.Random,
) -> list[AxiomInstance]:
    """Random instances of one of the six binder/concatenation laws.

    Premises (freshness side conditions) are satisfied by construction:
    the word metavariables are built over names excluding the ones the
    premise requires them to avoid.
    """
    ops = SORTS[sort]
    out = []
    for _ in range(count):
        n, m = rng.sample(pool, 2)
        size = rng.randint(0, 4)
        if axiom == "Ax1":  # n#Y |- [n]X . Y = [n](X . Y)
            x = _build(ops, rng, pool, letters, size)
            y = _build(ops, rng, pool, letters, size, avoid={n})
            out.append(AxiomInstance(axiom, ops.concat(ops.bind(n, x), y),
                                     ops.bind(n, ops.concat(x, y))))
        elif axiom == "Ax2":  # |- s.[m]Y = [m](s.Y)
            s = ops.from_letter(rng.choice(letters))
            y = _build(ops, rng, pool, letters, size)
            out.append(AxiomInstance(axiom, ops.concat(s, ops.bind(m, y)),
                                     ops.bind(m, ops.concat(s, y))))
        elif axiom == "Ax3":  # n#m |- n.[m]Y = [m](n.Y)
            y = _build(ops, rng, pool, letters, size)
            out.append(AxiomInstance(axiom,
                                     ops.concat(ops.from_name(n), ops.bind(m, y)),
                                     ops.bind(m, ops.concat(ops.from_name(n), y))))
        elif axiom == "Ax4":  # |- [n][m]X = [m][n]X
            x = _build(ops, rng, pool, letters, size)
            out.append(AxiomInstance(axiom, ops.bind(n, ops.bind(m, x)),
                                     ops.bind(m, ops.bind(n, x))))
        elif axiom == "Ax5":  # n#X |- [n]X = X
            x = _build(ops, rng, pool, letters, size, avoid={n})
            out.append(AxiomInstance(axiom, ops.bind(n, x), x))
        elif axiom == "Ax6":  # n#X |- X.[n]Y = [n](X . Y)
            x = _build(ops, rng, pool, letters, size, avoid={n})
            y = _build(ops, rng, pool, letters, size)
            out.append(AxiomInstance(axiom, ops.concat(x, ops.bind(n, y)),
                                     ops.bind(n, ops.concat(x, y))))
        else:
            raise ValueError(f"unknown axiom {axiom!r}")
    return out


# ---------------------------------------------------------------------------
# Slice equivalence

@dataclass
class EquivalenceReport:
    expression: str
    bound: int
    passed: bool
    common: int
    only_regex: list = field(default_factory=list)
    only_automaton: list = field(default_factory=list)
    seconds: float = 0.0

    def lines(self) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"{status} {self.expression} (bound {self.bound}, "
            f"{self.common} words, {self.seconds:.2f}s)"
        ]
        from .syntax import render_word

        for w in self.only_regex[:10]:
            out.append(f"  only in expression language: {render_word(w)}")
        for w in self.only_automaton[:10]:
            out.append(f"  only in automaton language: {render_word(w)}")
        return out


def check_equivalence(e: rx.Regex, h: Hds, bound: int) -> EquivalenceReport:
    """Compare the expression's and the automaton's languages up to a bound."""
    from .syntax import render_regex

    t0 = time.monotonic()
    s1 = enumerate_slice(e, "M", bound).words
    s2 = language_slice(h, bound)
    return EquivalenceReport(
        expression=render_regex(e),
        bound=bound,
        passed=s1 == s2,
        common=len(s1 & s2),
        only_regex=sorted(s1 - s2, key=repr),
        only_automaton=sorted(s2 - s1, key=repr),
        seconds=time.monotonic() - t0,
    )
