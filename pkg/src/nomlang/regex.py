"""Regular expressions over names and letters, with binders.

The denotation of an expression in a chosen word sort is in general an
infinite set; `enumerate_slice` computes its finite window of words up
to a token-length bound.  Every semantic clause is token-length
non-decreasing, so membership can be decided by enumerating up to the
length of the candidate word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .names import Letter, Name, Permutation
from .monoids import SORTS, SortOps


class Regex:
    __slots__ = ()


@dataclass(frozen=True)
class One(Regex):
    pass


@dataclass(frozen=True)
class Zero(Regex):
    pass


@dataclass(frozen=True)
class NameLit(Regex):
    name: Name


@dataclass(frozen=True)
class LetterLit(Regex):
    letter: Letter


@dataclass(frozen=True)
class Sum(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Cat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True)
class Binder(Regex):
    name: Name
    body: Regex


@dataclass(frozen=True)
class Star(Regex):
    body: Regex


ONE = One()
ZERO = Zero()


def free_names(e: Regex) -> frozenset[Name]:
    if isinstance(e, NameLit):
        return frozenset((e.name,))
    if isinstance(e, (Sum, Cat)):
        return free_names(e.left) | free_names(e.right)
    if isinstance(e, Binder):
        return free_names(e.body) - {e.name}
    if isinstance(e, Star):
        return free_names(e.body)
    return frozenset()


def letters_of(e: Regex) -> frozenset[Letter]:
    if isinstance(e, LetterLit):
        return frozenset((e.letter,))
    if isinstance(e, (Sum, Cat)):
        return letters_of(e.left) | letters_of(e.right)
    if isinstance(e, (Binder, Star)):
        return letters_of(e.body)
    return frozenset()


def permute_regex(pi: Permutation, e: Regex) -> Regex:
    if isinstance(e, NameLit):
        return NameLit(pi(e.name))
    if isinstance(e, Sum):
        return Sum(permute_regex(pi, e.left), permute_regex(pi, e.right))
    if isinstance(e, Cat):
        return Cat(permute_regex(pi, e.left), permute_regex(pi, e.right))
    if isinstance(e, Binder):
        return Binder(pi(e.name), permute_regex(pi, e.body))
    if isinstance(e, Star):
        return Star(permute_regex(pi, e.body))
    return e


@dataclass(frozen=True)
class LangSlice:
    """The words of a language with token length at most `bound`, canonical."""

    sort: str
    bound: int
    words: frozenset


def _by_length(ws, ops: SortOps) -> dict[int, list]:
    out: dict[int, list] = {}
    for w in ws:
        out.setdefault(ops.tok_len(w), []).append(w)
    return out


def _concat_slices(a, b, ops: SortOps, bound: int) -> set:
    out = set()
    la, lb = _by_length(a, ops), _by_length(b, ops)
    for na, xs in la.items():
        for nb, ys in lb.items():
            if na + nb > bound:
                continue
            for x, y in product(xs, ys):
                w = ops.canon(ops.concat(x, y))
                if ops.tok_len(w) <= bound:
                    out.add(w)
    return out


def _enum(e: Regex, ops: SortOps, bound: int) -> set:
    if isinstance(e, Zero):
        return set()
    if isinstance(e, One):
        return {ops.canon(ops.unit)}
    if isinstance(e, NameLit):
        return {ops.canon(ops.from_name(e.name))} if bound >= 1 else set()
    if isinstance(e, LetterLit):
        return {ops.canon(ops.from_letter(e.letter))} if bound >= 1 else set()
    if isinstance(e, Sum):
        return _enum(e.left, ops, bound) | _enum(e.right, ops, bound)
    if isinstance(e, Cat):
        return _concat_slices(
            _enum(e.left, ops, bound), _enum(e.right, ops, bound), ops, bound
        )
    if isinstance(e, Binder):
        out = set()
        for w in _enum(e.body, ops, bound):
            v = ops.canon(ops.bind(e.name, w))
            if ops.tok_len(v) <= bound:
                out.add(v)
        return out
    assert isinstance(e, Star)
    base = _enum(e.body, ops, bound)
    acc = {ops.canon(ops.unit)}
    frontier = set(acc)
    while frontier:
        fresh = _concat_slices(frontier, base, ops, bound) - acc
        acc |= fresh
        frontier = fresh
    return acc


def enumerate_slice(e: Regex, sort: str | SortOps, bound: int) -> LangSlice:
    """All words of the language of `e` with token length at most `bound`."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    ops = SORTS[sort] if isinstance(sort, str) else sort
    return LangSlice(ops.tag, bound, frozenset(_enum(e, ops, bound)))


def member(e: Regex, w, sort: str | SortOps = "M") -> bool:
    """Decide membership by enumerating up to the candidate's token length."""
    ops = SORTS[sort] if isinstance(sort, str) else sort
    return ops.canon(w) in enumerate_slice(e, ops, ops.tok_len(w)).words
