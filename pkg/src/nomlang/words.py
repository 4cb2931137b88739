"""Words over names and letters with binders (the most general sort).

A word is a term built from the empty word, names, letters, binary
concatenation, and a binder ``Bind(n, w)`` that binds the free
occurrences of ``n`` in ``w``.  Words are compared up to the monoid
laws (concatenation is associative with the empty word as unit) and up
to renaming of bound names; `alpha_canonical` computes the canonical
representative used for hashing and set membership.

Words linearize to token streams where a binder becomes a matched
open/close pair; `tokenize` and `parse_tokens` are mutually inverse up
to alpha-equivalence and monoid normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .names import Letter, Name, Permutation, canonical_supply


class MWord:
    """Base class for word terms."""

    __slots__ = ()


@dataclass(frozen=True)
class Empty(MWord):
    def __repr__(self):
        return "^"


@dataclass(frozen=True)
class NameAtom(MWord):
    name: Name

    def __repr__(self):
        return f"#{self.name.label}"


@dataclass(frozen=True)
class LetterAtom(MWord):
    letter: Letter

    def __repr__(self):
        return self.letter.symbol


@dataclass(frozen=True)
class Seq(MWord):
    # Normal form: at least two parts, none of which is Empty or Seq.
    parts: tuple[MWord, ...]

    def __repr__(self):
        return " ".join(map(repr, self.parts))


@dataclass(frozen=True)
class Bind(MWord):
    name: Name
    body: MWord

    def __repr__(self):
        return f"<#{self.name.label}. {self.body!r} >"


EPSILON = Empty()

Atom = Union[NameAtom, LetterAtom]


def atom(x: Name | Letter) -> Atom:
    if isinstance(x, Name):
        return NameAtom(x)
    return LetterAtom(x)


def concat(*ws: MWord) -> MWord:
    """Concatenation in monoid normal form: flat, with empty units erased."""
    parts: list[MWord] = []
    for w in ws:
        if isinstance(w, Empty):
            continue
        if isinstance(w, Seq):
            parts.extend(w.parts)
        else:
            parts.append(w)
    if not parts:
        return EPSILON
    if len(parts) == 1:
        return parts[0]
    return Seq(tuple(parts))


def normalize(w: MWord) -> MWord:
    """Rebuild `w` in monoid normal form (binder bodies included)."""
    if isinstance(w, (Empty, NameAtom, LetterAtom)):
        return w
    if isinstance(w, Bind):
        return Bind(w.name, normalize(w.body))
    return concat(*(normalize(p) for p in w.parts))


def support(w: MWord) -> frozenset[Name]:
    """The free names of `w`."""
    if isinstance(w, NameAtom):
        return frozenset((w.name,))
    if isinstance(w, Seq):
        out: frozenset[Name] = frozenset()
        for p in w.parts:
            out |= support(p)
        return out
    if isinstance(w, Bind):
        return support(w.body) - {w.name}
    return frozenset()


def all_names(w: MWord) -> frozenset[Name]:
    """Every name occurring in `w`, free or bound, binder positions included."""
    if isinstance(w, NameAtom):
        return frozenset((w.name,))
    if isinstance(w, Seq):
        out: frozenset[Name] = frozenset()
        for p in w.parts:
            out |= all_names(p)
        return out
    if isinstance(w, Bind):
        return all_names(w.body) | {w.name}
    return frozenset()


def permute(pi: Permutation, w: MWord) -> MWord:
    """Apply the permutation to every name occurrence, free and bound."""
    if isinstance(w, NameAtom):
        return NameAtom(pi(w.name))
    if isinstance(w, Seq):
        return Seq(tuple(permute(pi, p) for p in w.parts))
    if isinstance(w, Bind):
        return Bind(pi(w.name), permute(pi, w.body))
    return w


def alpha_canonical(w: MWord) -> MWord:
    """Canonical representative of the alpha-equivalence class of `w`.

    Bound names are renamed to the reserved sequence in traversal order
    (skipping any reserved name that happens to occur free in `w`);
    free names are kept verbatim.  Two words are alpha-equivalent iff
    their canonical forms are equal.
    """
    w = normalize(w)
    supply = canonical_supply(support(w))

    def go(t: MWord, env: dict[Name, Name]) -> MWord:
        if isinstance(t, NameAtom):
            return NameAtom(env.get(t.name, t.name))
        if isinstance(t, LetterAtom) or isinstance(t, Empty):
            return t
        if isinstance(t, Seq):
            return Seq(tuple(go(p, env) for p in t.parts))
        assert isinstance(t, Bind)
        c = next(supply)
        inner = dict(env)
        inner[t.name] = c
        return Bind(c, go(t.body, inner))

    return go(w, {})


def alpha_equal(w: MWord, v: MWord) -> bool:
    return alpha_canonical(w) == alpha_canonical(v)


# ---------------------------------------------------------------------------
# Token streams

@dataclass(frozen=True)
class TName:
    name: Name

    def __repr__(self):
        return f"#{self.name.label}"


@dataclass(frozen=True)
class TLetter:
    letter: Letter

    def __repr__(self):
        return self.letter.symbol


@dataclass(frozen=True)
class TOpen:
    name: Name

    def __repr__(self):
        return f"<#{self.name.label}."


@dataclass(frozen=True)
class TClose:
    def __repr__(self):
        return ">"


Tok = Union[TName, TLetter, TOpen, TClose]
TokenStream = tuple


TCLOSE = TClose()


def tokenize(w: MWord) -> tuple[Tok, ...]:
    """Linearize `w`; a binder becomes TOpen(n) ... TClose."""
    out: list[Tok] = []

    def go(t: MWord):
        if isinstance(t, Empty):
            return
        if isinstance(t, NameAtom):
            out.append(TName(t.name))
        elif isinstance(t, LetterAtom):
            out.append(TLetter(t.letter))
        elif isinstance(t, Seq):
            for p in t.parts:
                go(p)
        else:
            assert isinstance(t, Bind)
            out.append(TOpen(t.name))
            go(t.body)
            out.append(TCLOSE)

    go(w)
    return tuple(out)


def parse_tokens(toks: tuple[Tok, ...]) -> MWord:
    """Inverse of `tokenize`.  Rejects unbalanced streams."""
    frames: list[tuple[Name | None, list[MWord]]] = [(None, [])]
    for t in toks:
        if isinstance(t, TName):
            frames[-1][1].append(NameAtom(t.name))
        elif isinstance(t, TLetter):
            frames[-1][1].append(LetterAtom(t.letter))
        elif isinstance(t, TOpen):
            frames.append((t.name, []))
        else:
            if len(frames) == 1:
                raise ValueError("unbalanced token stream: unmatched close")
            n, parts = frames.pop()
            frames[-1][1].append(Bind(n, concat(*parts)))
    if len(frames) != 1:
        raise ValueError("unbalanced token stream: unmatched open")
    return concat(*frames[0][1])


def token_length(w: MWord) -> int:
    return len(tokenize(w))
