"""Names, letters, permutations, and fresh-name supplies.

The alphabet is split into a countably infinite set of *names* (testable
only for equality) and a finite, user-declared set of *letters*.  Names
are interned: constructing ``Name("n1")`` twice gives the same object,
and each distinct label gets a distinct numeric id.  The placeholder
``STAR`` used in automaton name maps is deliberately not a ``Name`` so
it can never leak into words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class Name:
    """An interned name.  Identity is the numeric id; the label is for display."""

    __slots__ = ("id", "label")

    _registry: dict[str, "Name"] = {}
    _ids = itertools.count()

    def __new__(cls, label: str) -> "Name":
        existing = cls._registry.get(label)
        if existing is not None:
            return existing
        obj = object.__new__(cls)
        object.__setattr__(obj, "id", next(cls._ids))
        object.__setattr__(obj, "label", label)
        cls._registry[label] = obj
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("Name is immutable")

    def __repr__(self) -> str:
        return f"#{self.label}"

    def __lt__(self, other: "Name") -> bool:
        return self.id < other.id


_fresh_counter = itertools.count()


def fresh_name(prefix: str = "n") -> Name:
    """A name whose label has never been interned before."""
    while True:
        label = f"{prefix}${next(_fresh_counter)}"
        if label not in Name._registry:
            return Name(label)


def bound_name(k: int) -> Name:
    """The k-th name of the reserved sequence used for canonical binders."""
    return Name(f"~{k}")


def canonical_supply(avoid: Iterable[Name]) -> Iterator[Name]:
    """Yield reserved binder names, skipping any that occur in `avoid`."""
    blocked = set(avoid)
    k = 0
    while True:
        c = bound_name(k)
        k += 1
        if c not in blocked:
            yield c


@dataclass(frozen=True, order=True)
class Letter:
    """An element of the finite letter alphabet."""

    symbol: str

    def __repr__(self) -> str:
        return self.symbol


class _Star:
    """Placeholder in name-map codomains marking the slot filled at allocation."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "*"


STAR = _Star()


class Permutation:
    """A finite permutation of names, identity outside its mapping."""

    __slots__ = ("_map",)

    def __init__(self, mapping: dict[Name, Name] | None = None):
        m = {k: v for k, v in (mapping or {}).items() if k is not v}
        if len(set(m.values())) != len(m) or set(m.values()) != set(m.keys()):
            raise ValueError("mapping is not a permutation of its domain")
        self._map = m

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def transposition(cls, a: Name, b: Name) -> "Permutation":
        if a is b:
            return cls()
        return cls({a: b, b: a})

    def __call__(self, n: Name) -> Name:
        return self._map.get(n, n)

    def after(self, other: "Permutation") -> "Permutation":
        """Composite permutation: apply `other` first, then `self`."""
        keys = set(self._map) | set(other._map)
        return Permutation({k: self(other(k)) for k in keys})

    def inverse(self) -> "Permutation":
        return Permutation({v: k for k, v in self._map.items()})

    def moved(self) -> frozenset[Name]:
        return frozenset(self._map)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __repr__(self) -> str:
        if not self._map:
            return "id"
        return "(" + " ".join(f"{k.label}>{v.label}" for k, v in self._map.items()) + ")"
