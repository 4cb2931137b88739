"""Translation of regular expressions into stack automata.

The translation is structural: base automata for the unit, the empty
language, single names and single letters; a sum construction joining
two automata under a fresh initial state; concatenation linking the
(unique) final state of the first automaton to the initial state of
the second after extending the first with the second's initial locals;
iteration via a push transition re-establishing the initial name
bindings; and name binding via an allocating open transition and a
deallocating close transition.

Two points deserve attention:

* `add_name` threads the new name through every transition with the
  identity, except through push transitions, where the pushed frame
  would otherwise record the local name itself as the datum and
  clobber the threaded value for the rest of the run.  Pushes instead
  record the name's static initial value, which the concatenation
  construction knows (it is the second automaton's eta).

* Binding a name whose initial map has several preimages (which
  arises as soon as the bound name occurs both directly in a
  concatenation and inside a nested binder) maps every preimage to the
  placeholder.  The resulting open transition is injective only in the
  relaxed sense (all collisions are at the placeholder), so the
  automaton is flagged accordingly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .names import Name, STAR
from .hds import (
    BOTTOM,
    Hds,
    L_CLOSE,
    L_EPS,
    L_OPEN,
    L_PUSH,
    Label,
    NameMap,
    Transition,
    lletter,
    lname,
    rename_local,
)
from . import regex as rx


class CompileError(ValueError):
    pass


@dataclass
class FreshSupply:
    """Source of state ids and local names unused so far."""

    avoid: frozenset[Name] = frozenset()
    _state: int = 0
    _local: int = 0

    def state(self) -> str:
        s = f"q{self._state}"
        self._state += 1
        return s

    def local(self) -> Name:
        while True:
            n = Name(f"x{self._local}")
            self._local += 1
            if n not in self.avoid:
                return n


def _identity(names: Iterable[Name]) -> NameMap:
    return NameMap.of({x: x for x in names})


# ---------------------------------------------------------------------------
# Building blocks

def hds_one(supply: FreshSupply) -> Hds:
    q0, qf = supply.state(), supply.state()
    return Hds(
        states={q0: frozenset(), qf: frozenset()},
        initial=q0,
        eta={},
        finals=frozenset({qf}),
        trans={q0: (Transition(L_EPS, qf, BOTTOM),), qf: ()},
    )


def hds_zero(supply: FreshSupply) -> Hds:
    q0 = supply.state()
    return Hds(
        states={q0: frozenset()},
        initial=q0,
        eta={},
        finals=frozenset(),
        trans={q0: ()},
    )


def hds_name(n: Name, supply: FreshSupply) -> Hds:
    q0, qf = supply.state(), supply.state()
    x = supply.local()
    return Hds(
        states={q0: frozenset({x}), qf: frozenset()},
        initial=q0,
        eta={x: n},
        finals=frozenset({qf}),
        trans={q0: (Transition(lname(x), qf, BOTTOM),), qf: ()},
    )


def hds_letter(s, supply: FreshSupply) -> Hds:
    q0, qf = supply.state(), supply.state()
    return Hds(
        states={q0: frozenset(), qf: frozenset()},
        initial=q0,
        eta={},
        finals=frozenset({qf}),
        trans={q0: (Transition(lletter(s), qf, BOTTOM),), qf: ()},
    )


def hds_sum(h1: Hds, h2: Hds, supply: Optional[FreshSupply] = None) -> Hds:
    """Union: fresh initial state with silent transitions into both operands."""
    supply = supply or _supply_for(h1, h2)
    h1, h2 = _ensure_disjoint(h1, h2, supply)
    q0 = supply.state()
    loc1 = h1.states[h1.initial]
    loc2 = h2.states[h2.initial]
    states = {**h1.states, **h2.states, q0: loc1 | loc2}
    trans = {**h1.trans, **h2.trans}
    trans[q0] = (
        Transition(L_EPS, h1.initial, _identity(loc1)),
        Transition(L_EPS, h2.initial, _identity(loc2)),
    )
    return Hds(
        states=states,
        initial=q0,
        eta={**h1.eta, **h2.eta},
        finals=h1.finals | h2.finals,
        trans=trans,
        relaxed_star=h1.relaxed_star or h2.relaxed_star,
    )


def unique_final(h: Hds, supply: Optional[FreshSupply] = None) -> Hds:
    """Wrap with a fresh no-name final state (always, even if already unique)."""
    supply = supply or _supply_for(h)
    qf = supply.state()
    states = {**h.states, qf: frozenset()}
    trans = dict(h.trans)
    for q in h.finals:
        trans[q] = trans.get(q, ()) + (Transition(L_EPS, qf, BOTTOM),)
    trans[qf] = ()
    return Hds(states, h.initial, dict(h.eta), frozenset({qf}), trans, h.relaxed_star)


def add_name(h: Hds, x: Name) -> Hds:
    """Extend every state with local name `x`, threaded with the identity.

    `x` carries no initial meaning (the initial map stays undefined on
    it), so the language is unchanged.  In pushed frames the identity
    entry resolves to the name's current meaning, so a caller that
    later gives `x` an initial meaning keeps it across iterations.
    """
    if any(x in locs for locs in h.states.values()):
        h = _displace_local(h, x)
    states = {q: locs | {x} for q, locs in h.states.items()}
    trans: dict[str, tuple[Transition, ...]] = {}
    for q, ts in h.trans.items():
        new_ts = []
        for t in ts:
            sigma = t.sigma.as_dict()
            sigma[x] = x
            new_ts.append(Transition(t.label, t.target, NameMap.of(sigma)))
        trans[q] = tuple(new_ts)
    return Hds(states, h.initial, dict(h.eta), h.finals, trans, h.relaxed_star)


def hds_concat(h1: Hds, h2: Hds, supply: Optional[FreshSupply] = None) -> Hds:
    """Sequential composition: H1's final feeds H2's initial.

    H2's initial locals are first added throughout H1 so the linking
    silent transition can hand over their initial meanings.
    """
    supply = supply or _supply_for(h1, h2)
    h1, h2 = _ensure_disjoint(h1, h2, supply)
    if len(h1.finals) != 1:
        h1 = unique_final(h1, supply)
    (qf1,) = h1.finals
    loc2 = h2.states[h2.initial]
    for x in sorted(loc2):
        h1 = add_name(h1, x)
    states = {**h1.states, **h2.states}
    trans = {**h1.trans, **h2.trans}
    trans[qf1] = h1.trans[qf1] + (Transition(L_EPS, h2.initial, _identity(loc2)),)
    return Hds(
        states=states,
        initial=h1.initial,
        eta={**h1.eta, **h2.eta},
        finals=h2.finals,
        trans=trans,
        relaxed_star=h1.relaxed_star or h2.relaxed_star,
    )


def hds_star(h: Hds, supply: Optional[FreshSupply] = None) -> Hds:
    """Iteration: silent skip for the empty word, push transition looping back.

    The pushed frame is the initial name map, so each iteration starts
    from the initial meanings while the previous frame is preserved
    below.
    """
    supply = supply or _supply_for(h)
    h = unique_final(h, supply)
    (qf,) = h.finals
    states = dict(h.states)
    trans = dict(h.trans)
    q0 = h.initial
    initial = q0
    # The empty-word skip must fire only before the body has started.
    # If the body can re-enter its initial state (an inner loop targets
    # it), hang the skip on a fresh state in front of it instead.
    if any(t.target == q0 for _, t in h.transitions()):
        initial = supply.state()
        loc0 = h.states[q0]
        states[initial] = loc0
        trans[initial] = (Transition(L_EPS, q0, _identity(loc0)),)
    trans[initial] = trans.get(initial, ()) + (Transition(L_EPS, qf, BOTTOM),)
    trans[qf] = (Transition(L_PUSH, q0, NameMap.of(h.eta)),)
    return Hds(states, initial, dict(h.eta), h.finals, trans, h.relaxed_star)


def hds_bind(n: Name, h: Hds, supply: Optional[FreshSupply] = None) -> Hds:
    """Name binding: allocate at open, recognize the body, deallocate at close.

    Every initial local denoting `n` is sent to the placeholder by the
    open transition, so it picks up the allocated name.  With several
    such locals the open map is injective only up to placeholder
    collisions and the automaton is flagged as relaxed.
    """
    supply = supply or _supply_for(h)
    h = unique_final(h, supply)
    (qf,) = h.finals
    loc0 = h.states[h.initial]
    bound = frozenset(x for x in loc0 if h.eta.get(x) is n)
    h = _repoint_stale_pushes(h, n, bound)
    q_open, q_close = supply.state(), supply.state()
    sigma = NameMap.of({x: (STAR if x in bound else x) for x in loc0})
    states = {**h.states, q_open: loc0 - bound, q_close: frozenset()}
    trans = dict(h.trans)
    trans[q_open] = (Transition(L_OPEN, h.initial, sigma),)
    trans[qf] = trans[qf] + (Transition(L_CLOSE, q_close, BOTTOM),)
    trans[q_close] = ()
    eta = {x: v for x, v in h.eta.items() if x not in bound}
    return Hds(
        states=states,
        initial=q_open,
        eta=eta,
        finals=frozenset({q_close}),
        trans=trans,
        relaxed_star=h.relaxed_star or len(bound) > 1,
    )


def _repoint_stale_pushes(h: Hds, n: Name, bound: frozenset[Name]) -> Hds:
    """Prepare the body of a binder whose push frames mention the bound name.

    A pushed frame recording `n` verbatim would re-install the static
    name instead of the one allocated at the open transition.  The
    fix: thread the initial locals that denote `n` through every state,
    then replace `n` in pushed frames by such a local, which resolves
    to the allocated name at push time.
    """
    stale = any(
        t.label.kind == "push" and any(v is n for v in t.sigma.values())
        for _, t in h.transitions()
    )
    if not stale:
        return h
    if not bound:
        raise CompileError(
            f"push frame mentions {n.label} but no initial local denotes it"
        )
    states = {q: locs | bound for q, locs in h.states.items()}
    anchor = min(bound)
    trans: dict[str, tuple[Transition, ...]] = {}
    for q, ts in h.trans.items():
        new_ts = []
        for t in ts:
            sigma = t.sigma.as_dict()
            if t.label.kind == "push":
                sigma = {k: (anchor if v is n else v) for k, v in sigma.items()}
            for x in bound:
                sigma.setdefault(x, x)
            new_ts.append(Transition(t.label, t.target, NameMap.of(sigma)))
        trans[q] = tuple(new_ts)
    return Hds(states, h.initial, dict(h.eta), h.finals, trans, h.relaxed_star)


# ---------------------------------------------------------------------------
# The compiler

def compile_regex(e: rx.Regex, supply: Optional[FreshSupply] = None) -> Hds:
    """Translate an expression into an automaton recognizing its language."""
    if supply is None:
        supply = FreshSupply(avoid=rx.free_names(e))
    if isinstance(e, rx.One):
        return hds_one(supply)
    if isinstance(e, rx.Zero):
        return hds_zero(supply)
    if isinstance(e, rx.NameLit):
        return hds_name(e.name, supply)
    if isinstance(e, rx.LetterLit):
        return hds_letter(e.letter, supply)
    if isinstance(e, rx.Sum):
        return hds_sum(
            compile_regex(e.left, supply), compile_regex(e.right, supply), supply
        )
    if isinstance(e, rx.Cat):
        return hds_concat(
            compile_regex(e.left, supply), compile_regex(e.right, supply), supply
        )
    if isinstance(e, rx.Star):
        return hds_star(compile_regex(e.body, supply), supply)
    if isinstance(e, rx.Binder):
        return hds_bind(e.name, compile_regex(e.body, supply), supply)
    raise CompileError(f"unknown expression node {type(e).__name__}")


# ---------------------------------------------------------------------------
# Freshness plumbing for public use on hand-built automata

def _supply_for(*hs: Hds) -> FreshSupply:
    avoid = frozenset().union(*(h.local_names() for h in hs)) | frozenset(
        v for h in hs for v in h.eta.values()
    )
    s = FreshSupply(avoid=avoid)
    used_states = {q for h in hs for q in h.states}
    ks = [int(q[1:]) for q in used_states if q[:1] == "q" and q[1:].isdigit()]
    if ks:
        s._state = max(ks) + 1
    return s


def _displace_local(h: Hds, x: Name) -> Hds:
    """Rename `x` away wherever it is local, freeing it for `add_name`."""
    from .names import fresh_name

    for q, locs in list(h.states.items()):
        if x in locs:
            avoid = h.local_names() | frozenset(h.eta.values())
            y = fresh_name(x.label)
            while y in avoid:
                y = fresh_name(x.label)
            mapping = {z: (y if z is x else z) for z in locs}
            h = rename_local(h, q, mapping)
    return h


def _ensure_disjoint(h1: Hds, h2: Hds, supply: FreshSupply) -> tuple[Hds, Hds]:
    """Rename h2 apart from h1 in state ids and local names if needed."""
    if not (set(h1.states) & set(h2.states)) and not (
        h1.local_names() & h2.local_names()
    ):
        return h1, h2
    # fresh state ids for h2
    ren = {q: supply.state() for q in h2.states}
    states = {ren[q]: locs for q, locs in h2.states.items()}
    trans = {
        ren[q]: tuple(Transition(t.label, ren[t.target], t.sigma) for t in ts)
        for q, ts in h2.trans.items()
    }
    h2 = Hds(
        states,
        ren[h2.initial],
        dict(h2.eta),
        frozenset(ren[q] for q in h2.finals),
        trans,
        h2.relaxed_star,
    )
    clash = h1.local_names() & h2.local_names()
    for x in sorted(clash):
        y = supply.local()
        for q, locs in list(h2.states.items()):
            if x in locs:
                h2 = rename_local(h2, q, {z: (y if z is x else z) for z in locs})
    return h1, h2
