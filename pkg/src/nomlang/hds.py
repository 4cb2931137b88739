"""History-dependent automata with a stack of name maps.

States carry finite sets of local names.  A transition relabels the
target's local names through a partial injective map into the source's
locals and may consume a name or letter token, stay silent, push or pop
a stack frame, or allocate/deallocate a bound name at the matching
open/close tokens of the input stream.

Recognition explores the nondeterministic configuration graph with
memoization.  Non-consuming loops can push frames forever, so the
search is pruned: stack depth is capped (input length + state count + 1
by default, overridable) and by default a given push transition fires
at most once between two token consumptions; both policies can be
relaxed for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Union

from .names import Letter, Name, STAR
from .words import (
    MWord,
    TClose,
    TCLOSE,
    TLetter,
    TName,
    TOpen,
    Tok,
    alpha_canonical,
    parse_tokens,
)
from .names import canonical_supply

MapValue = Union[Name, type(STAR)]


@dataclass(frozen=True)
class NameMap:
    """A finite partial map from names to names-or-star."""

    entries: tuple[tuple[Name, object], ...]

    @classmethod
    def of(cls, mapping: dict | None = None, **kw) -> "NameMap":
        m = dict(mapping or {})
        return cls(tuple(sorted(m.items(), key=lambda kv: kv[0].id)))

    def get(self, n: Name, default=None):
        for k, v in self.entries:
            if k is n:
                return v
        return default

    def as_dict(self) -> dict:
        return dict(self.entries)

    @property
    def domain(self) -> frozenset[Name]:
        return frozenset(k for k, _ in self.entries)

    def values(self):
        return [v for _, v in self.entries]

    def is_injective(self, relaxed_star: bool = False) -> bool:
        seen_names = set()
        star_preimages = 0
        for _, v in self.entries:
            if v is STAR:
                star_preimages += 1
            else:
                if v in seen_names:
                    return False
                seen_names.add(v)
        return relaxed_star or star_preimages <= 1

    def __repr__(self):
        if not self.entries:
            return "_|_"
        return ",".join(
            f"{k.label}>{'*' if v is STAR else v.label}" for k, v in self.entries
        )


BOTTOM = NameMap(())

Stack = tuple  # of NameMap, index 0 is the top


def top(stack: Stack) -> NameMap:
    return stack[0] if stack else BOTTOM


def pop(stack: Stack) -> Stack:
    return stack[1:] if stack else ()


def compose(sigma: NameMap, f: dict) -> NameMap:
    """The map x -> f(sigma(x)), defined where both legs are."""
    out = {}
    for k, v in sigma.entries:
        if v in f:
            out[k] = f[v]
    return NameMap.of(out)


def stack_update(stack: Stack, sigma: NameMap) -> Stack:
    """Replace the top frame by sigma post-composed with it (star kept fixed)."""
    if not stack:
        return (sigma,)
    f = dict(stack[0].entries)
    f[STAR] = STAR
    return (compose(sigma, f),) + stack[1:]


def push_frame(sigma: NameMap, top_frame: NameMap) -> NameMap:
    """The frame a push transition installs.

    A pushed value that is currently bound in the top frame (a local of
    the source state) stands for its current meaning and is resolved;
    any other value is a global name and is pushed as such.
    """
    f = top_frame.as_dict()
    return NameMap.of({k: f.get(v, v) for k, v in sigma.entries})


# ---------------------------------------------------------------------------
# Labels and transitions

@dataclass(frozen=True)
class Label:
    kind: str  # "name" | "letter" | "eps" | "push" | "pop" | "open" | "close"
    name: Optional[Name] = None
    letter: Optional[Letter] = None

    def __repr__(self):
        if self.kind == "name":
            return f"#{self.name.label}"
        if self.kind == "letter":
            return self.letter.symbol
        return self.kind


L_EPS = Label("eps")
L_PUSH = Label("push")
L_POP = Label("pop")
L_OPEN = Label("open")
L_CLOSE = Label("close")


def lname(n: Name) -> Label:
    return Label("name", name=n)


def lletter(s: Letter) -> Label:
    return Label("letter", letter=s)


@dataclass(frozen=True)
class Transition:
    label: Label
    target: str
    sigma: NameMap

    def __repr__(self):
        return f"--{self.label!r}[{self.sigma!r}]--> {self.target}"


@dataclass
class Hds:
    """An automaton: named states, initial name bindings, finals, transitions."""

    states: dict[str, frozenset[Name]]  # state id -> local names
    initial: str
    eta: dict[Name, Name]  # initial meaning of the initial state's locals
    finals: frozenset[str]
    trans: dict[str, tuple[Transition, ...]]
    relaxed_star: bool = False  # allow several star preimages in sigma

    def local_names(self) -> frozenset[Name]:
        out: frozenset[Name] = frozenset()
        for locs in self.states.values():
            out |= locs
        return out

    def letters(self) -> frozenset[Letter]:
        return frozenset(
            t.label.letter
            for ts in self.trans.values()
            for t in ts
            if t.label.kind == "letter"
        )

    def transitions(self) -> Iterable[tuple[str, Transition]]:
        for q, ts in self.trans.items():
            for t in ts:
                yield q, t

    def size(self) -> int:
        return len(self.states)


def validate(h: Hds) -> list[str]:
    """Well-formedness violations (empty list means well-formed)."""
    bad: list[str] = []
    if h.initial not in h.states:
        bad.append(f"initial state {h.initial} undeclared")
    for q in h.finals:
        if q not in h.states:
            bad.append(f"final state {q} undeclared")
    init_locals = h.states.get(h.initial, frozenset())
    for x, v in h.eta.items():
        if x not in init_locals:
            bad.append(f"eta binds {x.label} outside the initial state's locals")
        if not isinstance(v, Name):
            bad.append(f"eta value for {x.label} is not a name")
    for q, ts in h.trans.items():
        if q not in h.states:
            bad.append(f"transitions from undeclared state {q}")
            continue
        src = h.states[q]
        for t in ts:
            where = f"{q} {t!r}"
            if t.target not in h.states:
                bad.append(f"{where}: undeclared target")
                continue
            tgt = h.states[t.target]
            if t.label.kind == "name" and t.label.name not in src:
                bad.append(f"{where}: label name not local to source")
            if not t.sigma.domain <= tgt:
                bad.append(f"{where}: sigma domain exceeds target locals")
            for v in t.sigma.values():
                if t.label.kind == "open":
                    if v is not STAR and v not in src:
                        bad.append(f"{where}: open sigma value outside source locals")
                elif t.label.kind == "push":
                    if not isinstance(v, Name):
                        bad.append(f"{where}: push sigma must map into names")
                else:
                    if v is STAR or v not in src:
                        bad.append(f"{where}: sigma value outside source locals")
            # push frames assign global names like eta does, which need
            # not be injective; all other maps must be
            if t.label.kind != "push" and not t.sigma.is_injective(h.relaxed_star):
                bad.append(f"{where}: sigma not injective")
    return bad


# ---------------------------------------------------------------------------
# Moves

Config = tuple  # (state id, position in input, Stack)


def step(h: Hds, cfg: Config, tokens: tuple[Tok, ...]) -> list[tuple[Config, Transition]]:
    """All one-step successors of a configuration."""
    state, pos, stk = cfg
    tok = tokens[pos] if pos < len(tokens) else None
    out = []
    for t in h.trans.get(state, ()):
        k = t.label.kind
        if k == "name":
            if isinstance(tok, TName) and top(stk).get(t.label.name) == tok.name:
                out.append(((t.target, pos + 1, stack_update(stk, t.sigma)), t))
        elif k == "letter":
            if isinstance(tok, TLetter) and tok.letter == t.label.letter:
                out.append(((t.target, pos + 1, stack_update(stk, t.sigma)), t))
        elif k == "eps":
            out.append(((t.target, pos, stack_update(stk, t.sigma)), t))
        elif k == "push":
            out.append(((t.target, pos, (push_frame(t.sigma, top(stk)),) + stk), t))
        elif k == "pop":
            frame = compose(t.sigma, top(pop(stk)).as_dict())
            out.append(((t.target, pos, (frame,) + stk[2:]), t))
        elif k == "open":
            if isinstance(tok, TOpen):
                f = top(stk).as_dict()
                f[STAR] = tok.name
                out.append(((t.target, pos + 1, (compose(t.sigma, f),) + stk), t))
        else:  # close
            if isinstance(tok, TClose):
                frame = compose(t.sigma, top(pop(stk)).as_dict())
                out.append(((t.target, pos + 1, (frame,) + stk[2:]), t))
    return out


ACCEPT = "accept"
REJECT = "reject"
CUTOFF = "cutoff"  # pruning fired on a still-live branch; no accept found


@dataclass
class RunResult:
    outcome: str
    trace: Optional[list] = None  # [(config, transition-or-None), ...]

    @property
    def accepted(self) -> bool:
        return self.outcome == ACCEPT


def initial_config(h: Hds) -> Config:
    return (h.initial, 0, (NameMap.of(h.eta),))


def run(
    h: Hds,
    tokens: tuple[Tok, ...],
    max_depth: Optional[int] = None,
    reuse_pushes: bool = False,
    want_trace: bool = False,
    initial_stack: Optional[Stack] = None,
    truncate: bool = True,
) -> RunResult:
    """Search for an accepting run on the token stream.

    `max_depth` caps the stack depth (default: input length + state
    count + 1).  Unless `reuse_pushes` is set, a push transition fires
    at most once between two token consumptions, which cuts the
    unproductive loops star constructions introduce.  `initial_stack`
    overrides the frames below the initial name map (useful for
    checking that they cannot influence acceptance); `truncate`
    controls the dead-frame optimization below.
    """
    if max_depth is None:
        max_depth = len(tokens) + len(h.states) + 1 + len(initial_stack or ())
    # Without pop transitions, only close transitions read below the top,
    # one frame per remaining close token: deeper frames are dead and can
    # be dropped, which keeps the explored configuration space small.
    has_pop = (
        any(t.label.kind == "pop" for _, t in h.transitions()) or not truncate
    )
    start = initial_config(h)
    if initial_stack is not None:
        start = (start[0], start[1], start[2] + tuple(initial_stack))
    # Search node: (config, frozenset of push transitions used since a consume)
    seen = set()
    parents: dict = {}
    frontier = [(start, frozenset())]
    seen.add((start, frozenset()))
    pruned_live = False
    while frontier:
        node = frontier.pop()
        cfg, gap = node
        state, pos, stk = cfg
        if pos == len(tokens) and state in h.finals:
            trace = None
            if want_trace:
                trace = []
                cur = node
                while cur is not None:
                    prev = parents.get(cur)
                    trace.append((cur[0], prev[1] if prev else None))
                    cur = prev[0] if prev else None
                trace.reverse()
            return RunResult(ACCEPT, trace)
        for nxt, t in step(h, cfg, tokens):
            consumed = nxt[1] > pos
            if consumed:
                gap2 = frozenset()
            elif t.label.kind == "push":
                if not reuse_pushes and t in gap:
                    continue
                gap2 = gap | {t}
            else:
                gap2 = gap
            if not has_pop:
                nxt = (nxt[0], nxt[1], nxt[2][: len(tokens) - nxt[1] + 1])
            if len(nxt[2]) > max_depth:
                pruned_live = True
                continue
            node2 = (nxt, gap2)
            if node2 in seen:
                continue
            seen.add(node2)
            if want_trace:
                parents[node2] = (node, t)
            frontier.append(node2)
    return RunResult(CUTOFF if pruned_live else REJECT)


def accepts(h: Hds, tokens: tuple[Tok, ...], max_depth: Optional[int] = None) -> bool:
    return run(h, tokens, max_depth=max_depth).accepted


def accepts_word(h: Hds, w: MWord, max_depth: Optional[int] = None) -> bool:
    """Acceptance of a word, decided on its canonical tokenization."""
    from .words import tokenize

    return accepts(h, tokenize(alpha_canonical(w)), max_depth=max_depth)


# ---------------------------------------------------------------------------
# Bounded language enumeration

def language_slice(
    h: Hds,
    bound: int,
    pool: Optional[frozenset[Name]] = None,
    max_extra_depth: Optional[int] = None,
    reuse_pushes: bool = False,
) -> frozenset[MWord]:
    """Canonical words of token length at most `bound` accepted by `h`.

    Explores the configuration graph forwards, emitting the token each
    consuming transition would read; allocation transitions emit a
    fresh canonical bound name.  The same pruning policies as `run`
    apply, with the emitted length playing the role of the position.
    """
    if pool is not None:
        missing = frozenset(h.eta.values()) - frozenset(pool)
        if missing:
            raise ValueError(
                f"pool omits eta names: {sorted(n.label for n in missing)}"
            )
    if max_extra_depth is None:
        max_extra_depth = len(h.states) + 1
    max_depth = bound + max_extra_depth
    has_pop = any(t.label.kind == "pop" for _, t in h.transitions())
    avoid = set(h.eta.values())
    supply = canonical_supply(avoid)
    fresh_pool = [next(supply) for _ in range(bound // 2 + 1)]

    out: set[MWord] = set()
    start = (h.initial, (), 0, (NameMap.of(h.eta),))  # state, emitted, open-depth, stack
    seen = {(start, frozenset())}
    frontier = [(start, frozenset())]
    while frontier:
        node = frontier.pop()
        (state, emitted, depth, stk), gap = node
        if state in h.finals and depth == 0:
            out.add(alpha_canonical(parse_tokens(emitted)))
        for t in h.trans.get(state, ()):
            k = t.label.kind
            emit: Optional[Tok] = None
            depth2 = depth
            if k == "name":
                v = top(stk).get(t.label.name)
                if not isinstance(v, Name):
                    continue
                emit = TName(v)
                stk2 = stack_update(stk, t.sigma)
            elif k == "letter":
                emit = TLetter(t.label.letter)
                stk2 = stack_update(stk, t.sigma)
            elif k == "eps":
                stk2 = stack_update(stk, t.sigma)
            elif k == "push":
                if not reuse_pushes and t in gap:
                    continue
                stk2 = (push_frame(t.sigma, top(stk)),) + stk
            elif k == "pop":
                stk2 = (compose(t.sigma, top(pop(stk)).as_dict()),) + stk[2:]
            elif k == "open":
                opens = sum(1 for x in emitted if isinstance(x, TOpen))
                c = fresh_pool[opens] if opens < len(fresh_pool) else next(supply)
                emit = TOpen(c)
                f = top(stk).as_dict()
                f[STAR] = c
                stk2 = (compose(t.sigma, f),) + stk
                depth2 = depth + 1
            else:  # close
                if depth == 0:
                    continue
                emit = TCLOSE
                stk2 = (compose(t.sigma, top(pop(stk)).as_dict()),) + stk[2:]
                depth2 = depth - 1
            if emit is not None:
                if len(emitted) >= bound:
                    continue
                emitted2 = emitted + (emit,)
                gap2 = frozenset()
            else:
                emitted2 = emitted
                gap2 = gap | {t} if k == "push" else gap
            if not has_pop:
                # below-top frames beyond one per remaining token are dead
                stk2 = stk2[: bound - len(emitted2) + 1]
            if len(stk2) > max_depth:
                continue
            node2 = ((t.target, emitted2, depth2, stk2), gap2)
            if node2 in seen:
                continue
            seen.add(node2)
            frontier.append(node2)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Local-name renaming and isomorphism

def rename_local(h: Hds, q: str, fresh: dict[Name, Name]) -> Hds:
    """Consistently rename the local names of one state.

    Rewrites the state's locals, eta if `q` is initial, and the name
    maps of every transition entering or leaving `q`.  The recognized
    language is unchanged.
    """
    if q not in h.states:
        raise ValueError(f"unknown state {q}")
    locs = h.states[q]
    if set(fresh) != set(locs):
        raise ValueError("renaming must cover exactly the state's local names")
    if len(set(fresh.values())) != len(fresh):
        raise ValueError("renaming must be injective")
    new_locs = frozenset(fresh.values())

    def src_value(v):
        if v is STAR or not isinstance(v, Name):
            return v
        return fresh.get(v, v)

    states = dict(h.states)
    states[q] = new_locs
    trans: dict[str, tuple[Transition, ...]] = {}
    for s, ts in h.trans.items():
        new_ts = []
        for t in ts:
            label = t.label
            sigma = t.sigma.as_dict()
            if s == q:
                if label.kind == "name":
                    label = lname(fresh[label.name])
                # push values that are source locals resolve through the
                # top frame, so they are renamed like any other; genuinely
                # global push values are not in `fresh` and pass through
                sigma = {k: src_value(v) for k, v in sigma.items()}
            if t.target == q:
                sigma = {fresh.get(k, k): v for k, v in sigma.items()}
            new_ts.append(Transition(label, t.target, NameMap.of(sigma)))
        trans[s] = tuple(new_ts)
    eta = h.eta
    if q == h.initial:
        eta = {fresh[k]: v for k, v in h.eta.items()}
    return Hds(states, h.initial, eta, h.finals, trans, h.relaxed_star)


def _signature(h: Hds, q: str):
    labels = sorted(
        (t.label.kind, t.label.letter.symbol if t.label.letter else "")
        for t in h.trans.get(q, ())
    )
    indeg = sum(1 for _, t in h.transitions() if t.target == q)
    return (
        len(h.states[q]),
        q == h.initial,
        q in h.finals,
        tuple(labels),
        indeg,
    )


def isomorphic(h1: Hds, h2: Hds) -> bool:
    """Structural equivalence up to renaming of state ids and local names."""
    if len(h1.states) != len(h2.states) or len(h1.finals) != len(h2.finals):
        return False
    sig1 = {q: _signature(h1, q) for q in h1.states}
    sig2 = {q: _signature(h2, q) for q in h2.states}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    order = sorted(h1.states, key=lambda q: (sig1[q], q))

    def match_sigma(s1: NameMap, s2: NameMap, dom_map: dict, cod_map: dict, is_push: bool) -> bool:
        d1, d2 = s1.as_dict(), s2.as_dict()
        if len(d1) != len(d2):
            return False
        for k, v in d1.items():
            k2 = dom_map.get(k)
            if k2 is None or k2 not in d2:
                return False
            v2 = d2[k2]
            if v is STAR:
                if v2 is not STAR:
                    return False
            elif is_push and v not in cod_map:
                # a global name in a pushed frame must match verbatim
                if v2 != v:
                    return False
            else:
                if cod_map.get(v) != v2:
                    return False
        return True

    def extend(i: int, smap: dict, nmaps: dict) -> bool:
        if i == len(order):
            return check_all(smap, nmaps)
        q1 = order[i]
        used = set(smap.values())
        for q2 in h2.states:
            if q2 in used or sig2[q2] != sig1[q1]:
                continue
            for nmap in _name_bijections(h1.states[q1], h2.states[q2]):
                smap[q1] = q2
                nmaps[q1] = nmap
                if partial_ok(q1, smap, nmaps) and extend(i + 1, smap, nmaps):
                    return True
                del smap[q1]
                del nmaps[q1]
        return False

    def partial_ok(q1: str, smap: dict, nmaps: dict) -> bool:
        # check every transition whose endpoints are both mapped
        for s in smap:
            for t in h1.trans.get(s, ()):
                if t.target not in smap:
                    continue
                if not transition_matched(s, t, smap, nmaps):
                    return False
            s2 = smap[s]
            mapped_count = sum(1 for t in h1.trans.get(s, ()) if t.target in smap)
            inv = {v: k for k, v in smap.items()}
            mapped_count2 = sum(
                1 for t in h2.trans.get(s2, ()) if t.target in inv
            )
            if mapped_count != mapped_count2:
                return False
        return True

    def transition_matched(s: str, t: Transition, smap: dict, nmaps: dict) -> bool:
        s2 = smap[s]
        for t2 in h2.trans.get(s2, ()):
            if t2.target != smap[t.target] or t2.label.kind != t.label.kind:
                continue
            if t.label.kind == "letter" and t2.label.letter != t.label.letter:
                continue
            if t.label.kind == "name" and nmaps[s].get(t.label.name) != t2.label.name:
                continue
            if match_sigma(
                t.sigma, t2.sigma, nmaps[t.target], nmaps[s], t.label.kind == "push"
            ):
                return True
        return False

    def check_all(smap: dict, nmaps: dict) -> bool:
        if smap[h1.initial] != h2.initial:
            return False
        if {smap[q] for q in h1.finals} != set(h2.finals):
            return False
        q0map = nmaps[h1.initial]
        eta2 = {q0map[k]: v for k, v in h1.eta.items()}
        if eta2 != h2.eta:
            return False
        for s in h1.states:
            if len(h1.trans.get(s, ())) != len(h2.trans.get(smap[s], ())):
                return False
            for t in h1.trans.get(s, ()):
                if not transition_matched(s, t, smap, nmaps):
                    return False
        return True

    return extend(0, {}, {})


def _name_bijections(a: frozenset[Name], b: frozenset[Name]):
    from itertools import permutations

    if len(a) != len(b):
        return
    xs = sorted(a)
    for perm in permutations(sorted(b)):
        yield dict(zip(xs, perm))
