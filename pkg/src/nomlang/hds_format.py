"""Textual and DOT serialization of automata.

The text format (extension ``.hds``) has four sections::

    states
      q0 x y
      q1
    initial q0 x=#m y=#n
    finals q1
    trans
      q0 --#x[x>y]--> q1
      q0 --eps[]--> q1
      q1 --open[x>*]--> q0

Transition labels are ``#x`` (read the name a local denotes), a bare
identifier (read a letter; the keywords below are reserved), or one of
``eps``, ``push``, ``pop``, ``open``, ``close``.  The name map is a
comma-separated list of ``x>y`` entries, ``x>*`` sending a local to
the allocation placeholder, and ``[]`` for the empty map.  A final
line ``relaxed`` marks automata whose open maps may send several
locals to the placeholder.
"""

from __future__ import annotations

import re

from .names import Letter, Name, STAR
from .hds import Hds, Label, NameMap, Transition, lletter, lname

_KEYWORDS = {"eps", "push", "pop", "open", "close"}


class FormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Writing

def _fmt_sigma(sigma: NameMap) -> str:
    return ",".join(
        f"{k.label}>{'*' if v is STAR else v.label}" for k, v in sigma.entries
    )


def _fmt_label(label: Label) -> str:
    if label.kind == "name":
        return f"#{label.name.label}"
    if label.kind == "letter":
        return label.letter.symbol
    return label.kind


def serialize(h: Hds) -> str:
    lines = ["states"]
    for q in sorted(h.states):
        locs = " ".join(n.label for n in sorted(h.states[q]))
        lines.append(f"  {q} {locs}".rstrip())
    eta = " ".join(
        f"{x.label}=#{v.label}" for x, v in sorted(h.eta.items(), key=lambda kv: kv[0].id)
    )
    lines.append(f"initial {h.initial} {eta}".rstrip())
    lines.append(("finals " + " ".join(sorted(h.finals))).rstrip())
    lines.append("trans")
    for q in sorted(h.trans):
        for t in h.trans[q]:
            lines.append(f"  {q} --{_fmt_label(t.label)}[{_fmt_sigma(t.sigma)}]--> {t.target}")
    if h.relaxed_star:
        lines.append("relaxed")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Reading

_TRANS_RE = re.compile(r"^(\S+)\s+--(.+?)\[(.*?)\]-->\s+(\S+)$")


def _parse_sigma(text: str) -> NameMap:
    entries = {}
    text = text.strip()
    if not text:
        return NameMap.of({})
    for item in text.split(","):
        if ">" not in item:
            raise FormatError(f"bad name-map entry {item!r}")
        src, dst = item.split(">", 1)
        src, dst = src.strip(), dst.strip()
        entries[Name(src)] = STAR if dst == "*" else Name(dst)
    return NameMap.of(entries)


def _parse_label(text: str) -> Label:
    text = text.strip()
    if text.startswith("#"):
        return lname(Name(text[1:]))
    if text in _KEYWORDS:
        return Label(text)
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", text):
        return lletter(Letter(text))
    raise FormatError(f"bad transition label {text!r}")


def parse(text: str) -> Hds:
    states: dict[str, frozenset[Name]] = {}
    initial = None
    eta: dict[Name, Name] = {}
    finals: frozenset[str] = frozenset()
    trans: dict[str, list[Transition]] = {}
    relaxed = False
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("//"):
            continue
        if line == "states":
            section = "states"
            continue
        if line == "trans":
            section = "trans"
            continue
        if line == "relaxed":
            relaxed = True
            section = None
            continue
        if line.startswith("initial"):
            parts = line.split()
            if len(parts) < 2:
                raise FormatError("initial line needs a state id")
            initial = parts[1]
            for binding in parts[2:]:
                if "=#" not in binding:
                    raise FormatError(f"bad initial binding {binding!r}")
                x, v = binding.split("=#", 1)
                eta[Name(x)] = Name(v)
            section = None
            continue
        if line.startswith("finals"):
            finals = frozenset(line.split()[1:])
            section = None
            continue
        if section == "states":
            parts = line.split()
            states[parts[0]] = frozenset(Name(x) for x in parts[1:])
        elif section == "trans":
            m = _TRANS_RE.match(line)
            if m is None:
                raise FormatError(f"bad transition line {line!r}")
            src, label, sigma, dst = m.groups()
            trans.setdefault(src, []).append(
                Transition(_parse_label(label), dst, _parse_sigma(sigma))
            )
        else:
            raise FormatError(f"unexpected line {line!r}")
    if initial is None:
        raise FormatError("missing initial line")
    if initial not in states:
        raise FormatError(f"initial state {initial!r} undeclared")
    for q in states:
        trans.setdefault(q, [])
    unknown = set(trans) - set(states)
    if unknown:
        raise FormatError(f"transitions from undeclared states {sorted(unknown)}")
    return Hds(
        states=states,
        initial=initial,
        eta=eta,
        finals=finals,
        trans={q: tuple(ts) for q, ts in trans.items()},
        relaxed_star=relaxed,
    )


# ---------------------------------------------------------------------------
# DOT export

def to_dot(h: Hds, name: str = "H") -> str:
    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace('"', '\\"')

    lines = [f"digraph {esc(name)} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in sorted(h.states):
        locs = ",".join(n.label for n in sorted(h.states[q]))
        shape = "doublecircle" if q in h.finals else "circle"
        label = f"{q}\\n{{{locs}}}" if locs else q
        lines.append(f'  "{esc(q)}" [shape={shape}, label="{label}"];')
    eta = ",".join(f"{x.label}={v.label}" for x, v in sorted(h.eta.items(), key=lambda kv: kv[0].id))
    lines.append(f'  __start -> "{esc(h.initial)}" [label="{esc(eta)}"];')
    for q in sorted(h.trans):
        for t in h.trans[q]:
            sig = _fmt_sigma(t.sigma)
            lines.append(
                f'  "{esc(q)}" -> "{esc(t.target)}" [label="{esc(_fmt_label(t.label))}"];'
            )
            if sig:
                # name-map annotation, drawn dashed alongside the move
                lines.append(
                    f'  "{esc(q)}" -> "{esc(t.target)}" '
                    f'[style=dashed, color=gray40, fontcolor=gray40, label="{esc(sig)}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
