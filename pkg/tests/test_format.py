import pytest

from nomlang.names import Name
from nomlang.compiler import compile_regex
from nomlang.syntax import parse_regex
from nomlang.hds import language_slice, isomorphic, validate
from nomlang import hds_format
from nomlang.hds_format import FormatError, parse, serialize, to_dot

from conftest import NAMES, LETTERS


SOURCES = [
    "1",
    "#n + a",
    "( #n a )*",
    "<#n. #n a >",
    "#m <#n. #m #n >*",
    "<#n. #n <#m. #n #m > >*",
]


@pytest.mark.parametrize("src", SOURCES)
def test_serialize_parse_roundtrip(src):
    h = compile_regex(parse_regex(src, letters={s.symbol for s in LETTERS}))
    h2 = parse(serialize(h))
    assert validate(h2) == []
    assert h2.states == h.states
    assert h2.initial == h.initial
    assert h2.eta == h.eta
    assert h2.finals == h.finals
    assert h2.relaxed_star == h.relaxed_star
    for q in h.states:
        assert set(h2.trans.get(q, ())) == set(h.trans.get(q, ()))
    assert language_slice(h2, 6) == language_slice(h, 6)


def test_parse_tolerates_comments_and_blank_lines():
    text = serialize(compile_regex(parse_regex("#n", letters=set())))
    noisy = "// header\n\n" + text.replace("trans", "// about to list moves\ntrans")
    assert parse(noisy).states == parse(text).states


def test_parse_rejects_garbage():
    with pytest.raises(FormatError):
        parse("this is not an automaton")
    with pytest.raises(FormatError):
        parse("states\n  q0\ninitial q1\nfinals\ntrans\n")  # undeclared initial


def test_parse_rejects_bad_transition_line():
    good = serialize(compile_regex(parse_regex("#n", letters=set())))
    with pytest.raises(FormatError):
        parse(good + "  q0 --??[]--> q1\n")
    with pytest.raises(FormatError):
        parse(good + "  q0 --eps[x]--> q1\n")  # malformed name map


def test_to_dot_mentions_every_state_and_label():
    h = compile_regex(parse_regex("#m <#n. #m #n >*", letters=set()))
    dot = to_dot(h)
    assert dot.startswith("digraph")
    for q in h.states:
        assert q in dot
    assert "doublecircle" in dot
    for kind in ("open", "close", "push"):
        assert kind in dot
