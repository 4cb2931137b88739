import pytest

from nomlang.names import Name
from nomlang import regex as rx
from nomlang.regex import enumerate_slice, free_names, member
from nomlang.syntax import ParseError, parse_nre, parse_regex, parse_word, render_regex
from nomlang.words import alpha_canonical, token_length

from conftest import NAMES, LETTERS

n, m, k = NAMES
a, b = LETTERS


def words_of(src, bound=6, sort="M"):
    e = parse_regex(src, letters={s.symbol for s in LETTERS})
    return enumerate_slice(e, sort, bound).words


def canon(src):
    return alpha_canonical(parse_word(src))


# -- parsing -----------------------------------------------------------------

def test_parser_precedence():
    e = parse_regex("#n #m + #k*", letters=set())
    assert e == rx.Sum(rx.Cat(rx.NameLit(n), rx.NameLit(m)), rx.Star(rx.NameLit(k)))


def test_parser_binder_and_groups():
    e = parse_regex("<#n. #n ( a + b ) >", letters={"a", "b"})
    assert isinstance(e, rx.Binder)
    assert e.name is n


def test_render_parse_roundtrip_examples():
    for src in ("#n* + a", "<#n. #n <#m. #n #m > >", "( #n + 0 ) ( 1 + b )"):
        e = parse_regex(src, letters={"a", "b"})
        assert parse_regex(render_regex(e), letters={"a", "b"}) == e


def test_undeclared_letter_rejected():
    with pytest.raises(ParseError):
        parse_regex("#n c", letters={"a", "b"})


def test_parse_nre_declarations():
    e, letters = parse_nre("letters a b;\n#n a b")
    assert letters == {"a", "b"}
    assert e == rx.Cat(rx.Cat(rx.NameLit(n), rx.LetterLit(a)), rx.LetterLit(b))


def test_free_names():
    e = parse_regex("#n <#m. #m #k >", letters=set())
    assert free_names(e) == {n, k}


# -- bounded enumeration -----------------------------------------------------

def test_slice_atoms():
    assert words_of("1") == {canon("^")}
    assert words_of("0") == frozenset()
    assert words_of("#n") == {canon("#n")}
    assert words_of("a") == {canon("a")}


def test_slice_sum_cat():
    assert words_of("#n + a") == {canon("#n"), canon("a")}
    assert words_of("#n a") == {canon("#n a")}


def test_slice_star_lengths():
    got = words_of("a*", bound=3)
    assert got == {canon("^"), canon("a"), canon("a a"), canon("a a a")}


def test_slice_binder_tokens():
    # a binder costs two tokens, so at bound 2 the body must be empty
    assert words_of("<#n. #n >", bound=2) == frozenset()
    assert words_of("<#n. #n >", bound=3) == {canon("<#n. #n >")}


def test_slice_binder_alpha_identified():
    assert words_of("<#n. #n >") == words_of("<#m. #m >")


def test_slice_star_of_binder():
    got = words_of("<#n. #n >*", bound=6)
    assert canon("^") in got
    assert canon("<#n. #n >") in got
    assert canon("<#n. #n > <#m. #m >") in got
    assert len(got) == 3


def test_slice_respects_bound():
    for w in words_of("( #n + <#m. #m > )*", bound=5):
        assert token_length(w) <= 5


def test_slice_monotone_in_bound():
    small = words_of("( #n a )*", bound=4)
    big = words_of("( #n a )*", bound=8)
    assert small <= big


def test_member():
    e = parse_regex("<#n. #n #m >", letters=set())
    assert member(e, parse_word("<#k. #k #m >"))
    assert not member(e, parse_word("<#k. #m #k >"))
    assert not member(e, parse_word("<#k. #k #k >"))


# -- sort-dependent semantics ------------------------------------------------

def test_binder_scope_differs_by_sort():
    # in the unordered-binder sort a vacuous binder disappears,
    # so <#n. a > denotes the same word as a
    got_s = words_of("<#n. a >", bound=4, sort="S")
    also_s = words_of("a", bound=4, sort="S")
    assert got_s == also_s
    # in the raw sort the binder stays visible
    got_m = words_of("<#n. a >", bound=4, sort="M")
    assert got_m != words_of("a", bound=4, sort="M")


def test_prefix_sort_extrudes_binders():
    # in the prefix sort every binder floats to the front, so
    # #m <#n. #n > and <#n. #m #n > denote the same language
    lhs = words_of("#m <#n. #n >", bound=4, sort="L")
    rhs = words_of("<#n. #m #n >", bound=4, sort="L")
    assert lhs == rhs


def test_permute_regex():
    from nomlang.names import Permutation

    pi = Permutation.transposition(n, m)
    e = parse_regex("#n <#m. #m #n >", letters=set())
    assert rx.permute_regex(pi, e) == parse_regex("#m <#n. #n #m >", letters=set())
