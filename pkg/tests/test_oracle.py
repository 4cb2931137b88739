import random

import pytest

from nomlang.names import Name, Letter
from nomlang.words import (
    TCLOSE,
    TName,
    TOpen,
    alpha_canonical,
    alpha_equal,
    parse_tokens,
    support,
    token_length,
)
from nomlang.syntax import parse_word, render_regex
from nomlang.compiler import compile_regex
from nomlang.oracle import (
    alpha_oracle,
    balanced_streams,
    check_equivalence,
    gen_axiom_instances,
    random_mword,
    random_regex,
)

from conftest import NAMES, LETTERS

n, m, k = NAMES
a, b = LETTERS
POOL = frozenset(NAMES) | {Name("p"), Name("q")}


# -- the independent alpha decision procedure --------------------------------

def test_alpha_oracle_examples():
    assert alpha_oracle(parse_word("<#n. #n >"), parse_word("<#m. #m >"), POOL)
    assert not alpha_oracle(parse_word("<#n. #n >"), parse_word("<#n. #m >"), POOL)
    assert alpha_oracle(
        parse_word("<#n. <#m. #n #m > >"),
        parse_word("<#m. <#n. #m #n > >"),
        POOL,
    )
    assert not alpha_oracle(
        parse_word("<#n. <#m. #n #m > >"),
        parse_word("<#n. <#m. #m #n > >"),
        POOL,
    )


def test_alpha_oracle_agrees_with_canonical(rng):
    for _ in range(300):
        u = random_mword(rng, NAMES, LETTERS, rng.randint(0, 4))
        v = random_mword(rng, NAMES, LETTERS, rng.randint(0, 4))
        assert alpha_oracle(u, v, POOL) == alpha_equal(u, v)


def test_alpha_oracle_accepts_permuted_variants(rng):
    # positive cases: rebuild the same word from its canonical form
    for _ in range(100):
        u = random_mword(rng, NAMES, LETTERS, rng.randint(0, 4))
        assert alpha_oracle(u, alpha_canonical(u), POOL | support(u) | {
            nm for nm in (Name("~0"), Name("~1"), Name("~2"), Name("~3"))
        })


# -- stream enumeration ------------------------------------------------------

def test_balanced_streams_counts():
    pool = frozenset({n})
    letters = frozenset({a})
    assert list(balanced_streams(0, pool, letters)) == [()]
    # length 1: #n or a
    assert len(list(balanced_streams(1, pool, letters))) == 2
    # every stream parses back to a word of that token length
    for length in range(5):
        for s in balanced_streams(length, pool, letters):
            w = parse_tokens(s)
            assert token_length(w) == length


def test_balanced_streams_are_balanced():
    for s in balanced_streams(4, frozenset({n, m}), frozenset()):
        depth = 0
        for t in s:
            if isinstance(t, TOpen):
                depth += 1
            elif t is TCLOSE:
                depth -= 1
            assert depth >= 0
        assert depth == 0


# -- generators --------------------------------------------------------------

def test_random_regex_depth_and_alphabet(rng):
    from nomlang.regex import free_names, letters_of

    for _ in range(100):
        e = random_regex(rng, NAMES, LETTERS, 3)
        assert free_names(e) <= frozenset(NAMES)
        assert letters_of(e) <= frozenset(LETTERS)
        render_regex(e)  # must be printable


# -- axiom instances ---------------------------------------------------------

def test_axiom_instances_satisfy_premises(rng):
    # Ax1's premise says the bound name must be fresh for the right
    # operand; check the generator respects it in the raw sort
    from nomlang.monoids import SORTS

    for inst in gen_axiom_instances("Ax1", "M", 50, NAMES, LETTERS, rng):
        lhs = inst.lhs  # Seq(Bind(n, x), y) or Bind alone
        # recover n as the outermost bound name of the left part
        from nomlang.words import Bind, Seq

        head = lhs.parts[0] if isinstance(lhs, Seq) else lhs
        if isinstance(head, Bind) and isinstance(lhs, Seq):
            rest = Seq(lhs.parts[1:]) if len(lhs.parts) > 2 else lhs.parts[1]
            assert head.name not in support(rest)


def test_unknown_axiom_rejected(rng):
    with pytest.raises(ValueError):
        gen_axiom_instances("Ax7", "S", 1, NAMES, LETTERS, rng)


# -- equivalence reports -----------------------------------------------------

def test_check_equivalence_pass_and_fail():
    from nomlang.syntax import parse_regex

    e = parse_regex("<#n. #n >*", letters=set())
    h = compile_regex(e)
    report = check_equivalence(e, h, 6)
    assert report.passed
    assert report.lines()[0].startswith("PASS")

    other = parse_regex("#n*", letters=set())
    report = check_equivalence(other, h, 6)
    assert not report.passed
    assert report.lines()[0].startswith("FAIL")
    assert any("only in" in line for line in report.lines()[1:])
