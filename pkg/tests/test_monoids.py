import pytest
from hypothesis import given, settings, strategies as st

from nomlang.names import Name, Letter, Permutation
from nomlang import words
from nomlang.monoids import (
    SORT_G,
    SORT_L,
    SORT_M,
    SORT_S,
    SORTS,
    embed_gm,
    embed_lg,
    embed_lm,
    embed_sl,
    embed_sm,
    plain_words_bounded,
)
from nomlang.oracle import gen_axiom_instances

from conftest import NAMES, LETTERS

n, m, k = NAMES
a, b = LETTERS

names_st = st.sampled_from(NAMES)
letters_st = st.sampled_from(LETTERS)


def sort_words_st(ops, max_size=5):
    """Random words of a sort, as a sequence of constructor steps."""
    step = st.one_of(
        names_st.map(lambda x: ("n", x)),
        letters_st.map(lambda s: ("s", s)),
        names_st.map(lambda x: ("b", x)),
    )

    def build(steps):
        w = ops.unit
        for kind, payload in steps:
            if kind == "n":
                w = ops.concat(w, ops.from_name(payload))
            elif kind == "s":
                w = ops.concat(w, ops.from_letter(payload))
            else:
                w = ops.bind(payload, w)
        return w

    return st.lists(step, max_size=max_size).map(build)


# -- monoid laws per sort ----------------------------------------------------

@pytest.mark.parametrize("tag", sorted(SORTS))
def test_unit_laws(tag, rng):
    ops = SORTS[tag]
    for _ in range(30):
        from nomlang.oracle import _build

        w = _build(ops, rng, NAMES, LETTERS, 4)
        assert ops.canon(ops.concat(ops.unit, w)) == ops.canon(w)
        assert ops.canon(ops.concat(w, ops.unit)) == ops.canon(w)


@pytest.mark.parametrize("tag", sorted(SORTS))
def test_concat_associative(tag, rng):
    ops = SORTS[tag]
    from nomlang.oracle import _build

    for _ in range(30):
        u, v, w = (_build(ops, rng, NAMES, LETTERS, 3) for _ in range(3))
        assert ops.canon(ops.concat(ops.concat(u, v), w)) == ops.canon(
            ops.concat(u, ops.concat(v, w))
        )


@pytest.mark.parametrize("tag", sorted(SORTS))
def test_canon_idempotent(tag, rng):
    ops = SORTS[tag]
    from nomlang.oracle import _build

    for _ in range(30):
        w = _build(ops, rng, NAMES, LETTERS, 4)
        c = ops.canon(w)
        assert ops.canon(c) == c


# -- which laws hold where ---------------------------------------------------

def _all_hold(axiom, sort, rng, count=60):
    ops = SORTS[sort]
    return all(
        inst.holds(ops)
        for inst in gen_axiom_instances(axiom, sort, count, NAMES, LETTERS, rng)
    )


def test_law_profile_by_sort(rng):
    # prefix-scoped words satisfy the scope-extrusion law for binders,
    # letters, and fresh names; unordered-binder words additionally
    # commute and garbage-collect their binders.
    assert _all_hold("Ax1", "G", rng)
    for ax in ("Ax1", "Ax2", "Ax3"):
        assert _all_hold(ax, "L", rng)
    for ax in ("Ax1", "Ax2", "Ax3", "Ax4", "Ax5"):
        assert _all_hold(ax, "S", rng)


def test_laws_fail_where_expected():
    # Ax4 in L: binder order is observable
    ops = SORT_L
    lhs = ops.bind(n, ops.bind(m, ops.concat(ops.from_name(n), ops.from_name(m))))
    rhs = ops.bind(m, ops.bind(n, ops.concat(ops.from_name(n), ops.from_name(m))))
    assert ops.canon(lhs) != ops.canon(rhs)
    # Ax5 in L: a vacuous binder is observable
    w = ops.from_letter(a)
    assert ops.canon(ops.bind(n, w)) != ops.canon(w)
    # Ax2 in G: a binder cannot cross a letter
    ops = SORT_G
    y = ops.from_name(m)
    lhs = ops.concat(ops.from_letter(a), ops.bind(m, y))
    rhs = ops.bind(m, ops.concat(ops.from_letter(a), y))
    assert ops.canon(lhs) != ops.canon(rhs)


def test_ax6_extra_in_s(rng):
    # unordered-binder words also let a binder cross a whole fresh word
    assert _all_hold("Ax6", "S", rng, count=100)
    # ...but ordered sorts do not: moving a binder over a word that has
    # binders of its own changes the observable prefix order
    ops = SORT_L
    x = ops.bind(k, ops.from_name(k))
    lhs = ops.concat(x, ops.bind(n, ops.from_name(n)))
    rhs = ops.bind(n, ops.concat(x, ops.from_name(n)))
    assert ops.canon(lhs) != ops.canon(rhs)


# -- embeddings and the quotients they section -------------------------------
#
# The embeddings pick one representative per word of the coarser sort.
# The maps in the other direction (forgetting structure) are the monoid
# homomorphisms, and each embedding is a section of its quotient.

from nomlang.monoids import (  # noqa: E402
    GBind,
    GCons,
    GEmpty,
    GEPSILON,
    SWord,
    bind_l,
    canon_g,
    canon_l,
    canon_s,
    concat_g,
    concat_l,
    LWord,
)


def quot_ls(x: LWord) -> SWord:
    w = SWord(frozenset(), x.body)
    for nm in reversed(x.prefix):
        w = SORT_S.bind(nm, w)
    return w


def quot_gl(w) -> LWord:
    if isinstance(w, GEmpty):
        return SORT_L.unit
    if isinstance(w, GCons):
        head = LWord((), (w.head,))
        return concat_l(head, quot_gl(w.tail))
    assert isinstance(w, GBind)
    return bind_l(w.name, quot_gl(w.tail))


def quot_mg(w):
    if isinstance(w, words.Empty):
        return GEPSILON
    if isinstance(w, words.NameAtom):
        return GCons(w.name, GEPSILON)
    if isinstance(w, words.LetterAtom):
        return GCons(w.letter, GEPSILON)
    if isinstance(w, words.Seq):
        out = GEPSILON
        for p in reversed(w.parts):
            out = concat_g(quot_mg(p), out)
        return out
    assert isinstance(w, words.Bind)
    return GBind(w.name, quot_mg(w.body))


def _rand_s(rng, size=4):
    from nomlang.oracle import _build

    return _build(SORT_S, rng, NAMES, LETTERS, size)


def _rand_l(rng, size=4):
    from nomlang.oracle import _build

    return _build(SORT_L, rng, NAMES, LETTERS, size)


def test_quotient_ls_homomorphism(rng):
    for _ in range(60):
        x, y = _rand_l(rng), _rand_l(rng)
        lhs = canon_s(quot_ls(concat_l(x, y)))
        rhs = canon_s(SORT_S.concat(quot_ls(x), quot_ls(y)))
        assert lhs == rhs


def test_quotient_gl_homomorphism(rng):
    from nomlang.oracle import _build

    for _ in range(60):
        x, y = (_build(SORT_G, rng, NAMES, LETTERS, 4) for _ in range(2))
        lhs = canon_l(quot_gl(concat_g(x, y)))
        rhs = canon_l(concat_l(quot_gl(x), quot_gl(y)))
        assert lhs == rhs


def test_quotient_mg_homomorphism(rng):
    from nomlang.oracle import random_mword

    for _ in range(60):
        u, v = (random_mword(rng, NAMES, LETTERS, 4) for _ in range(2))
        lhs = canon_g(quot_mg(words.concat(u, v)))
        rhs = canon_g(concat_g(quot_mg(u), quot_mg(v)))
        assert lhs == rhs


def test_embeddings_are_sections(rng):
    from nomlang.oracle import _build

    for _ in range(60):
        s = _rand_s(rng)
        assert canon_s(quot_ls(embed_sl(s))) == canon_s(s)
        l = _rand_l(rng)
        assert canon_l(quot_gl(embed_lg(l))) == canon_l(l)
        g = _build(SORT_G, rng, NAMES, LETTERS, 4)
        assert canon_g(quot_mg(embed_gm(g))) == canon_g(g)


def test_embeddings_respect_canonical_class(rng):
    # embedding then canonicalizing agrees with canonicalizing first
    for _ in range(40):
        x = _rand_s(rng)
        assert words.alpha_canonical(embed_sm(x)) == words.alpha_canonical(
            embed_sm(SORT_S.canon(x))
        )
        y = _rand_l(rng)
        assert words.alpha_canonical(embed_lm(y)) == words.alpha_canonical(
            embed_lm(SORT_L.canon(y))
        )


def test_embedding_composition(rng):
    for _ in range(40):
        x = _rand_s(rng)
        via_l = words.alpha_canonical(embed_gm(embed_lg(embed_sl(x))))
        direct = words.alpha_canonical(embed_sm(x))
        assert via_l == direct


# -- projection to binder-free words -----------------------------------------

def test_plain_words_bounded_simple():
    pool = frozenset(NAMES)
    w = words.Bind(n, words.NameAtom(n))
    got = plain_words_bounded([w], pool)
    assert got == frozenset({(x,) for x in pool} | {(n,)})


def test_plain_words_bounded_freshness():
    pool = frozenset(NAMES)
    # the bound name may become any pool name absent from the rest
    w = words.Bind(n, words.concat(words.NameAtom(n), words.NameAtom(m)))
    got = plain_words_bounded([w], pool)
    assert (k, m) in got
    assert (n, m) in got
    assert (m, m) not in got


def test_plain_words_pool_must_cover_support():
    with pytest.raises(ValueError):
        plain_words_bounded([words.NameAtom(Name("zz"))], frozenset(NAMES))
