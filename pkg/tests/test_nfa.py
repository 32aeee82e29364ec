import pytest
from hypothesis import given, strategies as st

from bicat.errors import FormatError
from bicat.languages import FiniteLang, flang_bicat, flang_phi
from bicat.nfa import (
    empty_nfa,
    format_nfa,
    nfa_apply_involution,
    nfa_bicat,
    nfa_concat,
    nfa_enumerate,
    nfa_equivalent,
    nfa_from_regex,
    nfa_from_words,
    nfa_included,
    nfa_intersect,
    nfa_iter_closure,
    nfa_phi_closure,
    nfa_plus,
    nfa_reverse,
    nfa_star,
    nfa_union,
    parse_nfa,
    word_nfa,
)

from conftest import SWAP, REV, w, words

A = SWAP.alphabet


def finite(theta, max_words=3, max_len=3):
    return st.lists(words(theta, max_len, 1), min_size=1, max_size=max_words).map(
        lambda ws: FiniteLang.of(theta.alphabet, ws)
    )


def test_regex_and_enumerate():
    N = nfa_from_regex(A, "(ab)+")
    assert nfa_enumerate(N, 6).words == {w("ab"), w("abab"), w("ababab")}
    assert nfa_from_regex(A, "_").accepts(())
    with pytest.raises(FormatError):
        nfa_from_regex(A, "(ab")


@given(finite(SWAP), finite(SWAP))
def test_bicat_matches_finite(L1, L2):
    N = nfa_bicat(SWAP, nfa_from_words(L1), nfa_from_words(L2))
    assert nfa_enumerate(N, 6) == flang_bicat(SWAP, L1, L2)


@given(finite(REV))
def test_phi_closure_matches_finite(L):
    assert nfa_enumerate(nfa_phi_closure(REV, nfa_from_words(L)), 3) == flang_phi(REV, L)
    image = nfa_enumerate(nfa_apply_involution(REV, nfa_from_words(L)), 3)
    assert image.words == {REV(x) for x in L.words}


def test_iter_closure_example():
    C = nfa_iter_closure(SWAP, nfa_from_words(FiniteLang.of(A, [w("ab")])))
    assert nfa_equivalent(C, nfa_from_regex(A, "(ab)+")) is None


def test_equivalence_witness_is_shortest():
    wit = nfa_equivalent(nfa_from_regex(A, "a*"), nfa_from_regex(A, "a+"))
    assert wit.word == () and wit.side == "left"
    assert nfa_included(nfa_from_regex(A, "a+"), nfa_from_regex(A, "a*")) is None
    assert nfa_included(nfa_from_regex(A, "a|b"), nfa_from_regex(A, "a")).word == w("b")


def test_boolean_and_structural_ops():
    a, b = word_nfa(A, w("a")), word_nfa(A, w("b"))
    assert nfa_enumerate(nfa_union(a, b), 1).words == {w("a"), w("b")}
    assert nfa_enumerate(nfa_concat(a, b), 2).words == {w("ab")}
    assert nfa_enumerate(nfa_star(a), 2).words == {(), w("a"), w("aa")}
    assert nfa_enumerate(nfa_plus(a), 2).words == {w("a"), w("aa")}
    assert nfa_enumerate(nfa_reverse(nfa_concat(a, b)), 2).words == {w("ba")}
    both = nfa_intersect(nfa_from_regex(A, "(a|b)*"), nfa_from_regex(A, "a*"))
    assert nfa_equivalent(both, nfa_from_regex(A, "a*")) is None
    assert empty_nfa(A).is_empty()
    assert nfa_enumerate(empty_nfa(A), 5).words == frozenset()


def test_format_round_trip():
    N = nfa_from_regex(A, "a(b|a)*")
    assert parse_nfa(format_nfa(N)) == N


def test_parse_errors_have_lines():
    with pytest.raises(FormatError, match="line 6"):
        parse_nfa("alphabet: a b\nstates: 1\ninitial: 0\naccepting: 0\ntransitions:\n0 c 0\n")
    with pytest.raises(FormatError):
        parse_nfa("alphabet: a b\nstates: 1\n")
