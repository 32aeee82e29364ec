import pytest
from hypothesis import given, strategies as st

from bicat.errors import AlphabetMismatch, EmptyWordInL, FormatError
from bicat.languages import (
    FiniteLang,
    all_finite_langs,
    closure_violations,
    count_balance,
    flang_bicat,
    flang_bicat_products,
    flang_iterated,
    flang_phi,
    flang_plus_closure_truncated,
    flang_power,
    flang_power_literal,
    format_words_file,
    is_bicat_closed_bounded,
    iterative_closure_layers,
    parse_predicate,
    parse_words_file,
)
from bicat.involution import DNA

from conftest import REV, SWAP, w, words


def lang(theta, *texts):
    return FiniteLang.parse(theta.alphabet, texts)


def finite_langs(theta, max_words=4, max_len=3):
    return st.lists(words(theta, max_len, 1), min_size=1, max_size=max_words).map(
        lambda ws: FiniteLang.of(theta.alphabet, ws)
    )


def test_closure_layers_example():
    layers = iterative_closure_layers(SWAP, lang(SWAP, "ab"), 3, 12)
    ab = w("ab")
    assert layers[0].words == {ab}
    assert layers[1].words == {ab * 2}
    assert layers[2].words == {ab * i for i in (2, 3, 4)}
    assert layers[3].words == {ab * i for i in range(2, 7)}


@given(finite_langs(SWAP), finite_langs(SWAP))
def test_bicat_equals_products(L1, L2):
    assert flang_bicat(SWAP, L1, L2) == flang_bicat_products(SWAP, L1, L2)


@given(finite_langs(REV, 3, 2), st.integers(1, 3), st.integers(1, 2))
def test_power_additivity(L, n, m):
    assert flang_bicat(REV, flang_power(REV, L, n), flang_power(REV, L, m)) == flang_power(REV, L, n + m)


@given(finite_langs(SWAP, 3, 2), st.integers(0, 3))
def test_power_literal_agrees(L, n):
    assert flang_power_literal(SWAP, L, n) == flang_power(SWAP, L, n)


def test_iterated_base_case():
    L1, L2 = lang(SWAP, "a"), lang(SWAP, "aa")
    assert flang_iterated(SWAP, L1, L2, 0).words == {w("a"), w("b"), w("aa"), w("bb")}


@given(finite_langs(SWAP, 3, 2))
def test_plus_closure_contains_layers(L):
    plus = flang_plus_closure_truncated(SWAP, L, 6)
    assert iterative_closure_layers(SWAP, L, 3, 6).union().words <= plus.words
    assert flang_phi(SWAP, L).words <= plus.words


def test_empty_word_rejected():
    with pytest.raises(EmptyWordInL):
        flang_plus_closure_truncated(SWAP, FiniteLang.of(SWAP.alphabet, [()]), 3)


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatch):
        flang_bicat(DNA, lang(SWAP, "a"), lang(SWAP, "b"))


def test_closure_checks():
    member = parse_predicate("eq:a,b")
    assert is_bicat_closed_bounded(SWAP, member, 4) is None
    # not closed under reversal-only when counts are skewed
    skew = parse_predicate("sum:a,a,b")
    violation = is_bicat_closed_bounded(SWAP, skew, 3)
    assert violation is not None and not skew(violation.w)
    assert list(closure_violations(SWAP, member, 2)) == []
    assert count_balance("a", "b")(w("abba"))


def test_predicate_errors():
    with pytest.raises(FormatError):
        parse_predicate("nope:a")


def test_words_file_round_trip():
    L = lang(DNA, "ATC", "_", "GCTA")
    assert parse_words_file(DNA.alphabet, format_words_file(L)) == L
    with pytest.raises(FormatError, match="line 2"):
        parse_words_file(DNA.alphabet, "AT\nAX\n")


def test_all_finite_langs_counts():
    langs = list(all_finite_langs(SWAP.alphabet, 1))
    assert len(langs) == 3
    assert all(len(L) <= 2 for L in all_finite_langs(SWAP.alphabet, 2, max_size=2))
