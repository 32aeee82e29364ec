import pytest
from hypothesis import given, strategies as st

from bicat.errors import EmptyBase, EmptyWord, KindMismatch
from bicat.involution import DNA, count_pair
from bicat.operations import (
    bicat_sets,
    bicat_word_power,
    check_phi_propagating,
    is_phi_power,
    left_assoc,
    phi_pair,
    propagation_failures,
    right_assoc,
    strong_bicat,
    strong_cat,
    strong_cat_commutes,
)

from conftest import SWAP, SWAP_MORPHIC, w, words

DNA_EXAMPLE = {"ATCGCTA", "ATCTAGC", "GATGCTA", "GATTAGC", "GCTAATC", "GCTAGAT", "TAGCATC", "TAGCGAT"}


def test_dna_bicat_example():
    got = strong_bicat(DNA, w("ATC"), w("GCTA"))
    assert {"".join(x) for x in got} == DNA_EXAMPLE


def test_cat_is_four_products():
    assert strong_cat(SWAP, w("a"), w("aa")) == {w("aaa"), w("abb"), w("baa"), w("bbb")}
    assert phi_pair(DNA, w("AT")) == {w("AT")}


@given(words(DNA, 5), words(DNA, 5))
def test_bicat_commutative_and_length_additive(u, v):
    res = strong_bicat(DNA, u, v)
    assert res == strong_bicat(DNA, v, u)
    assert all(len(x) == len(u) + len(v) for x in res)
    assert strong_cat(DNA, u, v) <= res
    assert 1 <= len(res) <= 8


@given(words(DNA, 5), words(DNA, 5))
def test_bicat_closed_under_theta(u, v):
    res = strong_bicat(DNA, u, v)
    assert {DNA(x) for x in res} == res


@given(words(DNA, 12), words(DNA, 12))
def test_phi_propagating(u, v):
    assert check_phi_propagating(DNA, u, v)
    for x in strong_bicat(DNA, u, v):
        for a in "ACGT":
            assert count_pair(DNA, x, a) == count_pair(DNA, u, a) + count_pair(DNA, v, a)


def test_propagation_failures_for_dna_example():
    fails = propagation_failures(DNA, w("ATC"), w("GCTA"))
    assert (w("GATGCTA"), "G", 2, 1) in fails


def test_dna_non_associativity_witness():
    u, v, x = w("AG"), w("CA"), w("AC")
    assert w("CACTAC") in left_assoc(DNA, u, v, x)
    assert w("CACTAC") not in right_assoc(DNA, u, v, x)


@given(words(SWAP, 3, 1), st.integers(0, 4))
def test_word_power(u, n):
    res = bicat_word_power(SWAP, u, n)
    assert all(len(x) == n * len(u) for x in res)
    for x in res:
        if n:
            assert is_phi_power(SWAP, x, u) == (x[: len(u)] == u)


def test_power_zero_is_lambda():
    assert bicat_word_power(DNA, w("ATC"), 0) == {()}
    with pytest.raises(ValueError):
        bicat_word_power(DNA, w("A"), -1)
    with pytest.raises(EmptyBase):
        is_phi_power(DNA, w("A"), ())


def test_is_phi_power():
    assert is_phi_power(SWAP, w("abba"), w("ab")) is False  # θ(ab) = ab under swap
    assert is_phi_power(SWAP, w("aabb"), w("aa")) is True
    assert not is_phi_power(SWAP, w("bbaa"), w("aa"))


def test_bicat_sets_union():
    L1, L2 = [w("a"), w("b")], [w("a")]
    expected = strong_bicat(SWAP, w("a"), w("a")) | strong_bicat(SWAP, w("b"), w("a"))
    assert bicat_sets(SWAP, L1, L2) == expected


def test_commutation():
    c = strong_cat_commutes(SWAP, w("ab"), w("abab"))
    assert c.equal and c.witness == "palindromic-root" and c.root == w("ab")
    c = strong_cat_commutes(SWAP, w("aa"), w("bb"))
    assert c.equal and c.witness == "theta-image"
    assert not strong_cat_commutes(SWAP, w("a"), w("ab")).equal
    with pytest.raises(KindMismatch):
        strong_cat_commutes(SWAP_MORPHIC, w("a"), w("b"))
    with pytest.raises(EmptyWord):
        strong_cat_commutes(SWAP, (), w("b"))


@given(words(SWAP, 4, 1), words(SWAP, 4, 1))
def test_commutation_witness_implies_equality(u, v):
    c = strong_cat_commutes(SWAP, u, v)
    if c.witness is not None:
        assert c.equal
