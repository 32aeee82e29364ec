import pytest
from hypothesis import given, strategies as st

from bicat.errors import EmptyWord, EquationFails, NotConjugate
from bicat.words import (
    CommonPalindromicRoot,
    SkewPair,
    Split,
    ThetaImage,
    common_root,
    decompose_conjugacy,
    is_power_of,
    is_primitive,
    is_rotation,
    palindromic_pair_classify,
    primitive_root,
    theta_commute_decompose,
    theta_conjugate_decompose,
)
from bicat.involution import DNA

from conftest import SWAP, w, words


def test_primitive_root():
    pr = primitive_root(w("ababab"))
    assert (pr.root, pr.exponent) == (w("ab"), 3)
    assert is_primitive(w("aab"))
    with pytest.raises(EmptyWord):
        primitive_root(())


@given(words(SWAP, 4, 1), st.integers(1, 4))
def test_root_of_power(s, n):
    r = primitive_root(s * n)
    assert r.root * r.exponent == s * n
    assert is_primitive(r.root)
    assert is_power_of(s * n, r.root)


@given(words(SWAP, 3, 1), words(SWAP, 3), st.integers(0, 3))
def test_conjugacy_round_trip(x, y, k):
    u, v, ww = x + y, (x + y) * k + x, y + x
    d = decompose_conjugacy(u, v, ww)
    assert d.rebuild() == (u, v, ww)


def test_conjugacy_rejects_non_solutions():
    with pytest.raises(NotConjugate):
        decompose_conjugacy(w("ab"), w("a"), w("ab"))


def test_common_root():
    assert common_root(w("abab"), w("ab")) == w("ab")
    assert common_root(w("ab"), w("ba")) is None


def test_theta_conjugate():
    u, v = w("aab"), w("b")
    target = SWAP(v)
    ww = (u + v)[len(target):]
    d = theta_conjugate_decompose(SWAP, u, v, ww)
    assert isinstance(d, (Split, ThetaImage))
    if isinstance(d, Split):
        assert d.x + d.y == u and d.y + SWAP(d.x) == ww
    with pytest.raises(EquationFails):
        theta_conjugate_decompose(SWAP, w("a"), w("a"), w("a"))


@given(words(SWAP, 4, 1), words(SWAP, 4))
def test_theta_conjugate_when_equation_holds(v, z):
    u = SWAP(v) + z
    ww = z + v
    d = theta_conjugate_decompose(SWAP, u, v, ww)
    if isinstance(d, Split):
        assert d.x + d.y == u and d.y + SWAP(d.x) == ww
    else:
        assert u == SWAP(ww)


def test_theta_commute():
    x, y = w("ab"), w("ba")  # both swap-palindromes
    u, v = x + (y + x) * 2, y + x
    d = theta_commute_decompose(SWAP, u, v)
    assert d.rebuild() == (u, v)
    assert SWAP(d.x) == d.x and SWAP(d.y) == d.y


def test_palindromic_pair_classify():
    r = palindromic_pair_classify(SWAP, w("ab"), w("abab"))
    assert isinstance(r, CommonPalindromicRoot) and r.alpha == w("ab")
    s = w("a")
    x, y = SWAP(s), s + SWAP(s) + s
    r = palindromic_pair_classify(SWAP, x, y)
    assert isinstance(r, SkewPair)
    assert palindromic_pair_classify(SWAP, w("a"), w("a")) is None


def test_rotation():
    assert is_rotation(w("abc"), w("cab"))
    assert not is_rotation(w("abc"), w("acb"))
    assert is_rotation((), ())


@given(words(DNA, 6, 1))
def test_dna_palindromes_have_even_length(u):
    if DNA.is_palindrome(u):
        assert len(u) % 2 == 0
