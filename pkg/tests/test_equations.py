import pytest

from bicat.equations import Variant, bicat_equation_check, equation_sides, lang_equation_check
from bicat.errors import EmptyWord, KindMismatch
from bicat.nfa import nfa_from_regex

from conftest import SWAP, SWAP_MORPHIC, w

A = SWAP.alphabet


def test_commuting_chain_language():
    # L = a(ba)*: u=ab, v=ba gives abL = Lba
    L = nfa_from_regex(A, "a(ba)*")
    assert lang_equation_check(w("ab"), w("ba"), L, Variant.LV) is None


def test_uL_vL_forces_equal_words():
    L = nfa_from_regex(A, "a|b")
    assert lang_equation_check(w("a"), w("a"), L, Variant.VL) is None
    wit = lang_equation_check(w("a"), w("b"), L, Variant.VL)
    assert wit is not None and wit.side in ("left", "right")


def test_theta_variants_need_antimorphic():
    L = nfa_from_regex(A, "a")
    with pytest.raises(ValueError):
        lang_equation_check(w("a"), w("b"), L, Variant.TV_L)
    with pytest.raises(KindMismatch):
        lang_equation_check(w("a"), w("b"), L, Variant.TV_L, SWAP_MORPHIC)
    L = nfa_from_regex(A, "ab")  # θ(L) = L
    assert lang_equation_check(w("a"), w("b"), L, Variant.TV_TL, SWAP) is None
    assert lang_equation_check(w("a"), w("a"), L, Variant.TV_TL, SWAP) is not None


def test_empty_words_rejected():
    with pytest.raises(EmptyWord):
        equation_sides((), w("a"), nfa_from_regex(A, "a"), Variant.LV)


def test_bicat_equation():
    L = nfa_from_regex(A, "(ab)+")
    assert bicat_equation_check(SWAP, w("ab"), L, w("ab")) is None
    assert bicat_equation_check(SWAP, w("a"), L, w("ab")) is not None


def test_variant_values_round_trip():
    for v in Variant:
        assert Variant(v.value) is v
    assert {v.uses_theta for v in Variant} == {True, False}
