import pytest
from hypothesis import given, strategies as st

from bicat.errors import AlphabetMismatch, FormatError, KindMismatch, NonInvolution, PartialMapping, UnknownLetter
from bicat.involution import (
    DNA,
    Alphabet,
    Kind,
    count_letter,
    count_pair,
    format_involution_file,
    load_involution,
    parse_inline,
    parse_involution_file,
    validate_involution,
)

from conftest import REV, SWAP, SWAP_MORPHIC, w, words


def test_dna_reverse_complement():
    assert DNA(w("ATC")) == w("GAT")
    assert DNA(w("AT")) == w("AT")
    assert DNA.is_palindrome(w("ATAT"))
    assert not DNA.is_palindrome(w("ATC"))


def test_morphic_maps_letterwise():
    assert SWAP_MORPHIC(w("aab")) == w("bba")
    assert SWAP(w("aab")) == w("abb")
    with pytest.raises(KindMismatch):
        SWAP_MORPHIC.is_palindrome(w("ab"))


@given(words(DNA, 10), words(DNA, 10))
def test_antimorphic_reverses_products(u, v):
    assert DNA(u + v) == DNA(v) + DNA(u)
    assert DNA(DNA(u)) == u


@given(words(SWAP_MORPHIC, 10), words(SWAP_MORPHIC, 10))
def test_morphic_preserves_products(u, v):
    assert SWAP_MORPHIC(u + v) == SWAP_MORPHIC(u) + SWAP_MORPHIC(v)


def test_validation_errors():
    with pytest.raises(NonInvolution):
        validate_involution("abc", {"a": "b", "b": "c", "c": "a"}, "morphic")
    with pytest.raises(PartialMapping):
        validate_involution("ab", {"a": "a"}, "morphic")
    with pytest.raises(UnknownLetter):
        validate_involution("ab", {"a": "z", "b": "b"}, "morphic")
    with pytest.raises(ValueError):
        Alphabet(("a", "_"))


def test_inline_round_trip():
    theta = parse_inline("a<->b c->c antimorphic")
    assert theta.alphabet.letters == ("a", "b", "c")
    assert theta.kind is Kind.ANTIMORPHIC
    assert parse_inline(theta.spec()) == theta
    with pytest.raises(FormatError):
        parse_inline("a<->b")


def test_file_round_trip(tmp_path):
    text = format_involution_file(DNA)
    assert parse_involution_file(text) == DNA
    path = tmp_path / "dna.inv"
    path.write_text(text)
    assert load_involution(str(path)) == DNA
    assert load_involution("dna") == DNA
    assert load_involution("a<->b antimorphic") == SWAP


def test_file_errors_carry_line_numbers():
    with pytest.raises(FormatError, match="line 2"):
        parse_involution_file("alphabet: a b\nkind: sideways\na <-> b\n")
    with pytest.raises(FormatError, match="line 3"):
        parse_involution_file("alphabet: a b\nkind: morphic\na => b\n")


def test_parse_and_render():
    A = DNA.alphabet
    assert A.parse("_") == ()
    assert A.render(()) == "_"
    assert A.parse("A C") == w("AC")
    with pytest.raises(AlphabetMismatch, match="position 2"):
        A.parse("ATX")
    multi = Alphabet(("x1", "x2"))
    assert multi.parse("x1x2x1") == ("x1", "x2", "x1")
    assert multi.render(("x1", "x2")) == "x1 x2"


def test_canonical_order():
    A = SWAP.alphabet
    assert A.sorted([w("b"), w("aa"), (), w("a")]) == [(), w("a"), w("b"), w("aa")]
    assert list(A.words(2)) == [(), w("a"), w("b"), w("aa"), w("ab"), w("ba"), w("bb")]


@given(words(DNA, 12))
def test_count_pair(u):
    assert count_pair(DNA, u, "A") == count_letter(DNA.alphabet, u, "A") + u.count("T")


def test_count_pair_fixed_letter_counted_once():
    assert count_pair(REV, w("aab"), "a") == 2
    with pytest.raises(UnknownLetter):
        count_letter(SWAP.alphabet, w("ab"), "z")


@given(st.sampled_from(["a<->b antimorphic", "a->a b->b morphic", "A<->T C<->G antimorphic"]))
def test_spec_parses_back(spec):
    theta = parse_inline(spec)
    assert parse_inline(theta.spec()) == theta
