import pytest
from hypothesis import given, strategies as st

from bicat.oracle import FormFamily, build, candidates, gen_family, match_form

from conftest import REV, SWAP, w

FAMILIES = [f for f in FormFamily]


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.value)
@pytest.mark.parametrize("theta", [SWAP, REV], ids=["swap", "rev"])
def test_generated_instances_match_their_family(family, theta):
    for inst in gen_family(family, theta, word_bound=2, exp_bound=2):
        m = match_form(family, inst.words, theta)
        assert m is not None, (family, inst)
        if family is FormFamily.PAL_PREFIX:
            assert m.params["gamma"] + inst.words[1] == inst.words[0]
            continue
        assert build(family, m.params, theta, len(inst.words)) == inst.words


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.value)
def test_generation_is_deterministic_and_deduplicated(family):
    a = [i.words for i in gen_family(family, SWAP, 2, 2)]
    assert a == [i.words for i in gen_family(family, SWAP, 2, 2)]
    assert len(a) == len(set(a))


def test_powers_example():
    m = match_form(FormFamily.POWERS, (w("abab"), w("ab")), SWAP)
    assert m.params["s"] == w("ab")
    assert match_form(FormFamily.POWERS, (w("ab"), w("ba")), SWAP) is None


def test_conj_split_example():
    m = match_form(FormFamily.CONJ_SPLIT, (w("ab"), w("a"), w("ba")), SWAP)
    assert m is not None
    assert build(FormFamily.CONJ_SPLIT, m.params, SWAP, 3) == (w("ab"), w("a"), w("ba"))


@given(st.sampled_from(FAMILIES), st.lists(st.sampled_from("ab"), min_size=1, max_size=4).map(tuple),
       st.lists(st.sampled_from("ab"), min_size=1, max_size=4).map(tuple))
def test_every_candidate_rebuilds(family, u, v):
    for params in candidates(family, (u, v), SWAP):
        if family is FormFamily.PAL_PREFIX:
            continue  # the prefix family rebuilds up to a free suffix
        assert build(family, params, SWAP, 2) == (u, v)
        break


def test_chain_instances_carry_prefix():
    insts = list(gen_family(FormFamily.CHAIN, SWAP, 1, 2))
    assert insts and all(i.language_prefix for i in insts)
