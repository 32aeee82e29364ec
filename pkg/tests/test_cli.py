import json
import subprocess
import sys

import pytest

from bicat.cli import main
from bicat.languages import FiniteLang, flang_bicat, flang_power, iterative_closure_layers
from bicat.nfa import format_nfa, nfa_from_regex, nfa_from_words, nfa_iter_closure
from bicat.operations import strong_bicat, strong_cat
from bicat.oracle import verify
from bicat.involution import DNA

from conftest import SWAP, w

S = "a<->b antimorphic"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines_of(theta, words):
    return [theta.alphabet.render(x) for x in theta.alphabet.sorted(words)]


@pytest.fixture
def files(tmp_path):
    (tmp_path / "ab.words").write_text("ab\n")
    (tmp_path / "two.words").write_text("a\nba\n")
    (tmp_path / "abplus.nfa").write_text(format_nfa(nfa_from_regex(SWAP.alphabet, "(ab)+")))
    (tmp_path / "empty.nfa").write_text("alphabet: a b\nstates: 0\ninitial:\naccepting:\ntransitions:\n")
    return tmp_path


def test_word_bicat_matches_library(capsys):
    code, out, _ = run(capsys, "word", "bicat", "--inv", "dna", "ATC", "GCTA", "--output", "structured")
    assert code == 0
    assert out.splitlines() == lines_of(DNA, strong_bicat(DNA, w("ATC"), w("GCTA")))
    assert len(out.splitlines()) == 8


@pytest.mark.parametrize("argv, expected", [
    (["word", "pair", "--inv", "dna", "AT"], ["AT"]),
    (["word", "power", "--inv", "dna", "ATC", "0"], ["_"]),
    (["word", "apply", "--inv", "dna", "ATC"], ["GAT"]),
    (["word", "is-palindrome", "--inv", "dna", "ATAT", "--output", "structured"], ["true"]),
    (["word", "is-phi-power", "--inv", S, "aabb", "aa", "--output", "structured"], ["true"]),
])
def test_word_examples(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.splitlines() == expected


def test_word_cat_and_root(capsys):
    _, out, _ = run(capsys, "word", "cat", "--inv", S, "a", "ab")
    assert out.splitlines() == lines_of(SWAP, strong_cat(SWAP, w("a"), w("ab")))
    _, out, _ = run(capsys, "word", "primitive-root", "--inv", S, "abab", "--output", "structured")
    assert json.loads(out) == {"root": "ab", "exponent": 2}


def test_layers_example(capsys, files):
    code, out, _ = run(capsys, "lang", "layers", "2", "--max-len", "10", "--inv", S, str(files / "ab.words"),
                       "--output", "structured")
    assert code == 0
    layers = json.loads(out)["layers"]
    assert layers == [["ab"], ["abab"], ["abab", "ababab", "abababab"]]
    lib = iterative_closure_layers(SWAP, FiniteLang.of(SWAP.alphabet, [w("ab")]), 2, 10)
    assert layers == [L.render() for L in lib.layers]


def test_lang_bicat_and_power_match_library(capsys, files):
    L1 = FiniteLang.parse(SWAP.alphabet, ["ab"])
    L2 = FiniteLang.parse(SWAP.alphabet, ["a", "ba"])
    _, out, _ = run(capsys, "lang", "bicat", "--inv", S, str(files / "ab.words"), str(files / "two.words"))
    assert out.splitlines() == flang_bicat(SWAP, L1, L2).render()
    _, out, _ = run(capsys, "lang", "power", "2", "--inv", S, str(files / "two.words"))
    assert out.splitlines() == flang_power(SWAP, L2, 2).render()


def test_closure_then_equiv(capsys, files):
    code, out, _ = run(capsys, "lang", "closure", "--inv", S, str(files / "ab.words"))
    assert code == 0
    expected = nfa_iter_closure(SWAP, nfa_from_words(FiniteLang.parse(SWAP.alphabet, ["ab"])))
    assert out == format_nfa(expected)
    (files / "closure_ab.nfa").write_text(out)
    code, out, _ = run(capsys, "lang", "equiv", str(files / "closure_ab.nfa"), str(files / "abplus.nfa"))
    assert (code, out) == (0, "Equivalent\n")
    code, out, _ = run(capsys, "lang", "equiv", str(files / "empty.nfa"), str(files / "abplus.nfa"),
                       "--output", "structured")
    assert code == 2 and json.loads(out) == {"result": "NotEquivalent", "witness": "ab", "side": "right"}


def test_enumerate_empty(capsys, files):
    code, out, _ = run(capsys, "lang", "enumerate", str(files / "empty.nfa"), "--max-len", "5")
    assert (code, out) == (0, "")


def test_closed_check(capsys, files):
    code, out, _ = run(capsys, "lang", "closed-check", "--inv", S, "--lang", "eq:a,b", "--bound", "4")
    assert code == 0
    code, out, _ = run(capsys, "lang", "closed-check", "--inv", S, "--lang", str(files / "ab.words"),
                       "--bound", "2", "--output", "structured")
    assert code == 2
    assert json.loads(out)["violation"] == {"u": "ab", "v": "ab", "w": "abab"}


def test_equation(capsys, files):
    nfa = str(files / "abplus.nfa")
    code, out, _ = run(capsys, "lang", "equation", "--variant", "bicat", "--inv", S, "ab", "ab", nfa)
    assert (code, out) == (0, "Holds\n")
    code, out, _ = run(capsys, "lang", "equation", "--variant", "uL=vL", "ab", "ba", nfa)
    assert code == 2 and out.startswith("Fails")


def test_verify_matches_library(capsys):
    code, out, _ = run(capsys, "verify", "mr1", "--inv", S, "--max-len", "3", "--output", "structured")
    assert code == 0
    assert out == verify("mr1", SWAP, max_len=3).to_json()
    code, out, _ = run(capsys, "verify", "pcj2", "--inv", S, "--bound", "u=3", "--bound", "v=3", "--bound", "w=3")
    assert code == 2 and "Counterexample" in out


def test_verify_probe_and_pool(capsys):
    code, out, _ = run(capsys, "verify", "bw_properties", "--inv", "dna", "--max-len", "3")
    assert code == 0 and "CACTAC" in out
    code, out, _ = run(capsys, "verify", "teq3", "--inv", S, "--lang-pool", "generated", "--output", "structured")
    assert code == 0 and json.loads(out)["profile"]["language_pool"] == "generated"


@pytest.mark.parametrize("argv, needle", [
    (["verify", "nosuch", "--inv", S], "valid ids"),
    (["word", "bicat", "--inv", "dna", "ATX", "A"], "position 2"),
    (["word", "bicat", "ATC", "A"], "--inv"),
    (["verify", "mr1", "--inv", S, "--bound", "zz=2"], "no bound"),
    (["verify", "mr1", "--inv", S, "--max-len", "20"], "ceiling"),
])
def test_errors_exit_one(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and needle in err


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["word"])
    assert exc.value.code == 1


def test_word_file_errors(capsys, tmp_path):
    bad = tmp_path / "bad.words"
    bad.write_text("ab\nac\n")
    code, _, err = run(capsys, "lang", "power", "1", "--inv", S, str(bad))
    assert code == 1 and "line 2" in err
    lam = tmp_path / "lam.words"
    lam.write_text("_\nab\n")
    code, _, err = run(capsys, "lang", "closure", "--inv", S, str(lam))
    assert code == 1 and "empty word" in err


def test_console_script_is_deterministic():
    argv = [sys.executable, "-m", "bicat.cli", "verify", "pcj4", "--inv", S, "--output", "structured"]
    a = subprocess.run(argv, capture_output=True, text=True)
    b = subprocess.run(argv + ["--jobs", "3"], capture_output=True, text=True)
    assert a.returncode == b.returncode == 2
    assert a.stdout == b.stdout
