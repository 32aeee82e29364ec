"""Command-line surface: word and language operations plus theorem verification.

Exit codes: 0 success (or AllPass, or a check that holds), 2 a counterexample
or a failing check, 1 any error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Union

from .equations import Variant, bicat_equation_check, lang_equation_check
from .errors import BicatError, EmptyWordInL, FormatError
from .involution import EMPTY, Alphabet, Involution, Word, load_involution
from .languages import (
    FiniteLang,
    flang_bicat,
    flang_plus_closure_truncated,
    flang_power,
    is_bicat_closed_bounded,
    iterative_closure_layers,
    parse_predicate,
    parse_words_file,
)
from .nfa import (
    Nfa,
    format_nfa,
    nfa_bicat,
    nfa_enumerate,
    nfa_equivalent,
    nfa_from_words,
    nfa_iter_closure,
    parse_nfa,
)
from .operations import bicat_word_power, is_phi_power, phi_pair, strong_bicat, strong_cat
from .oracle import ALL_PASS, verify
from .words import primitive_root

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2

Lang = Union[FiniteLang, Nfa]


class CliError(BicatError):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 so that 2 always means a counterexample
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# -- input helpers ----------------------------------------------------------------


def _theta(args) -> Involution:
    if args.inv is None:
        raise CliError("this command needs --inv <file|dna|inline spec>")
    return load_involution(args.inv)


def _word(alphabet: Alphabet, text: str) -> Word:
    return alphabet.parse(text)


def _is_nfa_text(text: str) -> bool:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            return line.startswith("alphabet:")
    return False


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def load_lang(path: str, alphabet: Optional[Alphabet]) -> Lang:
    """An NFA file (starts with ``alphabet:``) or a word list, one word per line."""
    text = _read(path)
    if _is_nfa_text(text):
        A = parse_nfa(text)
        if alphabet is not None and A.alphabet != alphabet:
            missing = sorted(set(A.alphabet.letters) ^ set(alphabet.letters)) or list(A.alphabet.letters)
            raise FormatError(f"{path}: alphabet {' '.join(A.alphabet)} differs from the involution's "
                              f"{' '.join(alphabet)} (letter {missing[0]!r})")
        return A
    if alphabet is None:
        raise CliError(f"{path} is a word list; pass --inv so its alphabet is known")
    try:
        return parse_words_file(alphabet, text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _as_nfa(L: Lang) -> Nfa:
    return L if isinstance(L, Nfa) else nfa_from_words(L)


def _finite(L: Lang, command: str) -> FiniteLang:
    if isinstance(L, Nfa):
        raise CliError(f"{command} needs a finite word list, not an NFA file")
    return L


def _no_empty(L: Lang):
    if (EMPTY in L.words) if isinstance(L, FiniteLang) else L.accepts(EMPTY):
        raise EmptyWordInL("the language contains the empty word")


# -- output -----------------------------------------------------------------------


class Out:
    def __init__(self, mode: str, alphabet: Optional[Alphabet] = None):
        self.mode = mode
        self.alphabet = alphabet
        self.lines: List[str] = []

    @property
    def structured(self) -> bool:
        return self.mode == "structured"

    def show(self, w: Word) -> str:
        return self.alphabet.render(w)

    def words(self, words):
        self.lines.extend(self.show(w) for w in self.alphabet.sorted(words))

    def flag(self, value: bool, human: str):
        self.lines.append(("true" if value else "false") if self.structured else human)

    def data(self, obj, human: Sequence[str]):
        if self.structured:
            self.lines.append(json.dumps(obj, ensure_ascii=False, indent=2))
        else:
            self.lines.extend(human)

    def text(self) -> str:
        return "".join(line + "\n" for line in self.lines)


# -- word ---------------------------------------------------------------------------


def cmd_word(args, out: Out) -> int:
    theta = _theta(args)
    out.alphabet = theta.alphabet
    ws = [_word(theta.alphabet, t) for t in args.words]
    sub = args.sub
    if sub == "apply":
        out.words([theta(ws[0])])
    elif sub == "pair":
        out.words(phi_pair(theta, ws[0]))
    elif sub == "cat":
        out.words(strong_cat(theta, ws[0], ws[1]))
    elif sub == "bicat":
        out.words(strong_bicat(theta, ws[0], ws[1]))
    elif sub == "power":
        out.words(bicat_word_power(theta, ws[0], args.n))
    elif sub == "is-palindrome":
        value = theta.is_palindrome(ws[0])
        out.flag(value, f"{out.show(ws[0])} is {'' if value else 'not '}a θ-palindrome")
    elif sub == "primitive-root":
        pr = primitive_root(ws[0])
        out.data({"root": out.show(pr.root), "exponent": pr.exponent},
                 [f"root {out.show(pr.root)} exponent {pr.exponent}"])
    elif sub == "is-phi-power":
        value = is_phi_power(theta, ws[0], ws[1])
        out.flag(value, f"{out.show(ws[0])} is {'' if value else 'not '}a φ-power of {out.show(ws[1])}")
    return EXIT_OK


# -- lang ---------------------------------------------------------------------------


def _emit_lang(out: Out, L: Lang):
    if isinstance(L, Nfa):
        out.lines.extend(format_nfa(L).splitlines())
    else:
        out.words(L.words)


def _membership(spec: str, alphabet: Alphabet):
    if Path(spec).is_file():
        L = load_lang(spec, alphabet)
        return L.accepts if isinstance(L, Nfa) else L.words.__contains__
    return parse_predicate(spec)


def _variant(name: str) -> Union[Variant, str]:
    if name.lower() == "bicat":
        return "bicat"
    for v in Variant:
        if name in (v.value, v.name) or name.upper() == v.name:
            return v
    names = ", ".join([v.value for v in Variant] + ["bicat"])
    raise CliError(f"unknown equation variant {name!r}; choose from {names}")


def cmd_lang(args, out: Out) -> int:
    sub = args.sub
    theta = None if args.inv is None else load_involution(args.inv)
    alphabet = None if theta is None else theta.alphabet
    out.alphabet = alphabet

    def need_theta():
        if theta is None:
            raise CliError(f"lang {sub} needs --inv")
        return theta

    if sub == "bicat":
        th = need_theta()
        A, B = load_lang(args.left, alphabet), load_lang(args.right, alphabet)
        if isinstance(A, FiniteLang) and isinstance(B, FiniteLang):
            _emit_lang(out, flang_bicat(th, A, B))
        else:
            _emit_lang(out, nfa_bicat(th, _as_nfa(A), _as_nfa(B)))
    elif sub == "power":
        th = need_theta()
        _emit_lang(out, flang_power(th, _finite(load_lang(args.lang, alphabet), "lang power"), args.n))
    elif sub == "plus":
        th = need_theta()
        L = _finite(load_lang(args.lang, alphabet), "lang plus")
        _emit_lang(out, flang_plus_closure_truncated(th, L, args.max_len))
    elif sub == "layers":
        th = need_theta()
        L = _finite(load_lang(args.lang, alphabet), "lang layers")
        layers = iterative_closure_layers(th, L, args.n, args.max_len)
        rendered = [[out.show(w) for w in layer] for layer in layers.layers]
        out.data(
            {"max_len": args.max_len, "layers": rendered},
            [f"L{i} = {{{', '.join(ws)}}}" for i, ws in enumerate(rendered)],
        )
    elif sub == "closure":
        th = need_theta()
        L = load_lang(args.lang, alphabet)
        _no_empty(L)
        _emit_lang(out, nfa_iter_closure(th, _as_nfa(L)))
    elif sub == "enumerate":
        A = _as_nfa(load_lang(args.lang, alphabet))
        out.alphabet = A.alphabet
        _emit_lang(out, nfa_enumerate(A, args.max_len))
    elif sub == "equiv":
        A = _as_nfa(load_lang(args.left, alphabet))
        B = _as_nfa(load_lang(args.right, alphabet or A.alphabet))
        out.alphabet = A.alphabet
        witness = nfa_equivalent(A, B)
        return _verdict(out, witness, "Equivalent", "NotEquivalent")
    elif sub == "closed-check":
        th = need_theta()
        violation = is_bicat_closed_bounded(th, _membership(args.lang, alphabet), args.bound)
        if violation is None:
            out.data({"closed": True, "bound": args.bound}, [f"Closed for all u, v of length <= {args.bound}"])
            return EXIT_OK
        u, v, w = (out.show(x) for x in (violation.u, violation.v, violation.w))
        out.data(
            {"closed": False, "bound": args.bound, "violation": {"u": u, "v": v, "w": w}},
            [f"NotClosed: u={u} v={v} gives {w}, which is outside L"],
        )
        return EXIT_FAIL
    elif sub == "equation":
        variant = _variant(args.variant)
        L = _as_nfa(load_lang(args.lang, alphabet))
        _no_empty(L)
        out.alphabet = L.alphabet
        u, v = _word(L.alphabet, args.u), _word(L.alphabet, args.v)
        if variant == "bicat":
            witness = bicat_equation_check(need_theta(), u, L, v)
        else:
            witness = lang_equation_check(u, v, L, variant, theta)
        return _verdict(out, witness, "Holds", "Fails")
    return EXIT_OK


def _verdict(out: Out, witness, yes: str, no: str) -> int:
    if witness is None:
        out.data({"result": yes}, [yes])
        return EXIT_OK
    w = out.show(witness.word)
    out.data({"result": no, "witness": w, "side": witness.side}, [f"{no}: {w} lies only on the {witness.side} side"])
    return EXIT_FAIL


# -- verify -------------------------------------------------------------------------


def _bounds(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise CliError(f"--bound takes key=value, got {item!r}")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise CliError(f"--bound {key} needs an integer, got {value!r}") from None
    return out


def cmd_verify(args, out: Out) -> int:
    theta = _theta(args)
    probes = None
    if args.probe:
        probes = [[theta.alphabet.parse(t) for t in p.split(",")] for p in args.probe]
    report = verify(
        args.theorem,
        theta,
        bounds=_bounds(args.bound),
        jobs=args.jobs,
        probes=probes,
        max_len=args.max_len,
        pool=args.lang_pool,
    )
    out.lines.extend((report.to_json() if out.structured else report.to_text()).splitlines())
    return EXIT_OK if report.status == ALL_PASS else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--inv", help="involution: a file path, 'dna', or an inline spec like 'a<->b antimorphic'")
    common.add_argument("--output", choices=("human", "structured"), default="human")

    parser = _Parser(prog="bicat", description="Strong φ-bi-catenation on words and languages.")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    word = top.add_parser("word", help="operations on single words")
    wsub = word.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    for name, arity, text in (
        ("apply", 1, "φ(w)"),
        ("pair", 1, "the φ-pair {w, φ(w)}"),
        ("cat", 2, "strong φ-catenation u ⊗ v"),
        ("bicat", 2, "strong φ-bi-catenation u ⇆ v"),
        ("is-palindrome", 1, "whether θ(w) = w"),
        ("primitive-root", 1, "primitive root and exponent"),
    ):
        p = wsub.add_parser(name, parents=[common], help=text)
        p.add_argument("words", nargs=arity, metavar="WORD")
    p = wsub.add_parser("power", parents=[common], help="all φ-powers of w with n blocks")
    p.add_argument("words", nargs=1, metavar="WORD")
    p.add_argument("n", type=int)
    p = wsub.add_parser("is-phi-power", parents=[common], help="whether W is a φ-power of BASE")
    p.add_argument("words", nargs=2, metavar=("W", "BASE"))

    lang = top.add_parser("lang", help="operations on languages (word lists or NFA files)")
    lsub = lang.add_subparsers(dest="sub", required=True, parser_class=_Parser)
    for name in ("bicat", "equiv"):
        p = lsub.add_parser(name, parents=[common])
        p.add_argument("left")
        p.add_argument("right")
    p = lsub.add_parser("power", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("lang")
    p = lsub.add_parser("plus", parents=[common])
    p.add_argument("lang")
    p.add_argument("--max-len", type=int, required=True)
    p = lsub.add_parser("layers", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("lang")
    p.add_argument("--max-len", type=int, required=True)
    p = lsub.add_parser("closure", parents=[common], help="iterative closure as an NFA file")
    p.add_argument("lang")
    p = lsub.add_parser("enumerate", parents=[common])
    p.add_argument("lang")
    p.add_argument("--max-len", type=int, required=True)
    p = lsub.add_parser("closed-check", parents=[common])
    p.add_argument("--lang", required=True, help="a word list, an NFA file, or eq:a,b | sum:a,b,c | alleq:a,b,...")
    p.add_argument("--bound", type=int, required=True)
    p = lsub.add_parser("equation", parents=[common])
    p.add_argument("--variant", required=True, help="uL=Lv, uL=Lt(v), ..., or bicat for u⇆L = L⇆v")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("lang")

    ver = top.add_parser("verify", parents=[common], help="exhaustively check a catalog result")
    ver.add_argument("theorem")
    ver.add_argument("--max-len", type=int, help="set every word-length bound at once")
    ver.add_argument("--bound", action="append", default=[], metavar="KEY=N")
    ver.add_argument("--probe", action="append", default=[], metavar="W1,W2[,W3]")
    ver.add_argument("--lang-pool", default="all", choices=("all", "finite", "generated"))
    ver.add_argument("--jobs", type=int, default=1)
    return parser


def _positive(args):
    for name in ("max_len", "bound", "jobs"):
        value = getattr(args, name, None)
        if isinstance(value, int) and value < 1:
            raise CliError(f"--{name.replace('_', '-')} must be positive")
    if getattr(args, "n", 0) < 0:
        raise CliError("n must be nonnegative")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Out(args.output)
    try:
        _positive(args)
        handler = {"word": cmd_word, "lang": cmd_lang, "verify": cmd_verify}[args.command]
        code = handler(args, out)
    except (BicatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(out.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
