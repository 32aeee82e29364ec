"""Finite languages under ⇆φ: exact set computations and closure checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import AlphabetMismatch, EmptyWordInL, FormatError
from .involution import EMPTY, Alphabet, Involution, Word
from .operations import bicat_sets, concat_sets, strong_bicat

Membership = Callable[[Word], bool]


@dataclass(frozen=True)
class FiniteLang:
    alphabet: Alphabet
    words: FrozenSet[Word]

    @classmethod
    def of(cls, alphabet: Alphabet, words: Iterable[Word]) -> "FiniteLang":
        words = frozenset(tuple(w) for w in words)
        for w in words:
            alphabet.check(w)
        return cls(alphabet, words)

    @classmethod
    def parse(cls, alphabet: Alphabet, texts: Iterable[str]) -> "FiniteLang":
        return cls.of(alphabet, (alphabet.parse(t) for t in texts))

    def __iter__(self) -> Iterator[Word]:
        return iter(self.alphabet.sorted(self.words))

    def __len__(self):
        return len(self.words)

    def __contains__(self, w):
        return w in self.words

    def render(self) -> List[str]:
        return [self.alphabet.render(w) for w in self]

    def truncate(self, max_len: int) -> "FiniteLang":
        return FiniteLang(self.alphabet, frozenset(w for w in self.words if len(w) <= max_len))

    def union(self, other: "FiniteLang") -> "FiniteLang":
        _same(self.alphabet, other.alphabet)
        return FiniteLang(self.alphabet, self.words | other.words)


def _same(a: Alphabet, b: Alphabet):
    if a != b:
        diff = sorted(set(a.letters) ^ set(b.letters)) or [a.letters[0]]
        raise AlphabetMismatch(diff[0], f"alphabets differ: {a.letters} vs {b.letters}")


def _check(phi: Involution, *langs: FiniteLang):
    for L in langs:
        _same(phi.alphabet, L.alphabet)


def _nonempty_words(L: FiniteLang):
    if EMPTY in L.words:
        raise EmptyWordInL("the language contains the empty word")


def flang_phi(phi: Involution, L: FiniteLang) -> FiniteLang:
    _check(phi, L)
    return FiniteLang(L.alphabet, L.words | frozenset(phi(w) for w in L.words))


def flang_bicat(phi: Involution, L1: FiniteLang, L2: FiniteLang) -> FiniteLang:
    """Union of u ⇆φ v over u in L1, v in L2."""
    _check(phi, L1, L2)
    return FiniteLang(L1.alphabet, bicat_sets(phi, L1.words, L2.words))


def flang_bicat_products(phi: Involution, L1: FiniteLang, L2: FiniteLang) -> FiniteLang:
    """(L1)_φ(L2)_φ ∪ (L2)_φ(L1)_φ, computed from the φ-closures."""
    a, b = flang_phi(phi, L1).words, flang_phi(phi, L2).words
    return FiniteLang(L1.alphabet, concat_sets(a, b) | concat_sets(b, a))


def flang_power(phi: Involution, L: FiniteLang, n: int) -> FiniteLang:
    _check(phi, L)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return FiniteLang(L.alphabet, frozenset([EMPTY]))
    closed = flang_phi(phi, L).words
    out = closed
    for _ in range(n - 1):
        out = concat_sets(out, closed)
    return FiniteLang(L.alphabet, out)


def flang_iterated(phi: Involution, L1: FiniteLang, L2: FiniteLang, i: int) -> FiniteLang:
    """The iterated operation: base L1 ∪ φ(L1) ∪ L2 ∪ φ(L2), then (prev ⇆φ L2)."""
    _check(phi, L1, L2)
    out = flang_phi(phi, L1).union(flang_phi(phi, L2))
    for _ in range(i):
        out = flang_bicat(phi, out, L2)
    return out


def flang_power_literal(phi: Involution, L: FiniteLang, n: int) -> FiniteLang:
    """The power read straight off its recursive definition (L ⇆^(n-1) L for n >= 2)."""
    if n == 0:
        return FiniteLang(L.alphabet, frozenset([EMPTY]))
    if n == 1:
        return flang_phi(phi, L)
    return flang_iterated(phi, L, L, n - 1)


def flang_plus_closure_truncated(phi: Involution, L: FiniteLang, max_len: int) -> FiniteLang:
    _check(phi, L)
    _nonempty_words(L)
    base = frozenset(w for w in flang_phi(phi, L).words if len(w) <= max_len)
    seen, frontier = set(base), base
    while frontier:
        frontier = frozenset(
            x + y for x in frontier for y in base if len(x) + len(y) <= max_len
        ) - seen
        seen |= frontier
    return FiniteLang(L.alphabet, frozenset(seen))


@dataclass(frozen=True)
class ClosureLayers:
    layers: Tuple[FiniteLang, ...]

    def __getitem__(self, i):
        return self.layers[i]

    def __len__(self):
        return len(self.layers)

    def union(self) -> FiniteLang:
        alphabet = self.layers[0].alphabet
        return FiniteLang(alphabet, frozenset().union(*(L.words for L in self.layers)))


def iterative_closure_layers(phi: Involution, L: FiniteLang, n: int, max_len: int) -> ClosureLayers:
    """Layers L_0..L_n of the iterative closure, each cut at length max_len.

    Cutting is exact: results only grow in length, so a short word of L_i is
    always built from short words of earlier layers.
    """
    _check(phi, L)
    _nonempty_words(L)
    layers = [flang_phi(phi, L).truncate(max_len)]
    pool = set(layers[0].words)
    for _ in range(n):
        ordered = sorted(pool, key=L.alphabet.key)
        layer = set()
        for u in ordered:
            for v in ordered:
                if len(u) + len(v) <= max_len:
                    layer |= strong_bicat(phi, u, v)
        layers.append(FiniteLang(L.alphabet, frozenset(layer)))
        pool |= layer
    return ClosureLayers(tuple(layers))


# -- closure under ⇆φ ---------------------------------------------------------


@dataclass(frozen=True)
class ClosureViolation:
    u: Word
    v: Word
    w: Word


def closure_violations(
    phi: Involution, member: Membership, bound: int, domain: Optional[Iterable[Word]] = None
) -> Iterator[ClosureViolation]:
    """Every (u, v, w) with u, v in L, w in u ⇆φ v and w not in L, canonical order."""
    alphabet = phi.alphabet
    if domain is None:
        domain = alphabet.words(bound)
    members = [w for w in alphabet.sorted(domain) if len(w) <= bound and member(w)]
    for u in members:
        for v in members:
            for w in alphabet.sorted(strong_bicat(phi, u, v)):
                if not member(w):
                    yield ClosureViolation(u, v, w)


def is_bicat_closed_bounded(
    phi: Involution, member: Membership, sample_bound: int, domain: Optional[Iterable[Word]] = None
) -> Optional[ClosureViolation]:
    """None when closed for all u, v up to the bound, else the first violation."""
    return next(closure_violations(phi, member, sample_bound, domain), None)


def count_balance(a: str, b: str) -> Membership:
    """|w|_a = |w|_b."""
    return lambda w: w.count(a) == w.count(b)


def count_sum(a: str, b: str, c: str) -> Membership:
    """|w|_a + |w|_b = |w|_c."""
    return lambda w: w.count(a) + w.count(b) == w.count(c)


def count_all_equal(*letters: str) -> Membership:
    return lambda w: len({w.count(x) for x in letters}) == 1


def nonempty(member: Membership) -> Membership:
    return lambda w: bool(w) and member(w)


def complement(member: Membership) -> Membership:
    return lambda w: bool(w) and not member(w)


def union(*members: Membership) -> Membership:
    return lambda w: any(m(w) for m in members)


def intersection(*members: Membership) -> Membership:
    return lambda w: all(m(w) for m in members)


def reversed_lang(member: Membership) -> Membership:
    return lambda w: member(w[::-1])


def image_lang(phi: Involution, member: Membership) -> Membership:
    """Membership in φ(L), using φ(φ(w)) = w."""
    return lambda w: member(phi(w))


def parse_predicate(text: str) -> Membership:
    """Built-in predicate families: ``eq:a,b``, ``sum:a,b,c``, ``alleq:a,b,c``."""
    name, _, args = text.partition(":")
    letters = [x for x in args.split(",") if x]
    if name == "eq" and len(letters) == 2:
        pred = count_balance(*letters)
    elif name == "sum" and len(letters) == 3:
        pred = count_sum(*letters)
    elif name == "alleq" and len(letters) >= 2:
        pred = count_all_equal(*letters)
    else:
        raise FormatError(f"unknown predicate {text!r}; use eq:a,b  sum:a,b,c  alleq:a,b,c")
    return nonempty(pred)


# -- word list files ------------------------------------------------------------


def parse_words_file(alphabet: Alphabet, text: str) -> FiniteLang:
    words = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            words.append(alphabet.parse(line))
        except AlphabetMismatch as exc:
            raise FormatError(str(exc), lineno) from None
    return FiniteLang.of(alphabet, words)


def format_words_file(L: FiniteLang) -> str:
    return "".join(line + "\n" for line in L.render())


def all_finite_langs(alphabet: Alphabet, max_len: int, max_size: Optional[int] = None, min_len: int = 1):
    """Every nonempty set of words with lengths in [min_len, max_len], canonical order."""
    pool = list(alphabet.words(max_len, min_len))
    top = len(pool) if max_size is None else min(max_size, len(pool))
    for size in range(1, top + 1):
        for combo in itertools.combinations(pool, size):
            yield FiniteLang(alphabet, frozenset(combo))

