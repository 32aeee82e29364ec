"""Alphabets, words and (anti)morphic involutions.

Words are plain tuples of letters; ``()`` is the empty word.  Letters are
strings and may be longer than one character, but they are always treated
as atoms.  ``_`` is reserved for rendering the empty word.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import (
    AlphabetMismatch,
    FormatError,
    KindMismatch,
    NonInvolution,
    PartialMapping,
    UnknownLetter,
)

Word = Tuple[str, ...]
EMPTY: Word = ()
LAMBDA = "_"


class Kind(enum.Enum):
    MORPHIC = "morphic"
    ANTIMORPHIC = "antimorphic"


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            raise ValueError("an alphabet needs at least one letter")
        if len(set(letters)) != len(letters):
            raise ValueError(f"repeated letters in alphabet {letters}")
        for a in letters:
            if not a or a == LAMBDA or any(c.isspace() for c in a):
                raise ValueError(f"invalid letter {a!r}")

    @cached_property
    def index(self) -> dict:
        return {a: i for i, a in enumerate(self.letters)}

    @cached_property
    def single_char(self) -> bool:
        return all(len(a) == 1 for a in self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, letter):
        return letter in self.index

    def check(self, w: Word) -> Word:
        for a in w:
            if a not in self.index:
                raise AlphabetMismatch(a)
        return w

    def key(self, w: Word):
        """Canonical sort key: length first, then letter order."""
        idx = self.index
        return (len(w), tuple(idx[a] for a in w))

    def sorted(self, words: Iterable[Word]) -> list:
        return sorted(words, key=self.key)

    def words(self, max_len: int, min_len: int = 0) -> Iterator[Word]:
        """All words with ``min_len <= |w| <= max_len`` in canonical order."""
        for n in range(min_len, max_len + 1):
            yield from itertools.product(self.letters, repeat=n)

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text in ("", LAMBDA):
            return EMPTY
        tokens = tuple(text.split()) if any(c.isspace() for c in text) else None
        if tokens is None and not self.single_char:
            return self._tokenize(text)
        tokens = tokens if tokens is not None else tuple(text)
        for pos, a in enumerate(tokens):
            if a not in self.index:
                raise AlphabetMismatch(a, f"letter {a!r} at position {pos} of {text!r} is not in the alphabet")
        return tokens

    def _tokenize(self, text: str) -> Word:
        by_length = sorted(self.letters, key=len, reverse=True)
        out, pos = [], 0
        while pos < len(text):
            for a in by_length:
                if text.startswith(a, pos):
                    out.append(a)
                    pos += len(a)
                    break
            else:
                raise AlphabetMismatch(text[pos], f"cannot read a letter at position {pos} of {text!r}")
        return tuple(out)

    def render(self, w: Word) -> str:
        if not w:
            return LAMBDA
        return "".join(w) if self.single_char else " ".join(w)


@dataclass(frozen=True)
class Involution:
    """A letter involution extended to words as a morphism or antimorphism."""

    alphabet: Alphabet
    images: Tuple[str, ...]  # images[i] is the image of alphabet.letters[i]
    kind: Kind

    @cached_property
    def table(self) -> dict:
        return dict(zip(self.alphabet.letters, self.images))

    @property
    def antimorphic(self) -> bool:
        return self.kind is Kind.ANTIMORPHIC

    def letter(self, a: str) -> str:
        try:
            return self.table[a]
        except KeyError:
            raise UnknownLetter(f"letter {a!r} is not in the alphabet") from None

    def __call__(self, w: Word) -> Word:
        table = self.table
        try:
            if self.kind is Kind.ANTIMORPHIC:
                return tuple(table[a] for a in reversed(w))
            return tuple(table[a] for a in w)
        except KeyError as exc:
            raise AlphabetMismatch(exc.args[0]) from None

    def is_palindrome(self, w: Word) -> bool:
        if self.kind is not Kind.ANTIMORPHIC:
            raise KindMismatch("θ-palindromes are defined for antimorphic involutions only")
        return self(w) == w

    def require_antimorphic(self):
        if self.kind is not Kind.ANTIMORPHIC:
            raise KindMismatch("this operation needs an antimorphic involution")

    def spec(self) -> str:
        """Inline description, e.g. ``a<->b antimorphic``; parses back via `parse_inline`."""
        parts, seen = [], set()
        for a, b in zip(self.alphabet.letters, self.images):
            if a in seen:
                continue
            seen.update((a, b))
            parts.append(f"{a}->{a}" if a == b else f"{a}<->{b}")
        return " ".join(parts + [self.kind.value])

    def __str__(self):
        return self.spec()


def validate_involution(
    alphabet: Union[Alphabet, Iterable[str]],
    mapping: Union[Mapping[str, str], Iterable[Tuple[str, str]]],
    kind: Union[Kind, str],
) -> Involution:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(tuple(alphabet))
    kind = Kind(kind)
    pairs = mapping.items() if isinstance(mapping, Mapping) else mapping
    image = {}
    for a, b in pairs:
        for c in (a, b):
            if c not in alphabet:
                raise UnknownLetter(f"letter {c!r} is not in the alphabet")
        if a in image and image[a] != b:
            raise NonInvolution(f"{a!r} is mapped to both {image[a]!r} and {b!r}")
        image[a] = b
    missing = [a for a in alphabet if a not in image]
    if missing:
        raise PartialMapping(f"no image for {', '.join(missing)}")
    for a, b in image.items():
        if image[b] != a:
            raise NonInvolution(f"{a}->{b} but {b}->{image[b]}")
    return Involution(alphabet, tuple(image[a] for a in alphabet), kind)


def apply_involution(phi: Involution, w: Word) -> Word:
    return phi(w)


def is_theta_palindrome(theta: Involution, w: Word) -> bool:
    return theta.is_palindrome(w)


def count_letter(alphabet: Alphabet, w: Word, a: str) -> int:
    if a not in alphabet:
        raise UnknownLetter(f"letter {a!r} is not in the alphabet")
    return w.count(a)


def count_pair(phi: Involution, w: Word, a: str) -> int:
    """|w|_a + |w|_φ(a), counting a fixed letter once."""
    b = phi.letter(a)
    return w.count(a) if a == b else w.count(a) + w.count(b)


# -- text formats -----------------------------------------------------------

DNA = validate_involution("ACGT", {"A": "T", "T": "A", "C": "G", "G": "C"}, Kind.ANTIMORPHIC)

_ARROW = re.compile(r"^(\S+?)\s*(<->|->)\s*(\S+)$")


def _mapping_pairs(rules: Iterable[Tuple[int, str]]):
    pairs = []
    for lineno, rule in rules:
        m = _ARROW.match(rule)
        if not m:
            raise FormatError(f"expected 'a <-> b' or 'a -> a', got {rule!r}", lineno)
        a, arrow, b = m.groups()
        if arrow == "->":
            # a one-way a->b needs its partner b->a elsewhere or validation rejects it
            pairs.append((a, b))
        else:
            pairs.extend([(a, b), (b, a)])
    return pairs


def parse_involution_file(text: str) -> Involution:
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise FormatError("need an 'alphabet:' line and a 'kind:' line")
    (l1, first), (l2, second) = lines[0], lines[1]
    if not first.startswith("alphabet:"):
        raise FormatError("first line must be 'alphabet: ...'", l1)
    if not second.startswith("kind:"):
        raise FormatError("second line must be 'kind: morphic|antimorphic'", l2)
    letters = tuple(first[len("alphabet:"):].split())
    kind_text = second[len("kind:"):].strip()
    try:
        kind = Kind(kind_text)
    except ValueError:
        raise FormatError(f"unknown kind {kind_text!r}", l2) from None
    try:
        alphabet = Alphabet(letters)
    except ValueError as exc:
        raise FormatError(str(exc), l1) from None
    return validate_involution(alphabet, _mapping_pairs(lines[2:]), kind)


def format_involution_file(phi: Involution) -> str:
    out = [f"alphabet: {' '.join(phi.alphabet)}", f"kind: {phi.kind.value}"]
    seen = set()
    for a, b in zip(phi.alphabet.letters, phi.images):
        if a in seen:
            continue
        seen.update((a, b))
        out.append(f"{a} -> {a}" if a == b else f"{a} <-> {b}")
    return "\n".join(out) + "\n"


def parse_inline(spec: str) -> Involution:
    """Parse ``a<->b c->c antimorphic``; letter order follows first appearance."""
    tokens = spec.split()
    if not tokens or tokens[-1] not in ("morphic", "antimorphic"):
        raise FormatError(f"inline involution must end with morphic or antimorphic: {spec!r}")
    rules = [(None, t) for t in tokens[:-1]]
    pairs = _mapping_pairs(rules)
    letters = []
    for a, b in pairs:
        for c in (a, b):
            if c not in letters:
                letters.append(c)
    if not letters:
        raise FormatError("inline involution has no letters")
    return validate_involution(Alphabet(tuple(letters)), pairs, tokens[-1])


def load_involution(source: str) -> Involution:
    """Resolve ``dna``, an inline spec, or a path to an involution file."""
    if source == "dna":
        return DNA
    if "->" in source:
        return parse_inline(source)
    return parse_involution_file(Path(source).read_text())
