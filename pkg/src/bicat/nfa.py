"""Nondeterministic finite automata over an `Alphabet`.

Automata are immutable.  Constructions may use ε-moves internally; `_finish`
removes them, trims useless states and renumbers the rest in breadth-first
order so that equal constructions print identically.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import AlphabetMismatch, FormatError
from .involution import EMPTY, Alphabet, Involution, Kind, Word
from .languages import FiniteLang

Transition = Tuple[int, str, int]


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    n_states: int
    initial: FrozenSet[int]
    accepting: FrozenSet[int]
    transitions: FrozenSet[Transition]

    def __post_init__(self):
        for name in ("initial", "accepting", "transitions"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        states = range(self.n_states)
        for q in self.initial | self.accepting:
            if q not in states:
                raise ValueError(f"state {q} is not declared")
        for p, a, q in self.transitions:
            if p not in states or q not in states:
                raise ValueError(f"transition {p} {a} {q} uses an undeclared state")
            if a not in self.alphabet:
                raise AlphabetMismatch(a)

    @cached_property
    def delta(self) -> Dict[Tuple[int, str], FrozenSet[int]]:
        out: Dict[Tuple[int, str], set] = {}
        for p, a, q in self.transitions:
            out.setdefault((p, a), set()).add(q)
        return {k: frozenset(v) for k, v in out.items()}

    def step(self, states: FrozenSet[int], a: str) -> FrozenSet[int]:
        delta = self.delta
        out = set()
        for p in states:
            out.update(delta.get((p, a), ()))
        return frozenset(out)

    def accepts(self, w: Word) -> bool:
        states = self.initial
        for a in w:
            states = self.step(states, a)
            if not states:
                return False
        return not states.isdisjoint(self.accepting)

    def is_empty(self) -> bool:
        return not self.accepting


def _finish(alphabet: Alphabet, n: int, initial, accepting, transitions, eps=()) -> Nfa:
    closure = _eps_closures(n, eps)
    accepting = set(accepting)
    moves = set()
    for p in range(n):
        for r in closure[p]:
            if r in accepting:
                accepting.add(p)
        for q0, a, q in transitions:
            if q0 in closure[p]:
                moves.add((p, a, q))
    return _trim(alphabet, initial, accepting, moves)


def _eps_closures(n: int, eps) -> List[FrozenSet[int]]:
    succ: Dict[int, List[int]] = {}
    for p, q in eps:
        succ.setdefault(p, []).append(q)
    out = []
    for p in range(n):
        seen, stack = {p}, [p]
        while stack:
            for q in succ.get(stack.pop(), ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        out.append(frozenset(seen))
    return out


def _trim(alphabet: Alphabet, initial, accepting, moves) -> Nfa:
    fwd: Dict[int, List[Tuple[str, int]]] = {}
    back: Dict[int, List[int]] = {}
    for p, a, q in moves:
        fwd.setdefault(p, []).append((a, q))
        back.setdefault(q, []).append(p)
    coreach, stack = set(accepting), list(accepting)
    while stack:
        for p in back.get(stack.pop(), ()):
            if p not in coreach:
                coreach.add(p)
                stack.append(p)
    idx = alphabet.index
    order: Dict[int, int] = {}
    queue = deque(sorted(q for q in initial if q in coreach))
    for q in queue:
        order[q] = len(order)
    while queue:
        p = queue.popleft()
        for a, q in sorted(fwd.get(p, ()), key=lambda t: (idx[t[0]], t[1])):
            if q in coreach and q not in order:
                order[q] = len(order)
                queue.append(q)
    return Nfa(
        alphabet,
        len(order),
        frozenset(order[q] for q in initial if q in order),
        frozenset(order[q] for q in accepting if q in order),
        frozenset((order[p], a, order[q]) for p, a, q in moves if p in order and q in order),
    )


def _same_alphabet(*automata: Nfa) -> Alphabet:
    first = automata[0].alphabet
    for A in automata[1:]:
        if A.alphabet != first:
            extra = sorted(set(A.alphabet.letters) ^ set(first.letters)) or [first.letters[0]]
            raise AlphabetMismatch(extra[0], f"alphabets differ: {first.letters} vs {A.alphabet.letters}")
    return first


# -- constructions -------------------------------------------------------------


def empty_nfa(alphabet: Alphabet) -> Nfa:
    return Nfa(alphabet, 0, frozenset(), frozenset(), frozenset())


def nfa_from_words(L: FiniteLang) -> Nfa:
    """Trie automaton accepting exactly L."""
    alphabet = L.alphabet
    nodes: Dict[Word, int] = {EMPTY: 0}
    moves, accepting = set(), set()
    for w in L:
        for i, a in enumerate(w):
            prefix = w[: i + 1]
            if prefix not in nodes:
                nodes[prefix] = len(nodes)
            moves.add((nodes[w[:i]], a, nodes[prefix]))
        accepting.add(nodes[w])
    return _trim(alphabet, {0}, accepting, moves)


def word_nfa(alphabet: Alphabet, w: Word) -> Nfa:
    return nfa_from_words(FiniteLang.of(alphabet, [w]))


def _shift(A: Nfa, k: int):
    return (
        {q + k for q in A.initial},
        {q + k for q in A.accepting},
        {(p + k, a, q + k) for p, a, q in A.transitions},
    )


def nfa_union(*automata: Nfa) -> Nfa:
    alphabet = _same_alphabet(*automata)
    initial, accepting, moves, k = set(), set(), set(), 0
    for A in automata:
        i, f, t = _shift(A, k)
        initial |= i
        accepting |= f
        moves |= t
        k += A.n_states
    return _trim(alphabet, initial, accepting, moves)


def nfa_concat(*automata: Nfa) -> Nfa:
    alphabet = _same_alphabet(*automata)
    initial, accepting, moves, eps, k = set(), set(), set(), set(), 0
    for pos, A in enumerate(automata):
        i, f, t = _shift(A, k)
        if pos == 0:
            initial = i
        else:
            eps |= {(p, q) for p in accepting for q in i}
        accepting = f
        moves |= t
        k += A.n_states
    return _finish(alphabet, k, initial, accepting, moves, eps)


def nfa_plus(A: Nfa) -> Nfa:
    eps = {(p, q) for p in A.accepting for q in A.initial}
    return _finish(A.alphabet, A.n_states, A.initial, A.accepting, A.transitions, eps)


def nfa_star(A: Nfa) -> Nfa:
    return nfa_union(nfa_plus(A), word_nfa(A.alphabet, EMPTY))


def nfa_reverse(A: Nfa) -> Nfa:
    return _trim(A.alphabet, A.accepting, A.initial, {(q, a, p) for p, a, q in A.transitions})


def nfa_apply_involution(phi: Involution, A: Nfa) -> Nfa:
    _same_alphabet(A, empty_nfa(phi.alphabet))
    img = phi.table
    if phi.kind is Kind.MORPHIC:
        return _trim(A.alphabet, A.initial, A.accepting, {(p, img[a], q) for p, a, q in A.transitions})
    return _trim(A.alphabet, A.accepting, A.initial, {(q, img[a], p) for p, a, q in A.transitions})


def nfa_phi_closure(phi: Involution, A: Nfa) -> Nfa:
    """L ∪ φ(L)."""
    return nfa_union(A, nfa_apply_involution(phi, A))


def nfa_bicat(phi: Involution, A: Nfa, B: Nfa) -> Nfa:
    """L(A)_φ L(B)_φ ∪ L(B)_φ L(A)_φ."""
    _same_alphabet(A, B, empty_nfa(phi.alphabet))
    a, b = nfa_phi_closure(phi, A), nfa_phi_closure(phi, B)
    return nfa_union(nfa_concat(a, b), nfa_concat(b, a))


def nfa_iter_closure(phi: Involution, A: Nfa) -> Nfa:
    """(L(A)_φ)^+."""
    return nfa_plus(nfa_phi_closure(phi, A))


def nfa_intersect(A: Nfa, B: Nfa) -> Nfa:
    alphabet = _same_alphabet(A, B)
    ids: Dict[Tuple[int, int], int] = {}
    queue = deque()
    for pair in sorted((p, q) for p in A.initial for q in B.initial):
        ids[pair] = len(ids)
        queue.append(pair)
    moves = set()
    while queue:
        p, q = queue.popleft()
        for a in alphabet:
            for p2 in sorted(A.delta.get((p, a), ())):
                for q2 in sorted(B.delta.get((q, a), ())):
                    if (p2, q2) not in ids:
                        ids[(p2, q2)] = len(ids)
                        queue.append((p2, q2))
                    moves.add((ids[(p, q)], a, ids[(p2, q2)]))
    initial = {ids[(p, q)] for p in A.initial for q in B.initial}
    accepting = {i for (p, q), i in ids.items() if p in A.accepting and q in B.accepting}
    return _trim(alphabet, initial, accepting, moves)


# -- decisions -----------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A word accepted by exactly one side; ``side`` is "left" or "right"."""

    word: Word
    side: str


def _distinguish(A: Nfa, B: Nfa, one_sided: bool) -> Optional[Witness]:
    alphabet = _same_alphabet(A, B)
    start = (A.initial, B.initial)
    seen = {start}
    queue = deque([(start, EMPTY)])
    while queue:
        (sa, sb), w = queue.popleft()
        in_a = not sa.isdisjoint(A.accepting)
        in_b = not sb.isdisjoint(B.accepting)
        if in_a and not in_b:
            return Witness(w, "left")
        if in_b and not in_a and not one_sided:
            return Witness(w, "right")
        for a in alphabet:
            nxt = (A.step(sa, a), B.step(sb, a))
            if nxt not in seen and (nxt[0] or (nxt[1] and not one_sided)):
                seen.add(nxt)
                queue.append((nxt, w + (a,)))
    return None


def nfa_equivalent(A: Nfa, B: Nfa) -> Optional[Witness]:
    """None when L(A) = L(B), otherwise the canonically first shortest witness."""
    return _distinguish(A, B, one_sided=False)


def nfa_included(A: Nfa, B: Nfa) -> Optional[Witness]:
    """None when L(A) ⊆ L(B), otherwise the first word of L(A) missing from L(B)."""
    return _distinguish(A, B, one_sided=True)


def nfa_enumerate(A: Nfa, max_len: int) -> FiniteLang:
    found = []
    level = [(EMPTY, A.initial)] if A.initial else []
    for n in range(max_len + 1):
        found.extend(w for w, s in level if not s.isdisjoint(A.accepting))
        if n == max_len:
            break
        nxt = []
        for w, s in level:
            for a in A.alphabet:
                s2 = A.step(s, a)
                if s2:
                    nxt.append((w + (a,), s2))
        level = nxt
    return FiniteLang(A.alphabet, frozenset(found))


# -- text formats --------------------------------------------------------------


def format_nfa(A: Nfa) -> str:
    idx = A.alphabet.index
    lines = [
        f"alphabet: {' '.join(A.alphabet)}",
        f"states: {A.n_states}",
        f"initial: {' '.join(map(str, sorted(A.initial)))}".rstrip(),
        f"accepting: {' '.join(map(str, sorted(A.accepting)))}".rstrip(),
        "transitions:",
    ]
    for p, a, q in sorted(A.transitions, key=lambda t: (t[0], idx[t[1]], t[2])):
        lines.append(f"{p} {a} {q}")
    return "\n".join(lines) + "\n"


def parse_nfa(text: str) -> Nfa:
    fields: Dict[str, Tuple[int, str]] = {}
    triples: List[Tuple[int, List[str]]] = []
    in_transitions = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() in ("alphabet", "states", "initial", "accepting", "transitions"):
            key = key.strip()
            if key in fields:
                raise FormatError(f"duplicate field {key!r}", lineno)
            fields[key] = (lineno, value.strip())
            in_transitions = key == "transitions"
            if in_transitions and value.strip():
                raise FormatError("transitions go on the following lines", lineno)
            continue
        if not in_transitions:
            raise FormatError(f"unexpected line {line!r}", lineno)
        parts = line.split()
        if len(parts) != 3:
            raise FormatError("a transition is 'src letter dst'", lineno)
        triples.append((lineno, parts))
    for key in ("alphabet", "states", "initial", "accepting"):
        if key not in fields:
            raise FormatError(f"missing field {key!r}")
    try:
        alphabet = Alphabet(tuple(fields["alphabet"][1].split()))
    except ValueError as exc:
        raise FormatError(str(exc), fields["alphabet"][0]) from None

    def ints(key):
        lineno, value = fields[key]
        try:
            return [int(x) for x in value.split()]
        except ValueError:
            raise FormatError(f"{key} must be integers", lineno) from None

    (n_states,) = ints("states") or [None]
    if n_states is None or n_states < 0:
        raise FormatError("states must be a nonnegative count", fields["states"][0])
    moves = set()
    for lineno, (p, a, q) in triples:
        try:
            p, q = int(p), int(q)
        except ValueError:
            raise FormatError("states must be integers", lineno) from None
        if a not in alphabet:
            raise FormatError(f"letter {a!r} is not in the alphabet", lineno)
        if not (0 <= p < n_states and 0 <= q < n_states):
            raise FormatError(f"state out of range 0..{n_states - 1}", lineno)
        moves.add((p, a, q))
    initial, accepting = ints("initial"), ints("accepting")
    for key, states in (("initial", initial), ("accepting", accepting)):
        if any(not 0 <= q < n_states for q in states):
            raise FormatError(f"{key} state out of range", fields[key][0])
    return Nfa(alphabet, n_states, frozenset(initial), frozenset(accepting), frozenset(moves))


# -- tiny regular expressions ---------------------------------------------------


def nfa_from_regex(alphabet: Alphabet, pattern: str) -> Nfa:
    """Letters, ``_`` for λ, ``|``, juxtaposition, postfix ``*``/``+``, parentheses.

    Needs a single-character alphabet; whitespace is ignored.
    """
    if not alphabet.single_char:
        raise FormatError("regular expressions need single-character letters")
    text = "".join(pattern.split())
    pos = 0

    def peek():
        return text[pos] if pos < len(text) else None

    def expr():
        nonlocal pos
        parts = [term()]
        while peek() == "|":
            pos += 1
            parts.append(term())
        return parts[0] if len(parts) == 1 else nfa_union(*parts)

    def term():
        factors = []
        while peek() not in (None, "|", ")"):
            factors.append(factor())
        if not factors:
            return word_nfa(alphabet, EMPTY)
        return factors[0] if len(factors) == 1 else nfa_concat(*factors)

    def factor():
        nonlocal pos
        A = atom()
        while peek() in ("*", "+"):
            A = nfa_star(A) if peek() == "*" else nfa_plus(A)
            pos += 1
        return A

    def atom():
        nonlocal pos
        c = peek()
        if c == "(":
            pos += 1
            A = expr()
            if peek() != ")":
                raise FormatError(f"missing ')' at position {pos} of {pattern!r}")
            pos += 1
            return A
        if c == "_":
            pos += 1
            return word_nfa(alphabet, EMPTY)
        if c is not None and c in alphabet:
            pos += 1
            return word_nfa(alphabet, (c,))
        raise FormatError(f"unexpected {c!r} at position {pos} of {pattern!r}")

    A = expr()
    if pos != len(text):
        raise FormatError(f"unexpected {text[pos]!r} at position {pos} of {pattern!r}")
    return A

