"""Strong φ-catenation and strong φ-bi-catenation on words.

Every operation returns a ``frozenset`` of words; use ``Alphabet.sorted``
for the canonical (length, letter order) listing.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import FrozenSet, Optional

from .errors import EmptyBase, EmptyWord
from .involution import EMPTY, Involution, Word, count_pair
from .words import primitive_root

WordSet = FrozenSet[Word]


def phi_pair(phi: Involution, u: Word) -> WordSet:
    return frozenset((u, phi(u)))


def concat_sets(left, right) -> WordSet:
    return frozenset(x + y for x in left for y in right)


def strong_cat(phi: Involution, u: Word, v: Word) -> WordSet:
    return concat_sets(phi_pair(phi, u), phi_pair(phi, v))


def strong_bicat(phi: Involution, u: Word, v: Word) -> WordSet:
    pu, pv = phi_pair(phi, u), phi_pair(phi, v)
    return concat_sets(pu, pv) | concat_sets(pv, pu)


def bicat_sets(phi: Involution, left, right) -> WordSet:
    """Extension of ⇆φ to sets: the union of u ⇆φ v over all pairs."""
    out = set()
    for u in left:
        for v in right:
            out |= strong_bicat(phi, u, v)
    return frozenset(out)


def bicat_word_power(phi: Involution, u: Word, n: int) -> WordSet:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return frozenset([EMPTY])
    pair = phi_pair(phi, u)
    return frozenset(sum(blocks, ()) for blocks in itertools.product(pair, repeat=n))


def is_phi_power(phi: Involution, w: Word, u: Word) -> bool:
    """w = u u_2 ... u_n with every u_i in {u, φ(u)}."""
    if not u:
        raise EmptyBase("the base word must be nonempty")
    n, r = divmod(len(w), len(u))
    if r or n == 0 or w[: len(u)] != u:
        return False
    pair = phi_pair(phi, u)
    return all(w[i * len(u):(i + 1) * len(u)] in pair for i in range(1, n))


@dataclass(frozen=True)
class Commutation:
    """Outcome of comparing u⊗v with v⊗u.

    ``equal`` comes from direct set comparison; ``witness`` is the structural
    reason found independently ("equal", "theta-image" or "palindromic-root").
    """

    equal: bool
    witness: Optional[str] = None
    root: Optional[Word] = None


def strong_cat_commutes(theta: Involution, u: Word, v: Word) -> Commutation:
    theta.require_antimorphic()
    if not u or not v:
        raise EmptyWord("u and v must be nonempty")
    equal = strong_cat(theta, u, v) == strong_cat(theta, v, u)
    if u == v:
        return Commutation(equal, "equal")
    if u == theta(v):
        return Commutation(equal, "theta-image")
    if u + v == v + u:
        root = primitive_root(u).root
        if theta(root) == root:
            return Commutation(equal, "palindromic-root", root)
    return Commutation(equal)


def check_phi_propagating(phi: Involution, u: Word, v: Word) -> bool:
    letters = phi.alphabet.letters
    want = {a: count_pair(phi, u, a) + count_pair(phi, v, a) for a in letters}
    return all(count_pair(phi, w, a) == want[a] for w in strong_bicat(phi, u, v) for a in letters)


def propagation_failures(phi: Involution, u: Word, v: Word):
    """(w, letter, |w|_a, |u|_a + |v|_a) for results that break plain propagation."""
    out = []
    for w in phi.alphabet.sorted(strong_bicat(phi, u, v)):
        for a in phi.alphabet:
            got, want = w.count(a), u.count(a) + v.count(a)
            if got != want:
                out.append((w, a, got, want))
    return out


def left_assoc(phi: Involution, u: Word, v: Word, w: Word) -> WordSet:
    return bicat_sets(phi, strong_bicat(phi, u, v), [w])


def right_assoc(phi: Involution, u: Word, v: Word, w: Word) -> WordSet:
    return bicat_sets(phi, [u], strong_bicat(phi, v, w))
