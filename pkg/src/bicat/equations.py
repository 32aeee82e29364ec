"""Language equations uL = ... and u ⇆θ L = L ⇆θ v, decided on automata."""
from __future__ import annotations

import enum
from typing import Optional

from .errors import EmptyWord
from .involution import Involution, Word
from .nfa import (
    Nfa,
    Witness,
    nfa_apply_involution,
    nfa_bicat,
    nfa_concat,
    nfa_equivalent,
    word_nfa,
)


class Variant(enum.Enum):
    """Right-hand sides for uL; ``t`` stands for θ."""

    LV = "uL=Lv"
    L_TV = "uL=Lt(v)"
    TL_V = "uL=t(L)v"
    TL_TV = "uL=t(L)t(v)"
    VL = "uL=vL"
    TV_L = "uL=t(v)L"
    V_TL = "uL=vt(L)"
    TV_TL = "uL=t(v)t(L)"

    @property
    def uses_theta(self) -> bool:
        return "t(" in self.value


def equation_sides(u: Word, v: Word, L: Nfa, variant: Variant, theta: Optional[Involution] = None):
    alphabet = L.alphabet
    if variant.uses_theta:
        if theta is None:
            raise ValueError(f"{variant.value} needs an involution")
        theta.require_antimorphic()
    if not u or not v:
        raise EmptyWord("u and v must be nonempty")
    rhs = variant.value.split("=")[1]
    lang = nfa_apply_involution(theta, L) if "t(L)" in rhs else L
    vv = theta(v) if "t(v)" in rhs else v
    vw = word_nfa(alphabet, vv)
    right = nfa_concat(lang, vw) if rhs.startswith(("L", "t(L)")) else nfa_concat(vw, lang)
    return nfa_concat(word_nfa(alphabet, u), L), right


def lang_equation_check(
    u: Word, v: Word, L: Nfa, variant: Variant, theta: Optional[Involution] = None
) -> Optional[Witness]:
    """None when the equation holds, else a word lying in exactly one side."""
    left, right = equation_sides(u, v, L, Variant(variant), theta)
    return nfa_equivalent(left, right)


def bicat_equation_check(phi: Involution, u: Word, L: Nfa, v: Word) -> Optional[Witness]:
    """Decide u ⇆φ L = L ⇆φ v."""
    alphabet = L.alphabet
    return nfa_equivalent(
        nfa_bicat(phi, word_nfa(alphabet, u), L),
        nfa_bicat(phi, L, word_nfa(alphabet, v)),
    )
