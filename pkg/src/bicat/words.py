"""Classical word equations: primitivity, conjugacy and their θ-variants.

Each solver checks its defining equation first, then searches the
factorizations of its inputs exhaustively.  When several decompositions
exist the one with the shortest first component is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import EmptyWord, EquationFails, NoDecomposition, NotConjugate
from .involution import EMPTY, Involution, Word


@dataclass(frozen=True)
class PrimitiveRoot:
    root: Word
    exponent: int


@dataclass(frozen=True)
class ConjugacyDecomposition:
    """u = xy, v = (xy)^k x, w = yx."""

    x: Word
    y: Word
    k: int

    def rebuild(self):
        xy = self.x + self.y
        return xy, xy * self.k + self.x, self.y + self.x


@dataclass(frozen=True)
class Split:
    """u = xy and w = y θ(x)."""

    x: Word
    y: Word


@dataclass(frozen=True)
class ThetaImage:
    """u = θ(w)."""


@dataclass(frozen=True)
class ThetaCommuteDecomposition:
    """u = x(yx)^i, v = yx with x, y θ-palindromes."""

    x: Word
    y: Word
    i: int

    def rebuild(self):
        return self.x + (self.y + self.x) * self.i, self.y + self.x


@dataclass(frozen=True)
class CommonPalindromicRoot:
    alpha: Word
    i: int
    k: int


@dataclass(frozen=True)
class SkewPair:
    """x = [θ(s)s]^i θ(s), y = [sθ(s)]^k s."""

    s: Word
    i: int
    k: int


def _nonempty(*ws):
    if any(not w for w in ws):
        raise EmptyWord("words must be nonempty")


def primitive_root(w: Word) -> PrimitiveRoot:
    _nonempty(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return PrimitiveRoot(w[:d], n // d)
    raise AssertionError("unreachable")


def is_primitive(w: Word) -> bool:
    return primitive_root(w).exponent == 1


def is_power_of(w: Word, s: Word) -> bool:
    """w = s^n for some n >= 0."""
    if not s:
        return not w
    q, r = divmod(len(w), len(s))
    return r == 0 and s * q == w


def decompose_conjugacy(u: Word, v: Word, w: Word) -> ConjugacyDecomposition:
    _nonempty(u, v, w)
    if u + v != v + w:
        raise NotConjugate("uv != vw")
    k, r = divmod(len(v), len(u))
    if r == 0:
        # v = u^k: take x = u, y = λ so that v = (xy)^(k-1) x
        return ConjugacyDecomposition(u, EMPTY, k - 1)
    return ConjugacyDecomposition(u[:r], u[r:], k)


def common_root(x: Word, y: Word) -> Optional[Word]:
    """The primitive t with x = t^i, y = t^j, or None when xy != yx."""
    _nonempty(x, y)
    if x + y != y + x:
        return None
    return primitive_root(x).root


def theta_conjugate_decompose(theta: Involution, u: Word, v: Word, w: Word) -> Union[Split, ThetaImage]:
    _nonempty(u, v, w)
    if u + v != theta(v) + w:
        raise EquationFails("uv != θ(v)w")
    for cut in range(1, len(u) + 1):
        x, y = u[:cut], u[cut:]
        if y + theta(x) == w:
            return Split(x, y)
    if u == theta(w):
        return ThetaImage()
    raise NoDecomposition(f"no split for u={u}, w={w}")


def theta_commute_decompose(theta: Involution, u: Word, v: Word) -> ThetaCommuteDecomposition:
    _nonempty(u, v)
    if u + v != theta(v) + u:
        raise EquationFails("uv != θ(v)u")
    for lx in range(len(v)):
        y, x = v[: len(v) - lx], v[len(v) - lx:]
        if theta(x) != x or theta(y) != y:
            continue
        i, r = divmod(len(u) - lx, len(v))
        if len(u) >= lx and r == 0 and x + (y + x) * i == u:
            return ThetaCommuteDecomposition(x, y, i)
    raise NoDecomposition(f"no θ-palindromic decomposition for u={u}, v={v}")


def palindromic_pair_classify(theta: Involution, x: Word, y: Word):
    """Solve xy = θ(y)θ(x), yx = θ(x)θ(y); None when the equations fail.

    Raises NoDecomposition if the equations hold but neither shape fits.
    """
    _nonempty(x, y)
    tx, ty = theta(x), theta(y)
    if x + y != ty + tx or y + x != tx + ty:
        return None
    if x + y == y + x:
        root = primitive_root(x).root
        if theta(root) == root:
            return CommonPalindromicRoot(root, len(x) // len(root), len(y) // len(root))
    for ls in range(1, min(len(x), len(y)) + 1):
        qx, rx = divmod(len(x), ls)
        qy, ry = divmod(len(y), ls)
        if rx or ry or qx % 2 == 0 or qy % 2 == 0:
            continue
        s = y[:ls]
        ts = theta(s)
        i, k = qx // 2, qy // 2
        if (ts + s) * i + ts == x and (s + ts) * k + s == y:
            return SkewPair(s, i, k)
    raise NoDecomposition(f"x={x}, y={y} fit neither shape")


def is_rotation(u: Word, w: Word) -> bool:
    return len(u) == len(w) and any(u[i:] + u[:i] == w for i in range(max(len(u), 1)))
