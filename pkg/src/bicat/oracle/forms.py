"""Structural templates that characterization results conclude with.

Each family has a candidate search (every parameter assignment that rebuilds
the given words, found by exhaustive search over factorizations, so the
search is complete for the given inputs), a builder, and a bounded
generator.  ``match_form`` returns the first candidate after checking that
it rebuilds its input exactly.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

from ..involution import EMPTY, Involution, Word
from ..words import primitive_root

Params = Dict[str, object]


class FormFamily(enum.Enum):
    POWERS = "PowersOfCommonWord"
    PAL_POWERS = "PowersOfCommonPalindrome"
    CONJ_SPLIT = "ConjSplit"
    PAL_CONJ_SPLIT = "PalinConjSplit"
    PERIODIC = "PeriodicPair"
    PAL_PERIODIC = "PalinPeriodicPair"
    PAL_WRAP = "PalinWrap"
    SKEW_POWER = "SkewPower"
    PAL_PREFIX = "PalPrefix"
    THETA_PREFIX = "ThetaPrefix"
    PAL_PREFIX_SPLIT = "PalinPrefixSplit"
    THETA_COMMUTE = "ThetaCommute"
    THETA_SPLIT = "ThetaSplit"
    PAL_ROOT_PAIR = "PalinRootPair"
    SKEW_PAIR = "SkewPair"
    ALT_PAL = "AltPalinPowers"
    CHAIN = "ChainLang"
    TWISTED = "TwistedConj"


@dataclass(frozen=True)
class Match:
    family: FormFamily
    params: Params = field(hash=False)


def _pal(theta: Involution, w: Word) -> bool:
    return theta(w) == w


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def _roots(w: Word):
    """Every r with w = r^e (shortest first)."""
    return [w[:d] for d in _divisors(len(w)) if w[:d] * (len(w) // d) == w]


def _exponent(w: Word, s: Word) -> Optional[int]:
    if not s:
        return 0 if not w else None
    q, r = divmod(len(w), len(s))
    return q if r == 0 and s * q == w else None


# -- candidate searches ---------------------------------------------------------


def _powers(theta, words, palindromic):
    if any(not w for w in words):
        return
    g = 0
    for w in words:
        g = _gcd(g, len(w))
    for d in _divisors(g):
        s = words[0][:d]
        if palindromic and not _pal(theta, s):
            continue
        exps = [_exponent(w, s) for w in words]
        if all(e is not None for e in exps):
            yield {"s": s, "exponents": tuple(exps)}


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _conj_split(theta, words, palindromic):
    u, v = words[0], words[1]
    w = words[2] if len(words) > 2 else None
    if not u or not v:
        return
    for cut in range(0 if palindromic else 1, len(u) + 1):
        x, y = u[:cut], u[cut:]
        if palindromic and not (_pal(theta, x) and _pal(theta, y)):
            continue
        if w is not None and w != y + x:
            continue
        i, r = divmod(len(v) - len(x), len(u))
        if len(v) >= len(x) and r == 0 and u * i + x == v:
            yield {"x": x, "y": y, "i": i}


def _periodic(theta, words, palindromic):
    u, v = words
    d = len(u) - len(v)
    if d <= 0:
        return
    for j in range(len(v) // d + 1):
        lp = len(v) - j * d
        if lp > d:
            continue
        p, q = u[:lp], u[lp:d]
        if palindromic and not (_pal(theta, p) and _pal(theta, q)):
            continue
        if (p + q) * (j + 1) + p == u and (p + q) * j + p == v:
            yield {"p": p, "q": q, "j": j}


def _pal_wrap(theta, words):
    """u = (xy)^(j+1) x, v = yx."""
    u, v = words
    d = len(v)
    if not d:
        return
    j = 0
    while (j + 1) * d <= len(u):
        lx = len(u) - (j + 1) * d
        if lx <= d:
            x, y = u[:lx], u[lx:d]
            if _pal(theta, x) and _pal(theta, y) and v == y + x and (x + y) * (j + 1) + x == u:
                yield {"x": x, "y": y, "j": j}
        j += 1


def _skew_power(theta, words):
    """u = θ(t)s^k, v = s^n t (and w = s^k t when given), s = tθ(t)."""
    u, v = words[0], words[1]
    w = words[2] if len(words) > 2 else None
    for lt in range(1, len(v) + 1):
        t = v[len(v) - lt:]
        tt = theta(t)
        s = t + tt
        k = _exponent(u[lt:], s) if u[:lt] == tt else None
        n = _exponent(v[: len(v) - lt], s)
        if k is None or n is None:
            continue
        if w is not None and w != s * k + t:
            continue
        yield {"t": t, "s": s, "k": k, "n": n}


def _pal_prefix(theta, words):
    """v = γ w with γ a θ-palindrome."""
    v, w = words
    if len(v) >= len(w) and v[len(v) - len(w):] == w:
        gamma = v[: len(v) - len(w)]
        if _pal(theta, gamma):
            yield {"gamma": gamma}


def _theta_prefix(theta, words):
    """u = xy, v = θ(x), y a θ-palindrome (and w = yθ(x) when given)."""
    u, v = words[0], words[1]
    w = words[2] if len(words) > 2 else None
    if len(v) <= len(u):
        x, y = u[: len(v)], u[len(v):]
        if theta(x) == v and _pal(theta, y) and (w is None or w == y + v):
            yield {"x": x, "y": y}


def _pal_prefix_split(theta, words):
    """u = xy, v = x, x and y θ-palindromes (and w = yx when given)."""
    u, v = words[0], words[1]
    w = words[2] if len(words) > 2 else None
    if u[: len(v)] == v:
        x, y = v, u[len(v):]
        if _pal(theta, x) and _pal(theta, y) and (w is None or w == y + x):
            yield {"x": x, "y": y}


def _theta_commute(theta, words):
    u, v = words
    for lx in range(len(v)):
        y, x = v[: len(v) - lx], v[len(v) - lx:]
        if not (_pal(theta, x) and _pal(theta, y)):
            continue
        i, r = divmod(len(u) - lx, len(v))
        if len(u) >= lx and r == 0 and x + (y + x) * i == u:
            yield {"x": x, "y": y, "i": i}


def _theta_split(theta, words):
    u, w = words
    for cut in range(1, len(u) + 1):
        x, y = u[:cut], u[cut:]
        if w == y + theta(x):
            yield {"x": x, "y": y}


def _skew_pair(theta, words):
    """x = [θ(s)s]^i θ(s), y = [sθ(s)]^k s."""
    x, y = words
    for ls in range(1, min(len(x), len(y)) + 1):
        qx, rx = divmod(len(x), ls)
        qy, ry = divmod(len(y), ls)
        if rx or ry or qx % 2 == 0 or qy % 2 == 0:
            continue
        s = y[:ls]
        ts = theta(s)
        i, k = qx // 2, qy // 2
        if (ts + s) * i + ts == x and (s + ts) * k + s == y:
            yield {"s": s, "i": i, "k": k}


def _alt_pal(theta, words):
    """x = (αβ)^m, y = α(βα)^n with α, β θ-palindromes, m >= 1."""
    x, y = words
    for r in _roots(x):
        m = len(x) // len(r)
        for cut in range(len(r) + 1):
            a, b = r[:cut], r[cut:]
            if not (_pal(theta, a) and _pal(theta, b)):
                continue
            n, rem = divmod(len(y) - len(a), len(r))
            if len(y) >= len(a) and rem == 0 and a + (b + a) * n == y:
                yield {"alpha": a, "beta": b, "m": m, "n": n}


def _chain(theta, words):
    """u = (xy)^i, v = (yx)^i, |xy| >= 1."""
    u, v = words
    if not u:
        return
    for r in _roots(u):
        i = len(u) // len(r)
        for cut in range(len(r) + 1):
            x, y = r[:cut], r[cut:]
            if (y + x) * i == v:
                yield {"x": x, "y": y, "i": i}


def _twisted(theta, words):
    """u = (xy)^i z, v = z(θ(y)θ(x))^i, x nonempty, xy primitive, i >= 1."""
    u, v = words
    for lz in range(len(u)):
        z, rest = u[len(u) - lz:], u[: len(u) - lz]
        root = primitive_root(rest)
        xy, i = root.root, root.exponent
        for cut in range(1, len(xy) + 1):
            x, y = xy[:cut], xy[cut:]
            if z + (theta(y) + theta(x)) * i == v:
                yield {"x": x, "y": y, "z": z, "i": i}


_SEARCH = {
    FormFamily.POWERS: lambda th, ws: _powers(th, ws, False),
    FormFamily.PAL_POWERS: lambda th, ws: _powers(th, ws, True),
    FormFamily.CONJ_SPLIT: lambda th, ws: _conj_split(th, ws, False),
    FormFamily.PAL_CONJ_SPLIT: lambda th, ws: _conj_split(th, ws, True),
    FormFamily.PERIODIC: lambda th, ws: _periodic(th, ws, False),
    FormFamily.PAL_PERIODIC: lambda th, ws: _periodic(th, ws, True),
    FormFamily.PAL_WRAP: _pal_wrap,
    FormFamily.SKEW_POWER: _skew_power,
    FormFamily.PAL_PREFIX: _pal_prefix,
    FormFamily.THETA_PREFIX: _theta_prefix,
    FormFamily.PAL_PREFIX_SPLIT: _pal_prefix_split,
    FormFamily.THETA_COMMUTE: _theta_commute,
    FormFamily.THETA_SPLIT: _theta_split,
    FormFamily.PAL_ROOT_PAIR: lambda th, ws: _powers(th, ws, True),
    FormFamily.SKEW_PAIR: _skew_pair,
    FormFamily.ALT_PAL: _alt_pal,
    FormFamily.CHAIN: _chain,
    FormFamily.TWISTED: _twisted,
}


# -- builders -------------------------------------------------------------------


def build(family: FormFamily, params: Params, theta: Involution, arity: int = 2) -> Tuple[Word, ...]:
    """Words described by a parameter assignment (inverse of the search)."""
    p = params
    f = FormFamily(family)
    if f in (FormFamily.POWERS, FormFamily.PAL_POWERS, FormFamily.PAL_ROOT_PAIR):
        return tuple(p["s"] * e for e in p["exponents"])
    if f in (FormFamily.CONJ_SPLIT, FormFamily.PAL_CONJ_SPLIT):
        xy = p["x"] + p["y"]
        return (xy, xy * p["i"] + p["x"], p["y"] + p["x"])[:arity]
    if f in (FormFamily.PERIODIC, FormFamily.PAL_PERIODIC):
        pq = p["p"] + p["q"]
        return pq * (p["j"] + 1) + p["p"], pq * p["j"] + p["p"]
    if f is FormFamily.PAL_WRAP:
        xy = p["x"] + p["y"]
        return xy * (p["j"] + 1) + p["x"], p["y"] + p["x"]
    if f is FormFamily.SKEW_POWER:
        t, s = p["t"], p["s"]
        return (theta(t) + s * p["k"], s * p["n"] + t, s * p["k"] + t)[:arity]
    if f is FormFamily.PAL_PREFIX:
        raise ValueError("PalPrefix needs the suffix word; build it as gamma + w")
    if f is FormFamily.THETA_PREFIX:
        x, y = p["x"], p["y"]
        return (x + y, theta(x), y + theta(x))[:arity]
    if f is FormFamily.PAL_PREFIX_SPLIT:
        x, y = p["x"], p["y"]
        return (x + y, x, y + x)[:arity]
    if f is FormFamily.THETA_COMMUTE:
        x, y = p["x"], p["y"]
        return x + (y + x) * p["i"], y + x
    if f is FormFamily.THETA_SPLIT:
        return p["x"] + p["y"], p["y"] + theta(p["x"])
    if f is FormFamily.SKEW_PAIR:
        s = p["s"]
        ts = theta(s)
        return (ts + s) * p["i"] + ts, (s + ts) * p["k"] + s
    if f is FormFamily.ALT_PAL:
        a, b = p["alpha"], p["beta"]
        return (a + b) * p["m"], a + (b + a) * p["n"]
    if f is FormFamily.CHAIN:
        x, y = p["x"], p["y"]
        return (x + y) * p["i"], (y + x) * p["i"]
    if f is FormFamily.TWISTED:
        x, y, z, i = p["x"], p["y"], p["z"], p["i"]
        return (x + y) * i + z, z + (theta(y) + theta(x)) * i
    raise ValueError(f)


def candidates(family: FormFamily, words: Tuple[Word, ...], theta: Involution) -> Iterator[Params]:
    return _SEARCH[FormFamily(family)](theta, tuple(words))


def match_form(family: FormFamily, words: Tuple[Word, ...], theta: Involution) -> Optional[Match]:
    family = FormFamily(family)
    words = tuple(words)
    for params in candidates(family, words, theta):
        if family is FormFamily.PAL_PREFIX:
            assert params["gamma"] + words[1] == words[0]
        else:
            assert build(family, params, theta, len(words)) == words, (family, params, words)
        return Match(family, params)
    return None


# -- generators -----------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    family: FormFamily
    params: Params = field(hash=False, compare=False)
    words: Tuple[Word, ...]
    language_prefix: Tuple[Word, ...] = ()


def _pals(theta, alphabet, max_len):
    return [w for w in alphabet.words(max_len) if theta(w) == w]


def gen_family(
    family: FormFamily, theta: Involution, word_bound: int = 2, exp_bound: int = 3
) -> Iterator[Instance]:
    """Every instance with parameter words up to word_bound and exponents up to
    exp_bound, skipping instances with an empty word and repeated word tuples."""
    family = FormFamily(family)
    A = theta.alphabet
    words_any = list(A.words(word_bound))
    words_pos = list(A.words(word_bound, 1))
    pals = _pals(theta, A, word_bound)
    exps = range(exp_bound + 1)
    seen = set()

    def emit(params, arity=2, prefix=()):
        ws = build(family, params, theta, arity)
        if any(not w for w in ws) or ws in seen:
            return None
        seen.add(ws)
        return Instance(family, params, ws, prefix)

    def param_space():
        f = family
        if f in (FormFamily.POWERS, FormFamily.PAL_POWERS, FormFamily.PAL_ROOT_PAIR):
            base = pals if f is not FormFamily.POWERS else words_pos
            for s in base:
                if s:
                    for m, n in itertools.product(range(1, exp_bound + 1), repeat=2):
                        yield {"s": s, "exponents": (m, n)}, 2, ()
        elif f in (FormFamily.CONJ_SPLIT, FormFamily.PAL_CONJ_SPLIT):
            xs = pals if f is FormFamily.PAL_CONJ_SPLIT else words_pos
            ys = pals if f is FormFamily.PAL_CONJ_SPLIT else words_any
            for x, y, i in itertools.product(xs, ys, exps):
                yield {"x": x, "y": y, "i": i}, 3, ()
        elif f in (FormFamily.PERIODIC, FormFamily.PAL_PERIODIC):
            base = pals if f is FormFamily.PAL_PERIODIC else words_any
            for p_, q, j in itertools.product(base, base, exps):
                if p_ + q:
                    yield {"p": p_, "q": q, "j": j}, 2, ()
        elif f is FormFamily.PAL_WRAP:
            for x, y, j in itertools.product(pals, pals, exps):
                yield {"x": x, "y": y, "j": j}, 2, ()
        elif f is FormFamily.SKEW_POWER:
            for t, k, n in itertools.product(words_pos, exps, exps):
                yield {"t": t, "s": t + theta(t), "k": k, "n": n}, 3, ()
        elif f is FormFamily.THETA_PREFIX:
            for x, y in itertools.product(words_pos, pals):
                yield {"x": x, "y": y}, 3, ()
        elif f is FormFamily.PAL_PREFIX_SPLIT:
            for x, y in itertools.product(pals, pals):
                yield {"x": x, "y": y}, 3, ()
        elif f is FormFamily.THETA_COMMUTE:
            for x, y, i in itertools.product(pals, pals, exps):
                if y:
                    yield {"x": x, "y": y, "i": i}, 2, ()
        elif f is FormFamily.THETA_SPLIT:
            for x, y in itertools.product(words_pos, words_any):
                yield {"x": x, "y": y}, 2, ()
        elif f is FormFamily.SKEW_PAIR:
            for s, i, k in itertools.product(words_pos, exps, exps):
                yield {"s": s, "i": i, "k": k}, 2, ()
        elif f is FormFamily.ALT_PAL:
            for a, b, m, n in itertools.product(pals, pals, range(1, exp_bound + 1), exps):
                if a + b:
                    yield {"alpha": a, "beta": b, "m": m, "n": n}, 2, ()
        elif f is FormFamily.CHAIN:
            for x, y, i in itertools.product(words_pos, words_any, range(1, exp_bound + 1)):
                prefix = tuple(x + (y + x) * j for j in range(exp_bound))
                yield {"x": x, "y": y, "i": i}, 2, prefix
        elif f is FormFamily.TWISTED:
            for x, y, z, i in itertools.product(words_pos, words_any, words_any, range(1, exp_bound + 1)):
                if primitive_root(x + y).exponent == 1:
                    yield {"x": x, "y": y, "z": z, "i": i}, 2, ()
        elif f is FormFamily.PAL_PREFIX:
            return
        else:
            raise ValueError(f)

    if family is FormFamily.PAL_PREFIX:
        for gamma, w in itertools.product(pals, words_pos):
            ws = (gamma + w, w)
            if ws not in seen:
                seen.add(ws)
                yield Instance(family, {"gamma": gamma}, ws)
        return
    for params, arity, prefix in param_space():
        inst = emit(params, arity, prefix)
        if inst is not None:
            yield inst


EMPTY_WORD = EMPTY
