"""Routines for word equations and for u ⇆θ v = v ⇆θ w."""
from __future__ import annotations

from ..errors import NoDecomposition
from ..operations import strong_bicat, strong_cat_commutes
from ..words import (
    CommonPalindromicRoot,
    Split,
    common_root,
    decompose_conjugacy,
    palindromic_pair_classify,
    theta_commute_decompose,
    theta_conjugate_decompose,
)
from .base import conclude, form, product_routine
from .forms import FormFamily as F

BINARY = {"x": 5, "y": 5}
TERNARY = {"u": 4, "v": 4, "w": 4}


# -- commutation of ⊗ -----------------------------------------------------------


def _omr1(ctx, ws, tally):
    u, v = ws
    c = strong_cat_commutes(ctx.theta, u, v)
    structural = c.witness is not None
    inputs = ctx.named("uv", ws)
    if c.equal != structural:
        tally.fail(
            "set comparison and structural condition disagree",
            inputs=inputs,
            evaluation={"sets_equal": c.equal, "condition": c.witness or "none"},
        )
    elif c.equal:
        tally.hit(c.witness, {"inputs": inputs})
    else:
        tally.hit("unequal", None)


# -- classical lemmas -----------------------------------------------------------


def _lemconj(ctx, ws, tally):
    u, v, w = ws
    if u + v != v + w:
        return
    found = conclude(ctx, tally, "uvw", ws, [("x(yx) split", form(ctx.theta, F.CONJ_SPLIT, lambda t: t))])
    d = decompose_conjugacy(u, v, w)
    if d.rebuild() != (u, v, w):
        tally.fail("library decomposition does not rebuild", inputs=ctx.named("uvw", ws))
    elif found:
        tally.hit("library decomposition rebuilds")


def _lpow(ctx, ws, tally):
    x, y = ws
    if x + y != y + x:
        return
    conclude(ctx, tally, "xy", ws, [("common word", form(ctx.theta, F.POWERS, lambda t: t))])
    root = common_root(x, y)
    if root is None or len(x) % len(root) or len(y) % len(root):
        tally.fail("library common root disagrees", inputs=ctx.named("xy", ws))


def _reflem7(ctx, ws, tally):
    x, y = ws
    if y + x + x == x + x + y:
        conclude(ctx, tally, "xy", ws, [("common word", form(ctx.theta, F.POWERS, lambda t: t))])


def _gg1a(ctx, ws, tally):
    th = ctx.theta
    u, v, w = ws
    if u + v != th(v) + w:
        return
    cases = [
        ("u=xy, w=y t(x)", form(th, F.THETA_SPLIT, lambda t: (t[0], t[2]))),
        ("u=t(w)", lambda t: {} if t[0] == th(t[2]) else None),
    ]
    found = conclude(ctx, tally, "uvw", ws, cases)
    got = theta_conjugate_decompose(th, u, v, w)
    ok = (u == th(w)) if not isinstance(got, Split) else (got.x + got.y == u and got.y + th(got.x) == w)
    if not ok:
        tally.fail("library decomposition is wrong", inputs=ctx.named("uvw", ws))
    elif isinstance(got, Split) != any(label.startswith("u=xy") for label, _ in found):
        tally.fail("library branch disagrees with matcher", inputs=ctx.named("uvw", ws))


def _gg1b(ctx, ws, tally):
    th = ctx.theta
    u, v = ws
    if u + v != th(v) + u:
        return
    conclude(ctx, tally, "uv", ws, [("u=x(yx)^i, v=yx", form(th, F.THETA_COMMUTE, lambda t: t))])
    d = theta_commute_decompose(th, u, v)
    if d.rebuild() != (u, v) or th(d.x) != d.x or th(d.y) != d.y:
        tally.fail("library decomposition is wrong", inputs=ctx.named("uv", ws))


def _palpro1(ctx, ws, tally):
    th = ctx.theta
    x, y = ws
    if x + y != th(y) + th(x) or y + x != th(x) + th(y):
        return
    cases = [
        ("common palindrome", form(th, F.PAL_ROOT_PAIR, lambda t: t)),
        ("skew pair", form(th, F.SKEW_PAIR, lambda t: t)),
    ]
    found = conclude(ctx, tally, "xy", ws, cases)
    try:
        got = palindromic_pair_classify(th, x, y)
    except NoDecomposition:
        got = None
    if found and got is None:
        tally.fail("library classifier found nothing", inputs=ctx.named("xy", ws))
    elif got is not None:
        label = "common palindrome" if isinstance(got, CommonPalindromicRoot) else "skew pair"
        if label not in [f[0] for f in found]:
            tally.fail("library classifier disagrees", inputs=ctx.named("xy", ws), evaluation={"library": label})


def _eqth3(ctx, ws, tally):
    th = ctx.theta
    x, y = ws
    if x + y == th(y) + th(x) and x + th(y) == y + th(x):
        conclude(ctx, tally, "xy", ws, [("(ab)^m, a(ba)^n", form(th, F.ALT_PAL, lambda t: t))])


def _pal_powers(th):
    return [("common palindrome", form(th, F.PAL_POWERS, lambda t: t[:2]))]


def _lus1(ctx, ws, tally):
    th = ctx.theta
    x, y = ws
    if x + x + th(y) == th(y) + th(x) + x:
        conclude(ctx, tally, "xy", ws, _pal_powers(th))


def _reflem8(ctx, ws, tally):
    th = ctx.theta
    x, y = ws
    for label, holds in (
        ("xxy=yx t(x)", x + x + y == y + x + th(x)),
        ("xxy=y t(x) x", x + x + y == y + th(x) + x),
    ):
        if holds:
            tally.hit("hypothesis " + label)
            conclude(ctx, tally, "xy", ws, _pal_powers(th), evaluation={"equation": label})


def _refcor8(ctx, ws, tally):
    th = ctx.theta
    x, y, i = ws
    lhs = x + (x + y) * i
    for label, rhs in (
        ("x(xy)^i=(yx)^i t(x)", (y + x) * i + th(x)),
        ("x(xy)^i=(y t(x))^i x", (y + th(x)) * i + x),
    ):
        if lhs == rhs:
            tally.hit("hypothesis " + label)
            conclude(ctx, tally, "xy", (x, y), _pal_powers(th), evaluation={"equation": label, "i": i})


# -- u ⇆θ v = v ⇆θ w -------------------------------------------------------------


def _eq(th, ws):
    u, v, w = ws
    return strong_bicat(th, u, v) == strong_bicat(th, v, w)


def _cond(pred):
    return lambda ws: {} if pred(ws) else None


def _guarded(th, family, pick, guard):
    return form(th, family, pick, guard)


def pcj_cases(th, which):
    """Conclusion cases for the four conjugacy propositions, as (label, check)."""
    u_is_w = lambda t: t[0] == t[2]
    u_is_tw = lambda t: t[0] == th(t[2])
    uv = lambda t: t[:2]
    if which == "pcj1":
        return [
            ("1 u=s^m=w, v=s^n", _guarded(th, F.POWERS, uv, u_is_w)),
            ("2 u=p^m=w, v=p^n, p in P", _guarded(th, F.PAL_POWERS, uv, u_is_w)),
            ("3 u=xy, v=(xy)^i x, w=yx, x,y in P", form(th, F.PAL_CONJ_SPLIT, lambda t: t)),
        ]
    if which == "pcj2":
        return [
            ("1 u=t(w)=(pq)^(j+1)p, v=(pq)^j p", _guarded(th, F.PERIODIC, uv, u_is_tw)),
            ("2 u=w=(pq)^(j+1)p, v=(pq)^j p, p,q in P", _guarded(th, F.PAL_PERIODIC, uv, u_is_w)),
            ("3 u=a^m=w, v=a^n, a in P", _guarded(th, F.PAL_POWERS, uv, u_is_w)),
            ("4 u=w=xy, v=(xy)^i x, x,y in P", _guarded(th, F.PAL_CONJ_SPLIT, uv, u_is_w)),
        ]
    if which == "pcj3":
        return [
            ("1 u=t(w), v=gw, g in P", _guarded(th, F.PAL_PREFIX, lambda t: (t[1], t[2]), u_is_tw)),
            ("2 u=(xy)^(j+1)x=w, v=yx, x,y in P", _guarded(th, F.PAL_WRAP, uv, u_is_w)),
            ("3 u=xy=t(w), v=t(x), y in P", _guarded(th, F.THETA_PREFIX, uv, u_is_tw)),
            ("4 u=xy=t(w), v=x, x,y in P", _guarded(th, F.PAL_PREFIX_SPLIT, uv, u_is_tw)),
            ("5 u=a^m=w, v=a^n, a in P", _guarded(th, F.PAL_POWERS, uv, u_is_w)),
            ("6 u=t(t)s^k=t(w), v=s^n t", _guarded(th, F.SKEW_POWER, uv, u_is_tw)),
        ]
    if which == "pcj4":
        return [
            ("1 u=w, v=g t(w), g in P", _guarded(th, F.PAL_PREFIX, lambda t: (t[1], th(t[2])), u_is_w)),
            ("2 u=(xy)^(j+1)x=w, v=yx, x,y in P", _guarded(th, F.PAL_WRAP, uv, u_is_w)),
            ("3 u=xy, v=t(x), w=y t(x), y in P", form(th, F.THETA_PREFIX, lambda t: t)),
            ("4 u=xy, v=x, w=yx, x,y in P", form(th, F.PAL_PREFIX_SPLIT, lambda t: t)),
            ("5 u=a^m=w, v=a^n, a in P", _guarded(th, F.PAL_POWERS, uv, u_is_w)),
            ("6 u=t(t)s^k, v=s^n t, w=s^k t", form(th, F.SKEW_POWER, lambda t: t)),
        ]
    raise ValueError(which)


HYPOTHESIS = {
    "pcj1": lambda th, u, v, w: u + v == v + w,
    "pcj2": lambda th, u, v, w: u + v == v + th(w),
    "pcj3": lambda th, u, v, w: u + v == th(v) + w,
    "pcj4": lambda th, u, v, w: u + v == th(v) + th(w),
}

# pcj2 and pcj4 are pcj1 and pcj3 with w replaced by θ(w); used only to annotate
# counterexamples, never to decide them.
TRANSFER = {"pcj2": "pcj1", "pcj4": "pcj3"}


def _pcj(which):
    def check(ctx, ws, tally):
        th = ctx.theta
        u, v, w = ws
        if not HYPOTHESIS[which](th, u, v, w) or not _eq(th, ws):
            return
        cases = pcj_cases(th, which)

        def transferred(t):
            if which not in TRANSFER:
                return None
            moved = (t[0], t[1], th(t[2]))
            labels = [lab for lab, _ in _matches(pcj_cases(th, TRANSFER[which]), moved)]
            return {"cases_after_w_to_t(w)": labels}

        found = conclude(
            ctx, tally, "uvw", ws, cases,
            evaluation={"u<->v": ctx.shows(strong_bicat(th, u, v))},
            extra=transferred,
        )
        if which in ("pcj3", "pcj4") and found:
            labels = [f[0] for f in found]
            if labels == ["2 u=(xy)^(j+1)x=w, v=yx, x,y in P"]:
                tally.note("matched only case 2 with p read as x", {"inputs": ctx.named("uvw", ws)})

    return check


def _matches(cases, ws):
    out = []
    for label, check in cases:
        p = check(ws)
        if p is not None:
            out.append((label, p))
    return out


def mr1_cases(th):
    u_is_w = lambda t: t[0] == t[2]
    u_is_tw = lambda t: t[0] == th(t[2])
    uv = lambda t: t[:2]
    return [
        ("1 u=w", _cond(u_is_w)),
        ("2 u=t(w)", _cond(u_is_tw)),
        ("3 u=s^m=w, v=s^n", _guarded(th, F.POWERS, uv, u_is_w)),
        ("4 u=t(w)=(pq)^(j+1)p, v=(pq)^j p", _guarded(th, F.PERIODIC, uv, u_is_tw)),
        ("5 u=w=(pq)^(j+1)p, v=(pq)^j p, p,q in P", _guarded(th, F.PAL_PERIODIC, uv, u_is_w)),
        ("6 u=w=xy, v=(xy)^i x, x,y in P", _guarded(th, F.PAL_CONJ_SPLIT, uv, u_is_w)),
        ("7 u=(xy)^(j+1)x=w, v=yx, x,y in P", _guarded(th, F.PAL_WRAP, uv, u_is_w)),
        ("8 u=xy=t(w), v=t(x), y in P", _guarded(th, F.THETA_PREFIX, uv, u_is_tw)),
        ("9 u=xy=t(w), v=x, x,y in P", _guarded(th, F.PAL_PREFIX_SPLIT, uv, u_is_tw)),
        ("10 u=t(t)s^k=t(w), v=s^n t", _guarded(th, F.SKEW_POWER, uv, u_is_tw)),
    ]


def _mr1(ctx, ws, tally):
    th = ctx.theta
    u, v, w = ws
    equal = _eq(th, ws)
    compact = u == w or u == th(w)
    inputs = ctx.named("uvw", ws)
    found = _matches(mr1_cases(th), ws)
    evaluation = {
        "u<->v": ctx.shows(strong_bicat(th, u, v)),
        "v<->w": ctx.shows(strong_bicat(th, v, w)),
    }
    if equal != compact:
        tally.fail("equality differs from u in {w, t(w)}", inputs=inputs, evaluation=evaluation)
    if equal and not found:
        tally.fail("equality holds but no listed condition matches", inputs=inputs, evaluation=evaluation)
    if not equal and found:
        tally.fail(
            "a listed condition matches but equality fails",
            inputs=inputs,
            evaluation={**evaluation, "conditions": [f[0] for f in found]},
        )
    if equal:
        tally.hit("equal")
        for label, params in found:
            tally.hit(label, {"inputs": inputs, "params": ctx.params(params)})
    else:
        tally.hit("unequal")


def _refcor8_exps(ctx):
    return list(range(1, ctx.bounds["i"] + 1))


ROUTINES = [
    product_routine("omr1", "u⊗v = v⊗u iff u=v, u=θ(v), or common θ-palindromic root",
                    "uv", {"u": 4, "v": 4}, _omr1),
    product_routine("lemconj", "uv=vw gives u=xy, v=(xy)^k x, w=yx",
                    "uvw", TERNARY, _lemconj, antimorphic=False),
    product_routine("lpow", "xy=yx gives powers of a common word",
                    "xy", BINARY, _lpow, antimorphic=False),
    product_routine("reflem7", "yxx=xxy gives powers of a common word",
                    "xy", BINARY, _reflem7, antimorphic=False),
    product_routine("gg1a", "uv=θ(v)w gives u=xy, w=yθ(x) or u=θ(w)",
                    "uvw", TERNARY, _gg1a),
    product_routine("gg1b", "uv=θ(v)u gives u=x(yx)^i, v=yx with x,y θ-palindromes",
                    "uv", {"u": 5, "v": 5}, _gg1b),
    product_routine("palpro1", "xy=θ(y)θ(x), yx=θ(x)θ(y): common θ-palindrome or skew pair",
                    "xy", BINARY, _palpro1),
    product_routine("eqth3", "xy=θ(y)θ(x), xθ(y)=yθ(x): x=(ab)^m, y=a(ba)^n",
                    "xy", BINARY, _eqth3),
    product_routine("lus1", "xxθ(y)=θ(y)θ(x)x gives a common θ-palindromic root",
                    "xy", BINARY, _lus1),
    product_routine("reflem8", "xxy=yxθ(x) or xxy=yθ(x)x gives a common θ-palindromic root",
                    "xy", BINARY, _reflem8),
    product_routine("refcor8", "x(xy)^i=(yx)^iθ(x) or x(xy)^i=(yθ(x))^i x gives a common θ-palindromic root",
                    ("x", "y", "i"), {**BINARY, "i": 3}, _refcor8, extra={"i": _refcor8_exps}),
    product_routine("pcj1", "uv=vw and u⇆v=v⇆w: listed conclusion forms",
                    "uvw", TERNARY, _pcj("pcj1")),
    product_routine("pcj2", "uv=vθ(w) and u⇆v=v⇆w: listed conclusion forms",
                    "uvw", TERNARY, _pcj("pcj2")),
    product_routine("pcj3", "uv=θ(v)w and u⇆v=v⇆w: listed conclusion forms",
                    "uvw", TERNARY, _pcj("pcj3")),
    product_routine("pcj4", "uv=θ(v)θ(w) and u⇆v=v⇆w: listed conclusion forms",
                    "uvw", TERNARY, _pcj("pcj4")),
    product_routine("mr1", "u⇆θv = v⇆θw iff one of the ten listed conditions",
                    "uvw", TERNARY, _mr1),
]
