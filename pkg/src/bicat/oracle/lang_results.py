"""Routines for properties of ⇆φ on words and on languages."""
from __future__ import annotations

import math
from typing import Dict, List

from ..involution import DNA, Involution, parse_inline
from ..languages import (
    FiniteLang,
    all_finite_langs,
    closure_violations,
    complement,
    count_all_equal,
    count_balance,
    count_sum,
    flang_bicat,
    flang_bicat_products,
    flang_phi,
    flang_plus_closure_truncated,
    flang_power,
    flang_power_literal,
    image_lang,
    intersection,
    iterative_closure_layers,
    nonempty,
    reversed_lang,
    union,
)
from ..nfa import (
    nfa_apply_involution,
    nfa_enumerate,
    nfa_from_words,
    nfa_intersect,
    nfa_iter_closure,
    nfa_reverse,
)
from ..operations import (
    check_phi_propagating,
    concat_sets,
    left_assoc,
    phi_pair,
    propagation_failures,
    right_assoc,
    strong_bicat,
)
from .base import Routine, count_words, product_routine
from .report import Part


def unit_routine(id, claim, defaults, word_keys, units, cases_for, run, estimate,
                 antimorphic=False, finalize=None):
    """A routine whose domain is a list of units with per-unit case counts."""

    def plan(ctx):
        totals: Dict[str, int] = {}
        for unit in units(ctx):
            for part, n in cases_for(ctx, unit).items():
                totals[part] = totals.get(part, 0) + n
        return [Part(name, n) for name, n in totals.items()]

    return Routine(id, claim, dict(defaults), tuple(word_keys), units, plan, run, estimate, antimorphic, finalize)


def lang_domain(ctx) -> List[FiniteLang]:
    return list(all_finite_langs(ctx.alphabet, ctx.bounds["lang_len"], ctx.bounds["lang_size"]))


def lang_domain_size(ctx) -> int:
    n = count_words(len(ctx.alphabet), ctx.bounds["lang_len"], 1)
    return sum(math.comb(n, s) for s in range(1, min(n, ctx.bounds["lang_size"]) + 1))


def _langs(ctx, langs):
    return [ctx.shows(L.words) for L in langs]


# -- word-level properties ---------------------------------------------------------


def _phi_closure(ctx, ws, tally):
    phi = ctx.theta
    u, v = ws
    S = strong_bicat(phi, u, v)
    bad = [x for x in S if phi(x) not in S]
    if bad:
        tally.fail("result set not closed under the involution", inputs=ctx.named("uv", ws),
                   evaluation={"missing_image_of": ctx.shows(bad)})
        return
    for u1 in phi_pair(phi, u):
        for v1 in phi_pair(phi, v):
            if strong_bicat(phi, u1, v1) != S or strong_bicat(phi, v1, u1) != S:
                tally.fail("result depends on the representative", inputs=ctx.named("uv", ws),
                           evaluation={"u1": ctx.show(u1), "v1": ctx.show(v1)})
                return
    tally.hit("closed and representative-free")


def _assoc_sufficient(ctx, ws, tally):
    phi = ctx.theta
    u, v, w = ws
    U, W = phi_pair(phi, u), phi_pair(phi, w)
    if concat_sets(U, W) != concat_sets(W, U):
        return
    left, right = left_assoc(phi, u, v, w), right_assoc(phi, u, v, w)
    if left != right:
        tally.fail("hypothesis holds but groupings differ", inputs=ctx.named("uvw", ws),
                   evaluation={"left_only": ctx.shows(left - right), "right_only": ctx.shows(right - left)})
    else:
        tally.hit("hypothesis holds and groupings agree", {"inputs": ctx.named("uvw", ws)})


# bw_properties: pairs, triples and explicit probes


def default_probes(theta: Involution):
    """Triples probe associativity, pairs probe letter-count propagation."""
    if theta == DNA:
        p = DNA.alphabet.parse
        return ((p("AG"), p("CA"), p("AC")), (p("ATC"), p("GCTA")))
    return ()


def _bw_units(ctx):
    return (
        [("pair", u) for u in ctx.words("pair", 0)]
        + [("triple", u) for u in ctx.words("triple", 1)]
        + [("probe", pr) for pr in ctx.probes]
    )


def _bw_cases(ctx, unit):
    kind = unit[0]
    if kind == "pair":
        return {"pairs": count_words(len(ctx.alphabet), ctx.bounds["pair"], 0)}
    if kind == "triple":
        return {"triples": count_words(len(ctx.alphabet), ctx.bounds["triple"], 1) ** 2}
    return {"probes": 1}


def _bw_run(ctx, units, tally):
    phi = ctx.theta
    pairs = ctx.words("pair", 0)
    triples = ctx.words("triple", 1)
    for unit in units:
        kind, item = unit
        if kind == "pair":
            u = item
            for v in pairs:
                tally.case("pairs")
                S = strong_bicat(phi, u, v)
                inputs = ctx.named("uv", (u, v))
                if any(len(w) != len(u) + len(v) for w in S):
                    tally.fail("a result has the wrong length", inputs=inputs)
                if not check_phi_propagating(phi, u, v):
                    tally.fail("pair counts are not additive", inputs=inputs)
                if S != strong_bicat(phi, v, u):
                    tally.fail("not commutative", inputs=inputs)
                fails = propagation_failures(phi, u, v)
                if fails:
                    w, a, got, want = fails[0]
                    tally.hit("search: not propagating", {"inputs": inputs, "word": ctx.show(w),
                                                          "letter": a, "count": got, "expected": want})
        elif kind == "triple":
            u = item
            for v in triples:
                for w in triples:
                    tally.case("triples")
                    _assoc_probe(ctx, tally, (u, v, w), "search")
        else:
            tally.case("probes")
            if len(item) == 3:
                _assoc_probe(ctx, tally, item, "probe", required=True)
                bound = ctx.bounds["triple"]
                if all(1 <= len(x) <= bound for x in item):
                    tally.note("probe triple lies inside the searched triple domain",
                               {"inputs": ctx.named("uvw", item)})
            elif len(item) == 2:
                _propagation_probe(ctx, tally, item)
            else:
                raise ValueError("probes are word pairs or triples")


def _assoc_probe(ctx, tally, ws, source, required=False):
    phi = ctx.theta
    left, right = left_assoc(phi, *ws), right_assoc(phi, *ws)
    inputs = ctx.named("uvw", ws)
    if left == right:
        if required:
            tally.fail("probe triple is associative", inputs=inputs, evaluation={"both": ctx.shows(left)})
        return
    example = {"inputs": inputs, "left_only": ctx.shows(left - right), "right_only": ctx.shows(right - left)}
    tally.hit(f"{source}: not associative", example)
    if left - right:
        tally.hit(f"{source}: (u<->v)<->w has extra words", example)
    if right - left:
        tally.hit(f"{source}: u<->(v<->w) has extra words", example)


def _propagation_probe(ctx, tally, ws):
    phi = ctx.theta
    u, v = ws
    inputs = ctx.named("uv", ws)
    S = strong_bicat(phi, u, v)
    fails = propagation_failures(phi, u, v)
    if not check_phi_propagating(phi, u, v):
        tally.fail("probe pair breaks pair-count additivity", inputs=inputs)
    if not fails:
        tally.fail("probe pair is propagating", inputs=inputs, evaluation={"results": ctx.shows(S)})
        return
    tally.hit("probe: not propagating", {
        "inputs": inputs,
        "results": ctx.shows(S),
        "failures": [f"{ctx.show(w)}: |w|_{a}={got}, |u|_{a}+|v|_{a}={want}" for w, a, got, want in fails],
        "phi_propagating": True,
    })


def _bw_finalize(ctx, tally):
    needs = {
        "not propagating": ("search: not propagating", "probe: not propagating"),
        "not associative": ("search: not associative", "probe: not associative"),
        "(u<->v)<->w has extra words": ("search: (u<->v)<->w has extra words", "probe: (u<->v)<->w has extra words"),
        "u<->(v<->w) has extra words": ("search: u<->(v<->w) has extra words", "probe: u<->(v<->w) has extra words"),
    }
    for claim, labels in needs.items():
        if not any(tally.witnesses[x] for x in labels):
            tally.fail("no witness within bounds", claim=claim)


def _bw_estimate(ctx):
    k = len(ctx.alphabet)
    return count_words(k, ctx.bounds["pair"], 0) ** 2 + count_words(k, ctx.bounds["triple"], 1) ** 3


# -- language-level properties -----------------------------------------------------


def _lemch_run(ctx, units, tally):
    phi, D = ctx.theta, lang_domain(ctx)
    for L1 in units:
        for L2 in D:
            tally.case("language pairs")
            got, want = flang_bicat(phi, L1, L2), flang_bicat_products(phi, L1, L2)
            if got != want:
                tally.fail("U<->V differs from the pair-product form", languages=_langs(ctx, (L1, L2)),
                           evaluation={"only_pairwise": ctx.shows(got.words - want.words),
                                       "only_products": ctx.shows(want.words - got.words)})
        tally.hit("left language checked")


def _pro1212_run(ctx, units, tally):
    phi = ctx.theta
    for L in units:
        for n in range(ctx.bounds["power"] + 1):
            tally.case("language x n")
            a, b = flang_power_literal(phi, L, n), flang_power(phi, L, n)
            if a != b:
                tally.fail("recursive power differs from block products", languages=_langs(ctx, (L,)), n=n,
                           evaluation={"recursive_only": ctx.shows(a.words - b.words),
                                       "blocks_only": ctx.shows(b.words - a.words)})
            else:
                tally.hit(f"n={n}")


def _power_pairs(ctx):
    top = ctx.bounds["power"]
    return [(n, m) for n in range(1, top) for m in range(1, top) if n + m <= top]


def _pro1213_run(ctx, units, tally):
    phi = ctx.theta
    for L in units:
        powers = {}
        for n, m in _power_pairs(ctx):
            tally.case("language x (n,m)")
            for k in (n, m, n + m):
                if k not in powers:
                    powers[k] = flang_power(phi, L, k)
            got = flang_bicat(phi, powers[n], powers[m])
            if got != powers[n + m]:
                tally.fail("power addition fails", languages=_langs(ctx, (L,)), n=n, m=m)
            else:
                tally.hit(f"n+m={n + m}")


def _plus_units(ctx):
    return lang_domain(ctx)


def _plus_closure(ctx, L):
    return flang_plus_closure_truncated(ctx.theta, L, ctx.bounds["closure_len"])


def _plus_cases(ctx, L):
    return {"(language, u, v)": len(_plus_closure(ctx, L)) ** 2}


def _plus_run(ctx, units, tally):
    phi, B = ctx.theta, ctx.bounds["closure_len"]
    for L in units:
        P = _plus_closure(ctx, L)
        full = nfa_iter_closure(phi, nfa_from_words(L))
        members = list(P)
        for u in members:
            for v in members:
                tally.case("(language, u, v)")
                S = strong_bicat(phi, u, v)
                short = [w for w in S if len(w) <= B and w not in P]
                outside = [w for w in S if not full.accepts(w)]
                if short or outside:
                    tally.fail("u<->v leaves the plus-closure", languages=_langs(ctx, (L,)),
                               inputs=ctx.named("uv", (u, v)),
                               evaluation={"missing": ctx.shows(set(short) | set(outside))})
        tally.hit("language checked")


def _plus_estimate(ctx):
    return lang_domain_size(ctx) * count_words(len(ctx.alphabet), ctx.bounds["closure_len"], 1) ** 2


# closed_transfer


def _closed_pool(ctx):
    """(name, membership, reverse membership, image membership) for candidate languages."""
    phi = ctx.theta
    A = ctx.alphabet
    pool = []
    letters = list(A.letters)
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            m = nonempty(count_balance(a, b))
            pool.append((f"|w|_{a}=|w|_{b}", m, reversed_lang(m), image_lang(phi, m)))
    for L in all_finite_langs(A, ctx.bounds["lang_len"], ctx.bounds["lang_size"]):
        M = nfa_iter_closure(phi, nfa_from_words(L))
        R, I = nfa_reverse(M), nfa_apply_involution(phi, M)
        pool.append((f"cl({', '.join(L.render())})", M.accepts, R.accepts, I.accepts))
    return pool


def _members(ctx, member, bound):
    return [w for w in ctx.alphabet.words(bound, 1) if member(w)]


def _transfer_units(ctx):
    return list(range(len(_closed_pool(ctx))))


def _transfer_cases(ctx, index):
    name, member, _, _ = _closed_pool(ctx)[index]
    n = len(_members(ctx, member, ctx.bounds["bound"]))
    return {"(language, u, v)": n * n}


def _transfer_run(ctx, units, tally):
    phi, B = ctx.theta, ctx.bounds["bound"]
    pool = _closed_pool(ctx)
    for index in units:
        name, member, rev, img = pool[index]
        members = _members(ctx, member, B)
        tally.case("(language, u, v)", len(members) ** 2)
        violation = next(closure_violations(phi, member, B), None)
        if violation is not None:
            tally.hit("not closed at bound (hypothesis fails)", {"language": name})
            continue
        tally.hit("closed at bound", {"language": name})
        for label, m in (("reverse", rev), ("image", img)):
            bad = next(closure_violations(phi, m, B), None)
            if bad is not None:
                tally.fail(f"{label} language not closed", language=name,
                           inputs=ctx.named("uvw", (bad.u, bad.v, bad.w)))
        bad_cat = next(((u, v) for u in members for v in members if not member(u + v)), None)
        if bad_cat is not None:
            tally.fail("not closed under catenation", language=name, inputs=ctx.named("uv", bad_cat))
        # products of two words from L ∪ φ(L)
        phi_members = set(members) | {phi(w) for w in members}
        blocks = sorted({x + y for x in phi_members for y in phi_members if len(x + y) <= B},
                        key=ctx.alphabet.key)
        for a in blocks:
            for b in blocks:
                missing = [w for w in strong_bicat(phi, a, b) if not member(w)]
                if missing:
                    tally.fail("A<->B leaves L for A, B in L_phi^2", language=name,
                               inputs=ctx.named("ab", (a, b)), evaluation={"missing": ctx.shows(missing)})
                    break


def _transfer_estimate(ctx):
    k = len(ctx.alphabet)
    return (lang_domain_size(ctx) + k * k) * count_words(k, ctx.bounds["bound"], 1) ** 2


# bool_closure


def _pair_profile(kind: str, third: bool = False) -> Involution:
    return parse_inline("a<->b" + (" c->c" if third else "") + " " + kind)


def _bool_pool(ctx):
    phi = ctx.theta
    pool = []
    letters = list(ctx.alphabet.letters)
    for i, a in enumerate(letters):
        for b in letters[i + 1:]:
            m = nonempty(count_balance(a, b))
            if next(closure_violations(phi, m, ctx.bounds["bound"]), None) is None:
                pool.append((f"|w|_{a}=|w|_{b}", m, None))
    for w in ctx.words("lang_len", 1):
        L = FiniteLang(ctx.alphabet, frozenset([w]))
        M = nfa_iter_closure(phi, nfa_from_words(L))
        pool.append((f"cl({ctx.show(w)})", M.accepts, M))
    return pool


def _bool_units(ctx):
    n = len(_bool_pool(ctx))
    return [("complement", None), ("union", None)] + [("intersection", i) for i in range(n)]


def _bool_cases(ctx, unit):
    if unit[0] == "intersection":
        return {"intersection pairs": len(_bool_pool(ctx)) - unit[1]}
    return {f"{unit[0]} example": 1}


def _reproduce(ctx, tally, phi, languages, target, label, witness, bound):
    """Confirm each language is closed at the bound, then search the target for violations."""
    A = phi.alphabet
    for name, member in languages:
        bad = next(closure_violations(phi, member, bound), None)
        if bad is not None:
            tally.fail(f"{label}: {name} is not closed at the bound",
                       inputs={"u": A.render(bad.u), "v": A.render(bad.v), "w": A.render(bad.w)})
            return
    found = list(closure_violations(phi, target, bound))
    if not found:
        tally.fail(f"{label}: no violation found", bound=bound)
        return
    first = found[0]
    tally.hit(f"{label}: violations found", {
        "profile": phi.spec(),
        "count": len(found),
        "first": {"u": A.render(first.u), "v": A.render(first.v), "w": A.render(first.w)},
    })
    keys = {(v.u, v.v, v.w) for v in found}
    if tuple(A.parse(x) for x in witness) in keys:
        tally.hit(f"{label}: known violation found by search",
                  {"u": witness[0], "v": witness[1], "w": witness[2]})
    else:
        tally.fail(f"{label}: known violation not found by search",
                   inputs={"u": witness[0], "v": witness[1], "w": witness[2]})


def _bool_run(ctx, units, tally):
    kind = ctx.theta.kind.value
    for unit in units:
        if unit[0] == "complement":
            tally.case("complement example")
            phi = _pair_profile(kind)
            L1 = nonempty(count_balance("a", "b"))
            _reproduce(ctx, tally, phi, [("|w|_a=|w|_b", L1)], complement(L1), "complement",
                       ("aba", "bab", "ababab"), ctx.bounds["complement_bound"])
        elif unit[0] == "union":
            tally.case("union example")
            phi = _pair_profile(kind, third=True)
            L1 = nonempty(count_sum("a", "b", "c"))
            L2 = nonempty(count_all_equal("a", "b", "c"))
            _reproduce(ctx, tally, phi, [("|w|_a+|w|_b=|w|_c", L1), ("|w|_a=|w|_b=|w|_c", L2)],
                       union(L1, L2), "union", ("abc", "bcca", "abcbcca"), ctx.bounds["union_bound"])
        else:
            pool = _bool_pool(ctx)
            i = unit[1]
            for j in range(i, len(pool)):
                tally.case("intersection pairs")
                (n1, m1, a1), (n2, m2, a2) = pool[i], pool[j]
                member = nfa_intersect(a1, a2).accepts if a1 is not None and a2 is not None else intersection(m1, m2)
                bad = next(closure_violations(ctx.theta, member, ctx.bounds["bound"]), None)
                if bad is not None:
                    tally.fail("intersection not closed", languages=[n1, n2],
                               inputs=ctx.named("uvw", (bad.u, bad.v, bad.w)))
                else:
                    tally.hit("intersection closed")


def _bool_estimate(ctx):
    k = len(ctx.alphabet)
    n = k * k + count_words(k, ctx.bounds["lang_len"], 1)
    return n * n * count_words(k, ctx.bounds["bound"], 1) ** 2 + 3 ** (2 * ctx.bounds["union_bound"])


# cl_characterization


def _cl_run(ctx, units, tally):
    phi, B = ctx.theta, ctx.bounds["closure_len"]
    steps = B.bit_length() + 1
    for L in units:
        tally.case("languages")
        layers = iterative_closure_layers(phi, L, steps, B)
        joined = layers.union()
        plus = flang_plus_closure_truncated(phi, L, B)
        auto = nfa_enumerate(nfa_iter_closure(phi, nfa_from_words(L)), B)
        name = _langs(ctx, (L,))
        if any(flang_phi(phi, layer) != layer for layer in layers.layers):
            tally.fail("a layer is not closed under the involution", languages=name)
        if joined.words != plus.words or plus.words != auto.words:
            tally.fail("layer union, plus-closure and automaton disagree", languages=name,
                       evaluation={"layers": ctx.shows(joined.words), "plus": ctx.shows(plus.words),
                                   "automaton": ctx.shows(auto.words)})
        else:
            tally.hit("three constructions agree", {"language": name[0], "words": len(plus)})


LANG = {"lang_len": 2, "lang_size": 2}


def _per_lang(part):
    return lambda ctx, L: {part: 1}


ROUTINES = [
    product_routine("bicat_phi_closure", "x in u<->v iff phi(x) in u<->v; independent of representatives",
                    "uv", {"u": 3, "v": 3}, _phi_closure, antimorphic=False, min_len=0),
    unit_routine("bw_properties",
                 "length increasing, not propagating, phi-propagating, commutative, not associative, "
                 "neither right nor left inclusive",
                 {"pair": 3, "triple": 2}, ("pair",), _bw_units, _bw_cases, _bw_run, _bw_estimate,
                 finalize=_bw_finalize),
    product_routine("assoc_sufficient", "u_phi w_phi = w_phi u_phi makes the two groupings equal",
                    "uvw", {"u": 3, "v": 3, "w": 3}, _assoc_sufficient, antimorphic=False),
    unit_routine("lemch", "U<->V = U_phi V_phi ∪ V_phi U_phi", LANG, ("lang_len",), lang_domain,
                 lambda ctx, L: {"language pairs": lang_domain_size(ctx)}, _lemch_run,
                 lambda ctx: lang_domain_size(ctx) ** 2),
    unit_routine("pro1212", "the recursive power equals all products of n words of L_phi",
                 {**LANG, "power": 4}, ("lang_len",), lang_domain,
                 lambda ctx, L: {"language x n": ctx.bounds["power"] + 1}, _pro1212_run,
                 lambda ctx: lang_domain_size(ctx) * (ctx.bounds["power"] + 1)),
    unit_routine("pro1213", "L^(n) <-> L^(m) = L^(n+m)", {**LANG, "power": 5}, ("lang_len",), lang_domain,
                 lambda ctx, L: {"language x (n,m)": len(_power_pairs(ctx))}, _pro1213_run,
                 lambda ctx: lang_domain_size(ctx) * ctx.bounds["power"] ** 2),
    unit_routine("plus_closed", "u, v in the plus-closure give u<->v inside it",
                 {**LANG, "closure_len": 6}, ("lang_len",), _plus_units, _plus_cases, _plus_run,
                 _plus_estimate),
    unit_routine("closed_transfer",
                 "a closed L is catenation-closed, L^R and phi(L) are closed, L_phi^n <-> L_phi^n stays in L",
                 {**LANG, "bound": 4}, ("bound",), _transfer_units, _transfer_cases, _transfer_run,
                 _transfer_estimate),
    unit_routine("bool_closure",
                 "intersections of closed languages are closed; complement and union need not be",
                 {"lang_len": 2, "bound": 4, "complement_bound": 3, "union_bound": 4}, ("bound",),
                 _bool_units, _bool_cases, _bool_run, _bool_estimate),
    unit_routine("cl_characterization", "the iterative closure equals (L_phi)^+",
                 {**LANG, "closure_len": 8}, ("lang_len",), lang_domain, _per_lang("languages"), _cl_run,
                 lambda ctx: lang_domain_size(ctx) * 2 ** ctx.bounds["closure_len"]),
]
