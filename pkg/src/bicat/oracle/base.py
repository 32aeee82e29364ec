"""Shared machinery for verification routines."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..involution import Involution, Word
from .forms import FormFamily, match_form
from .report import Part, Tally


@dataclass(frozen=True)
class Ctx:
    theta: Involution
    bounds: Dict[str, int] = field(hash=False)
    probes: Tuple[Tuple[Word, ...], ...] = ()
    pool: str = "all"

    @property
    def alphabet(self):
        return self.theta.alphabet

    def words(self, key: str, min_len: int = 1) -> List[Word]:
        return list(self.alphabet.words(self.bounds[key], min_len))

    def show(self, w: Word) -> str:
        return self.alphabet.render(w)

    def shows(self, words: Iterable[Word]) -> List[str]:
        return [self.show(w) for w in self.alphabet.sorted(words)]

    def named(self, names: Sequence[str], ws: Sequence[Word]) -> dict:
        return {n: self.show(w) for n, w in zip(names, ws)}

    def params(self, params: dict) -> dict:
        out = {}
        for k, v in params.items():
            if isinstance(v, tuple) and (not v or isinstance(v[0], str)):
                out[k] = self.show(v)
            elif isinstance(v, tuple):
                out[k] = list(v)
            else:
                out[k] = v
        return out


@dataclass(frozen=True)
class Routine:
    id: str
    claim: str
    defaults: Dict[str, int]
    word_keys: Tuple[str, ...]
    units: Callable[[Ctx], list]
    plan: Callable[[Ctx], List[Part]]
    run: Callable[[Ctx, list, Tally], None]
    estimate: Callable[[Ctx], int]
    antimorphic: bool = True
    finalize: Optional[Callable[[Ctx, Tally], None]] = None
    pools: Tuple[str, ...] = ("all",)


# -- conclusion cases -------------------------------------------------------------

Case = Tuple[str, Callable[[Tuple[Word, ...]], Optional[dict]]]


def form(theta: Involution, family: FormFamily, pick: Callable[[tuple], tuple], guard=None):
    """A conclusion case backed by a form matcher on selected words."""

    def check(ws):
        if guard is not None and not guard(ws):
            return None
        m = match_form(family, pick(ws), theta)
        return None if m is None else m.params

    return check


def all_matches(cases: Sequence[Case], ws) -> List[Tuple[str, dict]]:
    out = []
    for label, check in cases:
        params = check(ws)
        if params is not None:
            out.append((label, params))
    return out


def conclude(ctx: Ctx, tally: Tally, names, ws, cases: Sequence[Case], evaluation=None, extra=None):
    """Record which conclusion cases hold; a tuple matching none is a counterexample."""
    found = all_matches(cases, ws)
    inputs = ctx.named(names, ws)
    if not found:
        record = {"inputs": inputs}
        if evaluation:
            record["evaluation"] = evaluation
        if extra:
            record.update(extra(ws) or {})
        tally.fail("no conclusion case matches", **record)
        return found
    for label, params in found:
        tally.hit(label, {"inputs": inputs, "params": ctx.params(params)})
    return found


# -- product-domain routines --------------------------------------------------------


def product_routine(
    id: str,
    claim: str,
    names: Sequence[str],
    defaults: Dict[str, int],
    check: Callable[[Ctx, tuple, Tally], None],
    antimorphic: bool = True,
    min_len: int = 1,
    extra: Optional[Dict[str, Callable[[Ctx], list]]] = None,
) -> Routine:
    """Exhaustive check over the product of word domains; ``extra`` supplies
    non-word variables (e.g. exponents) as explicit value lists."""
    extra = extra or {}

    def domain(ctx, name):
        if name in extra:
            return extra[name](ctx)
        return ctx.words(name, min_len)

    def units(ctx):
        return domain(ctx, names[0])

    def plan(ctx):
        sizes = {n: len(domain(ctx, n)) for n in names}
        return [Part("tuples", math.prod(sizes.values()), sizes)]

    def run(ctx, unit_slice, tally):
        rest = [domain(ctx, n) for n in names[1:]]
        for first in unit_slice:
            for tail in itertools.product(*rest):
                tally.case("tuples")
                check(ctx, (first,) + tail, tally)

    def estimate(ctx):
        return math.prod(_count_words(ctx, defaults_key=n, extra=extra, min_len=min_len) for n in names)

    word_keys = tuple(n for n in names if n not in extra)
    return Routine(id, claim, dict(defaults), word_keys, units, plan, run, estimate, antimorphic)


def _count_words(ctx, defaults_key, extra, min_len):
    if defaults_key in extra:
        return len(extra[defaults_key](ctx))
    return count_words(len(ctx.alphabet), ctx.bounds[defaults_key], min_len)


def count_words(k: int, max_len: int, min_len: int = 0) -> int:
    return sum(k ** n for n in range(min_len, max_len + 1))
