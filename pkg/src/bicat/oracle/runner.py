"""Catalog lookup, budget control, partitioned execution and report assembly."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Optional, Sequence

from ..errors import BoundTooLargeForBudget, UnknownTheorem
from ..involution import Involution, Word
from . import eq_results, lang_results, word_results
from .base import Ctx, Routine
from .report import Tally, VerificationReport

DEFAULT_BUDGET = 10 ** 8

CATALOG: Dict[str, Routine] = {
    r.id: r for r in word_results.ROUTINES + lang_results.ROUTINES + eq_results.ROUTINES
}

THEOREM_IDS = (
    "omr1", "bicat_phi_closure", "bw_properties", "assoc_sufficient", "lemch", "pro1212", "pro1213",
    "plus_closed", "closed_transfer", "bool_closure", "cl_characterization", "pcj1", "pcj2", "pcj3",
    "pcj4", "lus1", "mr1", "reflem7", "reflem8", "refcor8", "lemconj", "lpow", "gg1a", "gg1b",
    "palpro1", "eqth3", "teq1", "teq2", "teq3", "teq4", "teq5", "lemeq5",
)
assert set(THEOREM_IDS) == set(CATALOG), set(THEOREM_IDS) ^ set(CATALOG)


@dataclass(frozen=True)
class VerifyConfig:
    theorem: str
    theta: Involution
    bounds: Optional[Mapping[str, int]] = None
    max_len: Optional[int] = None
    jobs: int = 1
    probes: Optional[Sequence[Sequence[Word]]] = None
    budget: int = DEFAULT_BUDGET
    pool: str = "all"

    def run(self) -> VerificationReport:
        return verify(self.theorem, self.theta, self.bounds, self.jobs, self.probes, self.max_len,
                      self.budget, self.pool)


def routine(theorem: str) -> Routine:
    try:
        return CATALOG[theorem]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; valid ids: {', '.join(THEOREM_IDS)}") from None


def resolve_bounds(r: Routine, bounds: Optional[Mapping[str, int]], max_len: Optional[int]) -> Dict[str, int]:
    out = dict(r.defaults)
    if max_len is not None:
        for k in r.word_keys:
            out[k] = max_len
    for k, v in (bounds or {}).items():
        if k not in out:
            raise ValueError(f"{r.id} has no bound {k!r}; known: {', '.join(sorted(out))}")
        out[k] = v
    bad = {k: v for k, v in out.items() if not isinstance(v, int) or v < 1}
    if bad:
        raise ValueError(f"bounds must be positive integers: {bad}")
    return out


def _context(theorem, theta, bounds, probes, pool="all") -> Ctx:
    if probes is None:
        probes = lang_results.default_probes(theta) if theorem == "bw_properties" else ()
    return Ctx(theta, bounds, tuple(tuple(tuple(w) for w in p) for p in probes), pool)


def _work(theorem: str, theta: Involution, bounds: dict, probes, pool: str, lo: int, hi: int) -> Tally:
    r = CATALOG[theorem]
    ctx = _context(theorem, theta, bounds, probes, pool)
    tally = Tally()
    r.run(ctx, r.units(ctx)[lo:hi], tally)
    return tally


def _chunks(n: int, jobs: int):
    """Contiguous, scheduling-independent slices of the unit list."""
    pieces = min(n, max(1, jobs) * 4)
    if pieces == 0:
        return []
    edges = [round(i * n / pieces) for i in range(pieces + 1)]
    return [(edges[i], edges[i + 1]) for i in range(pieces) if edges[i] < edges[i + 1]]


def verify(
    theorem: str,
    theta: Involution,
    bounds: Optional[Mapping[str, int]] = None,
    jobs: int = 1,
    probes: Optional[Iterable[Sequence[Word]]] = None,
    max_len: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    pool: str = "all",
) -> VerificationReport:
    """Run one catalog routine exhaustively and return its report.

    ``pool`` restricts the language-equation routines to finite languages or
    to the generated chain/power families; other routines accept only "all".
    """
    r = routine(theorem)
    if pool not in r.pools:
        raise ValueError(f"{theorem} supports language pools {', '.join(r.pools)}, not {pool!r}")
    if r.antimorphic:
        theta.require_antimorphic()
    b = resolve_bounds(r, bounds, max_len)
    probes = None if probes is None else tuple(tuple(tuple(w) for w in p) for p in probes)
    ctx = _context(theorem, theta, b, probes, pool)
    estimate = r.estimate(ctx)
    if estimate > budget:
        raise BoundTooLargeForBudget(
            f"{theorem} with bounds {b} needs about {estimate} cases; the ceiling is {budget}"
        )
    domains = r.plan(ctx)
    n_units = len(r.units(ctx))
    total = Tally()
    if jobs <= 1:
        r.run(ctx, r.units(ctx), total)
    else:
        slices = _chunks(n_units, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(_work, theorem, theta, b, ctx.probes, ctx.pool, lo, hi) for lo, hi in slices]
            for fut in futures:
                total.merge(fut.result())
    if r.finalize is not None:
        r.finalize(ctx, total)
    planned = {p.name: p.cases for p in domains}
    counted = {k: v for k, v in total.cases.items()}
    if any(counted.get(k, 0) != v for k, v in planned.items()) or set(counted) - set(planned):
        raise AssertionError(f"{theorem}: counted cases {counted} differ from the planned domain {planned}")
    profile = {
        "alphabet": list(theta.alphabet.letters),
        "involution": theta.spec(),
        "kind": theta.kind.value,
    }
    if pool != "all":
        profile["language_pool"] = pool
    if ctx.probes:
        profile["probes"] = [[ctx.show(w) for w in p] for p in ctx.probes]
    return VerificationReport.from_tally(theorem, r.claim, profile, b, domains, total)
