import json

import pytest

from bicat.errors import BoundTooLargeForBudget, KindMismatch, UnknownTheorem
from bicat.oracle import ALL_PASS, CATALOG, COUNTEREXAMPLE, THEOREM_IDS, verify
from bicat.oracle.report import RECORD_CAP, Tally
from bicat.oracle.runner import VerifyConfig, _chunks, resolve_bounds
from bicat.oracle.word_results import ROUTINES as WORD_ROUTINES
from bicat.involution import DNA

from conftest import PROFILES, SWAP, SWAP_MORPHIC

WORD_IDS = {r.id for r in WORD_ROUTINES}

# Runs the oracle reports as failing; each is analysed in the decisions ledger.
KNOWN_COUNTEREXAMPLES = {
    ("pcj2", "swap"), ("pcj2", "rev"), ("pcj4", "swap"), ("pcj4", "rev"),
    ("bw_properties", "rev"), ("teq3", "swap"), ("teq4", "swap"),
}


def small(theorem):
    return 3 if theorem in WORD_IDS else None


@pytest.mark.parametrize("profile", ["swap", "rev"])
@pytest.mark.parametrize("theorem", THEOREM_IDS)
def test_catalog_outcomes(theorem, profile):
    report = verify(theorem, PROFILES[profile], max_len=small(theorem))
    expected = COUNTEREXAMPLE if (theorem, profile) in KNOWN_COUNTEREXAMPLES else ALL_PASS
    assert report.status == expected, report.to_text()
    assert report.cases_checked == sum(p.cases for p in report.domains)
    assert report.cases_checked > 0
    if expected == COUNTEREXAMPLE:
        assert report.counterexamples and len(report.counterexamples) <= RECORD_CAP


@pytest.mark.parametrize("theorem", ["teq3", "teq4"])
def test_finite_pool_holds_the_counterexamples(theorem):
    assert verify(theorem, SWAP, pool="generated").passed
    assert not verify(theorem, SWAP, pool="finite").passed


def test_report_json_shape():
    report = verify("omr1", SWAP, max_len=2)
    data = json.loads(report.to_json())
    assert list(data)[:7] == ["theorem", "claim", "profile", "bounds", "domains", "cases_checked", "status"]
    assert data["status"] == ALL_PASS
    assert data["profile"]["involution"] == "a<->b antimorphic"


def test_jobs_do_not_change_reports():
    for theorem in ("mr1", "pcj2", "lemch"):
        one = verify(theorem, SWAP, jobs=1, max_len=small(theorem)).to_json()
        many = verify(theorem, SWAP, jobs=3, max_len=small(theorem)).to_json()
        assert one == many


def test_unknown_theorem_lists_ids():
    with pytest.raises(UnknownTheorem, match="mr1"):
        verify("nosuch", SWAP)


def test_budget_ceiling():
    with pytest.raises(BoundTooLargeForBudget):
        verify("mr1", SWAP, max_len=12)
    with pytest.raises(BoundTooLargeForBudget):
        verify("mr1", SWAP, budget=10)


def test_bound_validation():
    r = CATALOG["mr1"]
    assert resolve_bounds(r, {"u": 2}, None)["u"] == 2
    assert resolve_bounds(r, None, 2) == {"u": 2, "v": 2, "w": 2}
    with pytest.raises(ValueError):
        resolve_bounds(r, {"zz": 1}, None)
    with pytest.raises(ValueError):
        resolve_bounds(r, {"u": 0}, None)


def test_antimorphic_routines_reject_morphic():
    with pytest.raises(KindMismatch):
        verify("mr1", SWAP_MORPHIC, max_len=2)
    assert verify("lemconj", SWAP_MORPHIC, max_len=3).passed


def test_pool_validation():
    with pytest.raises(ValueError):
        verify("mr1", SWAP, pool="generated")


def test_dna_probes_give_known_witnesses():
    report = verify("bw_properties", DNA, max_len=3)
    assert report.passed
    text = report.to_json()
    assert "CACTAC" in text and "GATGCTA" in text


def test_config_runs():
    assert VerifyConfig("omr1", SWAP, max_len=2).run().passed


def test_chunks_cover_units():
    for n in (0, 1, 7, 100):
        for jobs in (1, 3, 8):
            pieces = _chunks(n, jobs)
            covered = [i for lo, hi in pieces for i in range(lo, hi)]
            assert covered == list(range(n))


def test_tally_merge_and_cap():
    a, b = Tally(), Tally()
    for i in range(RECORD_CAP):
        a.fail("x", i=i)
    b.fail("y", i=-1)
    a.case("p", 3)
    b.case("p", 2)
    a.merge(b)
    assert a.failures == RECORD_CAP + 1
    assert len(a.counterexamples) == RECORD_CAP
    assert a.cases["p"] == 5
