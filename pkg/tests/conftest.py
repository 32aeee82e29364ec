import pytest
from hypothesis import settings, strategies as st

from bicat.involution import parse_inline

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

SWAP = parse_inline("a<->b antimorphic")
REV = parse_inline("a->a b->b antimorphic")
SWAP_MORPHIC = parse_inline("a<->b morphic")
PROFILES = {"swap": SWAP, "rev": REV}


def words(theta, max_len=6, min_len=0):
    return st.lists(st.sampled_from(theta.alphabet.letters), min_size=min_len, max_size=max_len).map(tuple)


def w(text):
    return tuple(text)


@pytest.fixture(params=["swap", "rev"])
def theta(request):
    return PROFILES[request.param]


# -- acceptance summary ------------------------------------------------------------

_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "seconds": 0.0})
    if report.when == "call":
        entry["seconds"] += report.duration
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        e = _CRITERIA[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {e['seconds']:7.2f}s  {e['title']}")
