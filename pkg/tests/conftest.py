import functools

import pytest

from oddhit.cohit import build_quotient_blocks
from oddhit.glinv import invariants_of

FIXTURE_HPM = [(2, 3, 18), (3, 3, 5), (3, 3, 13), (3, 3, 65), (3, 5, 21), (2, 13, 10)]

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, text = mark.args
    entry = _CRITERIA.setdefault(n, {"text": text, "ok": True, "tests": 0})
    if rep.when == "call":
        entry["tests"] += 1
    if rep.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        e = _CRITERIA[n]
        status = "PASS" if e["ok"] and e["tests"] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {e['text']} ({e['tests']} checks)")


@functools.lru_cache(maxsize=None)
def blocks_for(h, p, m, mode="edge_sum", order="balanced"):
    return build_quotient_blocks(h, p, m, mode, order)


@functools.lru_cache(maxsize=None)
def invariants_for(h, p, m, twist, mode="edge_sum"):
    return invariants_of(blocks_for(h, p, m, mode), twist)
