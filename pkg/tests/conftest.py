import re

import pytest

from metricdeform import catalog

_CRITERIA = {}


@pytest.fixture(scope="session")
def osp():
    return catalog.get("osp(1,2)").algebra


@pytest.fixture(scope="session")
def g221():
    return catalog.get("g_2|2_1").algebra


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = re.match(r"test_criterion_(\d+)_", item.name)
    if m and rep.when == "call":
        _CRITERIA[int(m.group(1))] = (rep.passed, item.name)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok, name = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({name})")
