from __future__ import annotations

import pytest

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if report.when == "setup" and report.skipped:
        _RESULTS[n] = (title, "SKIP")
    elif report.when == "call" or (report.when == "setup" and report.failed):
        _RESULTS[n] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        title, status = _RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
