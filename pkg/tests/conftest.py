from __future__ import annotations

import pytest

_RESULTS: dict[int, tuple[str, str, float | None]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        elapsed = dict(item.user_properties).get("elapsed")
        _RESULTS[number] = ("PASS" if report.passed else "FAIL", title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, elapsed = _RESULTS[number]
        timing = f" ({elapsed:.2f} s)" if elapsed is not None else ""
        terminalreporter.write_line(f"criterion {number}: {status} - {title}{timing}")
