import math

import pytest

_CRITERIA: dict[str, tuple[int, str, str]] = {}


def brute_fundamental_unit(d):
    """Smallest y >= 1 with 1 + d*y^2 a perfect square."""
    y = 1
    while True:
        t = 1 + d * y * y
        x = math.isqrt(t)
        if x * x == t:
            return x, y
        y += 1


def nonsquares(limit):
    return [d for d in range(2, limit + 1) if math.isqrt(d) ** 2 != d]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        prev = _CRITERIA.get(item.nodeid)
        if prev is None or prev[2] == "PASS":
            _CRITERIA[item.nodeid] = (number, title, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    by_number: dict[int, tuple[str, str]] = {}
    for number, title, status in _CRITERIA.values():
        old = by_number.get(number)
        if old is None or status == "FAIL":
            by_number[number] = (title, status)
    for number in sorted(by_number):
        title, status = by_number[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
