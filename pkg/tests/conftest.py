import random

import pytest

_RESULTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number = dict(report.user_properties).get("criterion")
    if number is None:
        return
    title = dict(report.user_properties)["title"]
    prev = _RESULTS.get(number, (title, "PASS"))[1]
    status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
    _RESULTS[number] = (title, status)


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        request.node.user_properties.append(("criterion", number))
        request.node.user_properties.append(("title", title))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, status = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}")


@pytest.fixture
def rng():
    return random.Random(20190612)
