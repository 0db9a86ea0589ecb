"""Collects acceptance-criterion outcomes and prints them after the run."""
import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    # setup errors count as failures; a passing setup says nothing yet
    if report.when != "call" and report.passed:
        return
    number, title = marker.args
    detail = ""
    if not report.passed and call.excinfo is not None:
        text = str(call.excinfo.value).strip()
        detail = text.splitlines()[0] if text else call.excinfo.typename
    _RESULTS[number] = (title, report.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        line = f"AC{number} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
