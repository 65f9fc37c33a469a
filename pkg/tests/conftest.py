import pytest

_criteria = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, text): acceptance criterion a test checks"
    )


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[item.nodeid] = (mark.args[0], mark.args[1])


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.when == "call" or report.failed or report.skipped:
        _outcomes.setdefault(report.nodeid, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    by_number = {}
    for nodeid, (number, text) in _criteria.items():
        if nodeid not in _outcomes:
            continue
        ok = all(o == "passed" for o in _outcomes[nodeid])
        entry = by_number.setdefault(number, [text, True, []])
        entry[1] &= ok
        if not ok:
            entry[2].append(nodeid.rsplit("::", 1)[-1])
    terminalreporter.section("acceptance criteria")
    for number in sorted(by_number):
        text, ok, failed = by_number[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def default_rows():
    from binent import sweep

    return sweep()
