import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}   # nodeid -> (number, title)
_outcomes = {}   # number -> (passed, seconds)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criteria[item.nodeid] = m.args


def pytest_runtest_logreport(report):
    args = _criteria.get(report.nodeid)
    if args is None:
        return
    num = args[0]
    passed, secs = _outcomes.get(num, (True, 0.0))
    if report.failed:
        passed = False
    if report.when == "call" or report.failed:
        secs += report.duration
    _outcomes[num] = (passed and not report.skipped, secs)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    titles = {args[0]: args[1] for args in _criteria.values()}
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        passed, secs = _outcomes[num]
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] criterion {num:2d}: {titles[num]} ({secs:.2f}s)")
