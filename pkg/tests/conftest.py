import pytest

from mckayfloer.groups import close
from mckayfloer.io.builtins import builtin

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _ACCEPTANCE.get(report.nodeid)
    if marker is not None:
        number, title = marker
        _ACCEPTANCE[report.nodeid] = (number, title, "PASS" if report.passed else "FAIL")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            _ACCEPTANCE[item.nodeid] = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    rows = [v for v in _ACCEPTANCE.values() if len(v) == 3]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(rows):
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")


_GROUPS = {}


@pytest.fixture(scope="session")
def group_of():
    def get(name):
        if name not in _GROUPS:
            _GROUPS[name] = close(builtin(name).generator_matrices())
        return _GROUPS[name]

    return get
