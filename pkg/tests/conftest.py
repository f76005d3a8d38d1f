import pytest

from discopula import enumerate_quasi_copulas


@pytest.fixture(scope="session")
def q_all():
    """All quasi-copulas for n = 1..5, keyed by n."""
    return {n: list(enumerate_quasi_copulas(n)) for n in range(1, 6)}


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _ACCEPTANCE.items():
        name = nodeid.split("::", 1)[1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
