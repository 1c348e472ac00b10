import pytest

from curvebox import PlaneCurve

# filled by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def hyperbola7():
    return PlaneCurve.parse("x*y - 1", 7)


@pytest.fixture
def elliptic7():
    return PlaneCurve.parse("y^2 - x^3 - x", 7)
