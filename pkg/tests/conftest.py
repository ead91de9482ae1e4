import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from freedouble.doubles import make_double  # noqa: E402
from freedouble.words import commutator  # noqa: E402

PARITY_C = [(1, 1), (2,), (1, 2, -1)]


@pytest.fixture(scope="session")
def parity_double():
    """C = kernel of F2 -> Z/2, a -> 1, b -> 0."""
    return make_double(2, PARITY_C)


@pytest.fixture(scope="session")
def sample_doubles():
    return {
        "<b>": make_double(2, [(2,)]),
        "<[a,b]>": make_double(2, [commutator((1,), (2,))]),
        "ker(Z/2)": make_double(2, PARITY_C),
    }


@pytest.fixture(scope="session")
def a5_double():
    from freedouble.witness import build_perfect_quotient_double

    return build_perfect_quotient_double()


ACCEPTANCE_LINES = []


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"{status} criterion {crit}: {dict(report.user_properties).get('summary', '')}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
