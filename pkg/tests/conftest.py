import sys

import pytest

from hopfgauge.hopf import drinfeld_double, group_algebra, standard_group, trivial_qt


@pytest.fixture(scope="session")
def dz2():
    return drinfeld_double(group_algebra(standard_group("Z2")))


@pytest.fixture(scope="session")
def fs3():
    K = group_algebra(standard_group("S3"))
    return K, trivial_qt(K)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        LINES = mod.LINES
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
