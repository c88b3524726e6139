import sys

import pytest

from updown import oracle


@pytest.fixture(scope="session")
def count_tables():
    """Brute-force count tables for n = 1..9, shared across tests."""
    return {n: oracle.counts_all(n) for n in range(1, 10)}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is not None and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
