from __future__ import annotations

import pytest

from relpbf.pbf import build


@pytest.fixture(scope="session")
def p11():
    return build(1, 1)


@pytest.fixture(scope="session")
def p22():
    return build(2, 2)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
