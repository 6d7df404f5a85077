import random
from functools import lru_cache

import pytest

from shedlab.census import enumerate_connected


@lru_cache(maxsize=None)
def connected(n: int):
    return tuple(enumerate_connected(n))


def connected_upto(n: int):
    return [g for k in range(1, n + 1) for g in connected(k)]


@pytest.fixture(scope="session")
def connected7():
    return connected_upto(7)


@pytest.fixture(scope="session")
def connected8():
    return connected_upto(8)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
