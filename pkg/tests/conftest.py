import sys
from functools import lru_cache

import pytest

from lieindex.chevalley import build_algebra
from lieindex.rootsystem import build_root_system


@lru_cache(maxsize=None)
def algebra(family, rank):
    return build_algebra(build_root_system((family, rank)))


@lru_cache(maxsize=None)
def roots(family, rank):
    return build_root_system((family, rank))


@pytest.fixture
def A1():
    return algebra("A", 1)


@pytest.fixture
def A2():
    return algebra("A", 2)


@pytest.fixture
def D4():
    return algebra("D", 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
