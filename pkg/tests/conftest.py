from functools import lru_cache

import pytest

from priestley.corpus import corpus_lattices
from priestley.topspace import build_space


@lru_cache(maxsize=None)
def corpus():
    return tuple(corpus_lattices())


@pytest.fixture(scope="session")
def lattices():
    return corpus()


def sierpinski():
    return build_space(2, [[], [1], [0, 1]])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
