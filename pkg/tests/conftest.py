import pytest

from grbrauer.io import load_corpus
from grbrauer.presentation import string_presentation

GRAPH_NAMES = ["g_t2", "g_star3", "g_t7", "g_c4", "g_hh", "two_m2_tree", "square", "balanced_star"]


@pytest.fixture(scope="session")
def corpus():
    return {n: load_corpus(n) for n in GRAPH_NAMES}


@pytest.fixture(scope="session")
def t2(corpus):
    return corpus["g_t2"]


@pytest.fixture(scope="session")
def t2_I2(t2):
    return string_presentation(t2, "I2")


@pytest.fixture(scope="session")
def kronecker():
    return load_corpus("kronecker.sqp")


@pytest.fixture(scope="session")
def twoloop():
    return load_corpus("twoloop.sqp")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = next((m for n, m in list(sys.modules.items()) if n.endswith("test_acceptance")), None)
    rows = [mod.RESULTS[k] for k in sorted(mod.RESULTS)] if mod else []
    if rows:
        terminalreporter.section("acceptance criteria")
        for row in rows:
            terminalreporter.write_line(row)
