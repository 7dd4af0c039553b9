import pytest
from hypothesis import settings

from rblie.termio import bundled_presentation
from rblie.words import Alphabet

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def xy():
    return Alphabet("xy")


@pytest.fixture(scope="session")
def xyz():
    return Alphabet("xyz")


@pytest.fixture(scope="session")
def sl2():
    return bundled_presentation("sl2")


@pytest.fixture(scope="session")
def heisenberg():
    return bundled_presentation("heisenberg")


@pytest.fixture(scope="session")
def abelian1():
    return bundled_presentation("abelian1")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
