import pytest

from semigraded import corpus
from semigraded.exact import GF, QQ
from semigraded.presentation import make_presentation

ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def load():
    return corpus.load


@pytest.fixture(scope="session")
def three_dim():
    return corpus.load("3dim")


@pytest.fixture(scope="session")
def weyl_q():
    return corpus.load("weyl_q")


@pytest.fixture(scope="session")
def weyl_gf2():
    return corpus.load("weyl_gf2")


@pytest.fixture(scope="session")
def non_confluent():
    # y*x -> x*y + z together with z*x -> 2*x*z breaks the overlap z*y*x
    return make_presentation(
        QQ,
        [("x", 1), ("y", 1), ("z", 1)],
        {(1, 0): {(1, 1, 0): 1, (0, 0, 1): 1}, (2, 0): {(1, 0, 1): 2}, (2, 1): {(0, 1, 1): 1}},
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
