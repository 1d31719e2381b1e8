import pytest

from fibfreeze.words import FactorOracle, fib_number, fib_word

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def oracle():
    # large enough for bispecial levels up to p = 12
    return FactorOracle.build(fib_number(12) + fib_number(11))


@pytest.fixture(scope="session")
def small_oracle():
    return FactorOracle.build(40)


@pytest.fixture(scope="session")
def long_omega():
    """An independently generated long Fibonacci word, used by brute-force oracles."""
    return fib_word(20)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
