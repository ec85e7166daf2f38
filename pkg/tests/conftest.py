import pytest

from slword import ExtensionField, IntegersMod, PrimeField

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def Z6():
    return IntegersMod(6)


@pytest.fixture
def F3():
    return PrimeField(3)


@pytest.fixture
def GF4():
    return ExtensionField(2, (1, 1, 1))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
