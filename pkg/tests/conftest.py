import pytest

from hyperjac.curve import AffinePoint, Curve
from hyperjac.field import PrimeField
from hyperjac.mumford import from_points

# ~62-bit prime used by the large-field tests (2**62 - 57).
P62 = 4611686018427387847

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def F7():
    return PrimeField(7)


@pytest.fixture
def F10007():
    return PrimeField(10007)


@pytest.fixture
def e7():
    """y^2 = x^3 + 1 over F_7, the running genus-1 example."""
    return Curve.from_coeffs(7, 1, [1, 0, 0, 1])


@pytest.fixture
def e7_pair(e7):
    return from_points(e7, [AffinePoint(2, 3)]), from_points(e7, [AffinePoint(1, 3)])


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
