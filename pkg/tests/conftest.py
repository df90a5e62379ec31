import random

import pytest

from goppacodes import get_field, goppa_code, parse_poly


@pytest.fixture(scope="session")
def gf256():
    return get_field(8)


@pytest.fixture(scope="session")
def gf16():
    return get_field(4)


@pytest.fixture(scope="session")
def record_codes(gf256):
    """The three record Goppa codes over GF(2^8) with maximal support."""
    return {
        n: goppa_code(gf256, parse_poly(expr, gf256))
        for n, expr in ((239, "(x^17+1)^6"), (240, "(x^16+x)^6"), (241, "(x^15+1)^6"))
    }


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, desc = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num:>2}: {desc}")
