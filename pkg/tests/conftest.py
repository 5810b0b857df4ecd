import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from catsl2.multipoly import MultiPoly
from catsl2.parsing import parse_expression
from catsl2.qscalar import LaurentPoly
from catsl2.symfunc import SymFunc

settings.register_profile("repo", max_examples=50, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

FROZEN_PATH = Path(__file__).parent / "oracles" / "frozen.json"


@pytest.fixture(scope="session")
def frozen():
    return json.loads(FROZEN_PATH.read_text())


def laurent(d):
    return LaurentPoly({int(e): Fraction(c) for e, c in d.items()})


def symfunc(d):
    return SymFunc({tuple(int(p) for p in k.split(",")) if k else (): int(c) for k, c in d.items()})


def xpoly(text, nvars):
    """Polynomial in x1..x_nvars from a sympy-style string."""
    text = text.replace("**", "^")

    def var(name, i):
        assert name == "x"
        return MultiPoly.gen(nvars, i)

    return parse_expression(text, lambda c: MultiPoly.const(nvars, c), var)


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", help="rewrite tests/golden from current output")


@pytest.fixture
def update_golden(request):
    return request.config.getoption("--update-golden")


_ACCEPTANCE = {}


@pytest.fixture
def acceptance_lines():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for i in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[i])
