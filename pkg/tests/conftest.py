import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from constdepth.monomial import PolyContext, minimalize  # noqa: E402
from oracles import REGRESSION  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "data")


def ideal(n, gens, field=None):
    ctx = PolyContext(n) if field is None else PolyContext(n, field)
    return minimalize(gens, ctx)


@pytest.fixture(params=sorted(REGRESSION))
def regression_ideal(request):
    n, gens = REGRESSION[request.param]
    return ideal(n, gens)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
