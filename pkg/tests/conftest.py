import numpy as np
import pytest
from hypothesis import strategies as st

from lexsmd import _kernels
from lexsmd.graph import build_graph


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    if connected and n > 1:
        # hang every vertex off an earlier one
        for v in range(1, n):
            edges.append((draw(st.integers(0, v - 1)), v))
    return build_graph(n, edges)


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    return _kernels.BACKENDS[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20131)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
