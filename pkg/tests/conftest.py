import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from convspace.order import build_poset, poset_from_matrix, _close
from convspace.topology import from_preorder

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def posets(draw, max_size=4):
    """Random partial orders: edges only go from lower to higher index."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return build_poset(range(n), pairs)


@st.composite
def preorders(draw, max_size=4):
    n = draw(st.integers(1, max_size))
    rel = np.array([[draw(st.booleans()) for _ in range(n)] for _ in range(n)], dtype=bool)
    return poset_from_matrix(range(n), _close(rel))


@st.composite
def spaces(draw, max_size=4, t0=True):
    P = draw(posets(max_size) if t0 else preorders(max_size))
    return from_preorder(P)


@pytest.fixture(scope="session")
def suite_records():
    from convspace.suite import run_suite
    return run_suite(seed=0)
