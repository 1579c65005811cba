import random

import pytest
from hypothesis import settings, strategies as st

from dilationk.linalg import IntegerMatrix
from dilationk.stability import certify_dilation

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Dilation matrices that come up again and again below.
EXAMPLES = {
    "neg2": [[0, 1], [2, 0]],
    "gauss": [[1, 1], [-1, 1]],
    "det5": [[2, 1], [-1, 2]],
    "neg5": [[2, -1], [1, -3]],
}


def int_matrices(d_min=1, d_max=4, lo=-5, hi=5):
    return st.integers(d_min, d_max).flatmap(
        lambda d: st.lists(st.lists(st.integers(lo, hi), min_size=d, max_size=d),
                           min_size=d, max_size=d)).map(lambda rows: IntegerMatrix(rows))


def dilations(d_min=1, d_max=3, lo=-5, hi=5):
    return int_matrices(d_min, d_max, lo, hi).filter(lambda a: certify_dilation(a).is_dilation)


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
