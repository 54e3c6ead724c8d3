import os
import random
import sys

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from gaussline import GaussianInt, GaussianLine  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.integers(-60, 60)


@st.composite
def gaussian_ints(draw, bound=60, nonzero=False):
    x = draw(st.integers(-bound, bound))
    y = draw(st.integers(-bound, bound))
    if nonzero and x == 0 and y == 0:
        x = 1
    return GaussianInt(x, y)


@st.composite
def primitive_lines(draw, bound=30, nonzero_delta=False):
    a, b = draw(st.integers(-bound, bound)), draw(st.integers(-bound, bound))
    c, d = draw(st.integers(-bound, bound)), draw(st.integers(-bound, bound))
    if (c, d) == (0, 0):
        c = 1
    line = GaussianLine.from_point_direction(GaussianInt(a, b), GaussianInt(c, d))
    from hypothesis import assume

    assume(line.primitive)
    if nonzero_delta:
        assume(line.Delta != 0)
    return line


@pytest.fixture
def rng():
    return random.Random(20240601)
