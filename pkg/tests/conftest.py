import math

import pytest
from hypothesis import settings, strategies as st

from dubins_line import CanonicalProblem

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

headings = st.floats(min_value=0.0, max_value=2 * math.pi, exclude_max=True)


@st.composite
def problems(draw, r=None):
    radius = draw(st.floats(0.5, 80.0)) if r is None else r
    ratio = draw(st.floats(4.0, 20.0))
    return CanonicalProblem(ratio * radius, radius, draw(headings), draw(headings))


# (psi_i deg, psi_f deg, type, y_opt, length), d = 200 m, r = 50 m
FIGURES = [
    (10.0, 40.0, "RSL", 59.1782, 225.9038),
    (50.0, 170.0, "RSR", -29.6198, 223.3400),
    (150.0, 60.0, "LSL", -18.3013, 210.2385),
    (160.0, 130.0, "LSR", -44.5968, 216.8691),
]


@pytest.fixture(params=FIGURES, ids=lambda f: f[2])
def figure(request):
    psi_i, psi_f, kind, y, length = request.param
    return CanonicalProblem.from_degrees(200.0, 50.0, psi_i, psi_f), kind, y, length
