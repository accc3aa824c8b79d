import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ascyclo.algebra import Poly, RatFunc, field_from_q

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_Q = (2, 3, 4, 9)


@pytest.fixture(params=SMALL_Q, ids=lambda q: f"q{q}")
def field(request):
    return field_from_q(request.param)


def polys(F, max_deg=6, nonzero=False):
    coeffs = st.lists(st.integers(0, F.q - 1), min_size=0, max_size=max_deg + 1)
    out = coeffs.map(lambda cs: Poly(F, cs))
    if nonzero:
        out = out.filter(lambda f: not f.is_zero())
    return out


def ratfuncs(F, max_deg=6):
    return st.builds(RatFunc, polys(F, max_deg), polys(F, max_deg, nonzero=True))


def fields():
    return st.sampled_from(SMALL_Q).map(field_from_q)


# acceptance lines collected by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
