import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from kr2.coordring import make_params
from kr2.polynomials import Poly
from kr2.scalars import Cyclo

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

TUPLES = [(3, 1, 2, 3), (2, 1, 3, 4), (2, 2, 3, 4)]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)


def cyclos(n: int):
    deg = len(Cyclo(n, [1]).coeffs)
    return st.lists(rationals, min_size=deg, max_size=deg).map(lambda cs: Cyclo(n, cs))


@st.composite
def monomials(draw, variables: str, max_deg: int):
    m = [0, 0, 0, 0]
    budget = draw(st.integers(0, max_deg))
    for v in variables:
        e = draw(st.integers(0, budget))
        m["xyzt".index(v)] = e
        budget -= e
    return tuple(m)


def polys(variables: str = "xyzt", max_deg: int = 4, max_terms: int = 5, coeffs=rationals):
    return st.dictionaries(monomials(variables, max_deg), coeffs, max_size=max_terms).map(Poly)


@pytest.fixture(params=TUPLES, ids=lambda t: "kr%d%d%d%d" % t)
def params(request):
    return make_params(*request.param)


@pytest.fixture
def kr3123():
    return make_params(3, 1, 2, 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
