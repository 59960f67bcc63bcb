from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from kr2.parsing import parse_poly as P
from kr2.polynomials import (MissingBinding, MissingImage, NotDivisible, NotHomogeneous, Poly,
                             ZeroPolynomial)

from conftest import polys, rationals

W3123 = (6, -12, 9, 2)


def test_arith_examples():
    assert (P("x + t^3") * 0).is_zero()
    assert P("x^3 + z^2") ** 2 == P("x^6 + 2*x^3*z^2 + z^4")
    assert P("x^3 + z^2") * P("y") == P("x^3*y + y*z^2")


def test_exact_div_examples():
    f = P("x^3 + z^2")
    assert P("x^6 + 2*x^3*z^2 + z^4").exact_div(f) == f
    with pytest.raises(NotDivisible):
        P("x").exact_div(f)
    a = -(P("x + t^3") * f)
    assert a.exact_div(f) == -P("x + t^3")
    with pytest.raises(ZeroDivisionError):
        f.exact_div(Poly())


def test_divmod_remainder_is_reduced():
    f = P("x^3 + z^2")
    q, r = P("x^5 + x^3*t + z").divmod(f)
    assert q * f + r == P("x^5 + x^3*t + z")
    lead = f.leading()[0]
    assert all(not all(a <= b for a, b in zip(lead, m)) for m, _ in r.items())


def test_substitute_examples():
    assert P("x + t^3").substitute({"x": P("x"), "t": P("t")}) == P("x + t^3")
    f = P("x^3 + z^2")
    assert f.substitute({"x": 64 * P("x"), "z": 512 * P("z")}) == 2**18 * f
    assert P("t").substitute({"t": P("t") + f}) == P("t + x^3 + z^2")
    with pytest.raises(MissingImage):
        P("x + t").substitute({"x": P("x")})


def test_weight_examples():
    assert P("x + y*(x^3+z^2) + t^3").weight_of(W3123) == 6
    with pytest.raises(NotHomogeneous):
        P("x + z").weight_of(W3123)
    assert P("x^3 + z^2").weight_of(W3123) == 18
    with pytest.raises(ZeroPolynomial):
        Poly().weight_of(W3123)


def test_evaluate_examples():
    rel = P("x + y*(x^3+z^2) + t^3")
    assert rel.evaluate({"x": 1, "y": -1, "z": 1, "t": 1}) == 0
    assert P("x^3 + z^2").evaluate({"x": -1, "z": 1}) == 0
    assert P("x + t^3").evaluate({"x": -1, "t": 1}) == 0
    with pytest.raises(MissingBinding):
        P("x + t").evaluate({"x": 1})


def test_diff_and_coefficients():
    g = P("y^2*t + 3*y*x + z")
    assert g.diff("y") == P("2*y*t + 3*x")
    assert g.coefficients_in("y") == [P("z"), P("3*x"), P("t")]
    assert Poly.from_coefficients(g.coefficients_in("y"), "y") == g


def test_printing_order():
    assert str(P("t^3 + x")) == "x + t^3"
    assert str(-P("x") - P("t^3")) == "-x - t^3"
    assert str(P("1/2*x^2 - z")) == "1/2*x^2 - z"
    assert str(Poly()) == "0"


@given(polys(max_deg=3), polys(max_deg=3))
def test_exact_div_recovers_factor(a, b):
    assume(b)
    assert (a * b).exact_div(b) == a


@given(polys(max_deg=2, max_terms=3), polys(max_deg=2, max_terms=3),
       st.fixed_dictionaries({v: polys(max_deg=2, max_terms=2) for v in "xyzt"}))
def test_substitute_is_ring_hom(a, b, images):
    s = lambda p: p.substitute(images)
    assert s(a * b) == s(a) * s(b)
    assert s(a + b) == s(a) + s(b)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                          st.integers(0, 3)), min_size=1, max_size=3),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
                          st.integers(0, 3)), min_size=1, max_size=3))
def test_weight_additive(ma, mb):
    # single monomials are always homogeneous
    a = Poly({ma[0]: 2})
    b = Poly({mb[0]: -3})
    assert (a * b).weight_of(W3123) == a.weight_of(W3123) + b.weight_of(W3123)
    # homogeneous sums too: f^k is weight 18k
    f = P("x^3 + z^2")
    assert (f * a).weight_of(W3123) == 18 + a.weight_of(W3123)


@given(polys(max_deg=3, max_terms=4),
       st.fixed_dictionaries({v: polys(max_deg=2, max_terms=2) for v in "xyzt"}),
       st.fixed_dictionaries({v: rationals for v in "xyzt"}))
def test_evaluate_commutes_with_substitute(a, images, point):
    lhs = a.substitute(images).evaluate(point)
    moved = {v: images[v].evaluate(point) for v in "xyzt"}
    assert lhs == a.evaluate(moved)
