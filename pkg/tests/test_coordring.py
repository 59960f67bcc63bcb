from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kr2.coordring import (ConstraintViolation, ideal_I_membership, ideal_J_membership,
                           make_params, normal_form, ring_eq)
from kr2.oracles import linear_I_membership
from kr2.parsing import parse_poly as P
from kr2.polynomials import NotDivisible, Poly

from conftest import TUPLES, polys


def test_make_params_examples():
    p = make_params(3, 1, 2, 3)
    assert p.weights == (6, -12, 9, 2)
    assert make_params(2, 2, 3, 4).weights == (12, -36, 8, 3)
    with pytest.raises(ConstraintViolation, match="gcd\\(a2, d\\)"):
        make_params(2, 1, 2, 3)


@pytest.mark.parametrize("args, needle", [
    ((1, 1, 2, 3), "d >= 2"),
    ((3, 0, 2, 3), "l >= 1"),
    ((3, 1, 1, 3), "a2 >= 2"),
    ((5, 1, 3, 2), "a2 <= a3"),
    ((5, 1, 2, 4), "gcd\\(a2, a3\\)"),
])
def test_constraint_messages(args, needle):
    with pytest.raises(ConstraintViolation, match=needle):
        make_params(*args)


def test_defining_poly_examples(params):
    assert make_params(3, 1, 2, 3).P == P("x + x^3*y + y*z^2 + t^3")
    assert make_params(2, 2, 3, 4).P == P("x + y*(x^2+z^3)^2 + t^4")
    assert params.P.weight_of(params.weights) == params.a2 * params.a3


def test_normal_form_examples(kr3123):
    assert normal_form(kr3123.P, kr3123).is_zero()
    assert normal_form(P("y*(x^3+z^2)"), kr3123).to_poly() == P("-x - t^3")
    nf = normal_form(P("y*(x^3+z^2)^2"), kr3123)
    assert nf.to_poly() == -(P("x + t^3") * P("x^3 + z^2"))
    assert len(nf.coeffs) == 1


def test_normal_form_invariant(params):
    g = P("y^3*(x^5 + z^4 + t) + y^2*x^2*z^3 + 7")
    nf = normal_form(g, params)
    for c in nf.coeffs[1:]:
        if c:
            with pytest.raises(NotDivisible):
                c.exact_div(params.f_l)
    assert not nf.coeffs or nf.coeffs[-1]


def test_ring_eq_examples(params, kr3123):
    assert ring_eq(P("y") * params.f_l, -params.x_plus_t, params)
    assert not ring_eq(P("x"), P("z"), params)
    assert ring_eq(params.P * P("y^2 + t"), Poly(), params)


def test_I_examples(kr3123):
    r = ideal_I_membership(P("x + t^3"), kr3123)
    assert r.member and (r.A, r.B) == (Poly(), Poly.const(1))
    r = ideal_I_membership(P("x^3 + z^2"), kr3123)
    assert r.member and (r.A, r.B) == (Poly.const(1), Poly())
    assert not ideal_I_membership(P("x"), kr3123)
    # the reason: x -> -t^3 leaves -t^3, which z^2 - t^9 does not divide
    with pytest.raises(NotDivisible):
        P("-t^3").exact_div(P("z^2 - t^9"))


def test_J_examples(kr3123):
    j = ideal_J_membership(kr3123.f_l, kr3123)
    assert j.member and j.witness == Poly.const(1)
    j = ideal_J_membership(P("x + t^3"), kr3123)
    assert j.member and j.witness == P("-y")
    assert not ideal_J_membership(P("x"), kr3123)


def test_J_member_with_reduced_y_coefficient(kr3123):
    # f * x^2 y^2 normalizes to a y-coefficient not divisible by x + t^3
    g = kr3123.f_l * P("x^2*y^2")
    j = ideal_J_membership(g, kr3123)
    assert j.member
    assert ring_eq(kr3123.f_l * j.witness, g, kr3123)


@pytest.mark.parametrize("tup", TUPLES)
@given(polys("xyzt", 6, 5), polys("xyzt", 3, 3))
def test_normal_form_properties(tup, g, r):
    p = make_params(*tup)
    nf = normal_form(g, p)
    assert normal_form(nf.to_poly(), p) == nf
    assert normal_form(g, p, strategy="bottom-up") == nf
    assert normal_form(g + r * p.P, p) == nf


@pytest.mark.parametrize("tup", TUPLES)
@given(polys("xzt", 4, 3), polys("xzt", 4, 3), polys("xzt", 8, 2))
def test_I_agrees_with_linear_oracle(tup, A, B, noise):
    p = make_params(*tup)
    for Q in (A * p.f_l + B * p.x_plus_t, A * p.f_l + B * p.x_plus_t + noise):
        fast = ideal_I_membership(Q, p)
        slow, sA, sB = linear_I_membership(Q, p)
        assert fast.member == slow
        if slow:
            assert sA * p.f_l + sB * p.x_plus_t == Q
            assert fast.A * p.f_l + fast.B * p.x_plus_t == Q


@pytest.mark.parametrize("tup", TUPLES)
@given(polys("xzt", 3, 3), polys("xzt", 3, 3), st.integers(0, 3))
def test_J_witness_verifies(tup, A, B, k):
    p = make_params(*tup)
    y = Poly.var("y")
    g = (A * p.f_l + B * p.x_plus_t) * y ** k + p.P * A
    j = ideal_J_membership(g, p)
    assert j.member
    assert ring_eq(p.f_l * j.witness, g, p)
