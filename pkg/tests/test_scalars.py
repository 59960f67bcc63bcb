from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from kr2.scalars import (Cyclo, MixedCyclotomicOrders, cyclotomic_minimal_poly, scalar_pow,
                         scalar_to_json, scalar_from_json, zeta)

from conftest import cyclos, nonzero_rationals, rationals


def ints(seq):
    return [int(c) for c in seq]


def test_phi_1_and_3():
    assert ints(cyclotomic_minimal_poly(1)) == [-1, 1]
    assert ints(cyclotomic_minimal_poly(3)) == [1, 1, 1]


def test_phi_6_matches_long_division():
    # divide w^6 - 1 by Phi_1 Phi_2 Phi_3 = (w - 1)(w + 1)(w^2 + w + 1)
    w = sympy.Symbol("w")
    q, r = sympy.div(w**6 - 1, (w - 1) * (w + 1) * (w**2 + w + 1), w)
    assert r == 0
    assert ints(cyclotomic_minimal_poly(6)) == [int(c) for c in reversed(sympy.Poly(q, w).all_coeffs())]
    assert ints(cyclotomic_minimal_poly(6)) == [1, -1, 1]


@pytest.mark.parametrize("n", range(1, 13))
def test_phi_n_against_sympy_and_root(n):
    w = sympy.Symbol("w")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, w), w).all_coeffs()[::-1]
    assert ints(cyclotomic_minimal_poly(n)) == [int(c) for c in expected]
    assert sympy.rem(w**n - 1, sympy.cyclotomic_poly(n, w), w) == 0
    assert zeta(n) ** n == 1
    assert len(cyclotomic_minimal_poly(n)) - 1 == sympy.totient(n)


def test_rational_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert scalar_pow(Fraction(2), 16) == 65536


def test_zeta3_examples():
    z = zeta(3)
    assert z * z ** 2 == 1
    inv = 1 / z
    assert inv.coeffs == (Fraction(-1), Fraction(-1))  # -w - 1
    assert inv * z == 1
    assert inv == z ** 2
    assert scalar_pow(z, 4) == z
    assert scalar_pow(z ** 2, 6) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclo(5, []).inverse()
    with pytest.raises(ZeroDivisionError):
        zeta(5) / 0
    with pytest.raises(ZeroDivisionError):
        scalar_pow(Fraction(0), -1)
    with pytest.raises(ZeroDivisionError):
        scalar_pow(Cyclo(3, []), -2)


def test_mixed_orders_rejected():
    with pytest.raises(MixedCyclotomicOrders):
        zeta(3) + zeta(5)
    with pytest.raises(MixedCyclotomicOrders):
        zeta(3) * zeta(4)


def test_rational_promotes():
    z = zeta(5)
    assert (z + Fraction(1, 2)) - z == Fraction(1, 2)
    assert Fraction(2) * z == z + z
    assert 3 - z == -(z - 3)


@given(cyclos(7), cyclos(7), cyclos(7))
def test_field_axioms_q_zeta7(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1


@given(cyclos(12), st.integers(-6, 6))
def test_pow_matches_repeated_product(a, k):
    if not a and k < 0:
        return
    expected = Cyclo(12, [1])
    base = a if k >= 0 else a.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert scalar_pow(a, k) == expected


@given(rationals, nonzero_rationals)
def test_rationals_stay_reduced(a, b):
    for v in (a + b, a * b, a / b):
        assert v.denominator > 0
        from math import gcd
        assert gcd(abs(v.numerator), v.denominator) == 1


@given(cyclos(9))
def test_json_roundtrip(a):
    assert scalar_from_json(scalar_to_json(a)) == a
